//! f_1 <= f_2 <= ... <= f: envelopes climb toward f as the slope grows,
//! and reach it exactly on a finite grid.

use infconv::analysis::check_monotone_in_n;
use infconv::envelope::envelope_sequence;
use infconv::grid::{Grid, GridFunction, NormKind};

fn main() -> infconv::Result<()> {
    let grid = Grid::line(-2.0, 2.0, 0.25)?;
    let f = GridFunction::from_fn(&grid, |x| if x[0] < -1.0 { f64::INFINITY } else { (2.0 * x[0]).cos() * 3.0 })?;
    let seq = envelope_sequence(&f, 30, NormKind::L2)?;

    for n in [1, 2, 5, 10, 30] {
        let env = &seq[n - 1];
        let exact = env.values().iter().zip(f.values()).filter(|(a, b)| a == b).count();
        println!("n = {n:2}: min {:.4}, equal to f at {exact}/{} points", env.envelope.min_value(), grid.len());
    }
    println!("{}", check_monotone_in_n(&seq, &f).to_json());
    Ok(())
}
