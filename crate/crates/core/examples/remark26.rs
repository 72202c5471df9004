//! With a single -inf value the conical envelope collapses to -inf
//! everywhere, so minimizers are no longer preserved.

use infconv::grid::Grid;
use infconv::repro::remark26_counterexample;

fn main() -> infconv::Result<()> {
    let grid = Grid::line(-1.0, 4.0, 0.25)?;
    let r = remark26_counterexample(&grid, 1.0)?;
    println!("envelope is -inf everywhere: {}", r.envelope_all_neg_inf);
    println!("infimum kept:   {}", r.infimum_check.passed);
    println!("minimizers kept: {} ({})", r.minimizer_check.passed, r.minimizer_check.detail);
    println!("spurious minimizer: {:?}", r.spurious_minimizer);
    println!("with -inf replaced by a finite floor: {}", r.finite_variant_check.passed);
    Ok(())
}
