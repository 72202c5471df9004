//! Moreau envelope and proximal map of |x| on a line: the Huber function
//! with soft thresholding.

use infconv::envelope::{moreau_yosida, proximal_map};
use infconv::grid::{Grid, GridFunction};

fn main() -> infconv::Result<()> {
    let grid = Grid::line(-3.0, 3.0, 0.01)?;
    let f = GridFunction::from_fn(&grid, |x| x[0].abs())?;
    let k = 2.0;
    let env = moreau_yosida(&f, k)?;

    println!("{:>6} {:>10} {:>10} {:>8}", "x", "envelope", "huber", "prox");
    for x in [-2.0, -1.0, -0.5, -0.25, 0.0, 0.3, 1.5] {
        let i = grid.nearest(&[x]).unwrap();
        let huber = if x.abs() <= 1.0 / k { 0.5 * k * x * x } else { x.abs() - 0.5 / k };
        let prox = proximal_map(&env, i)?[0];
        println!("{x:6.2} {:10.6} {huber:10.6} {prox:8.3}", env.values()[i]);
    }
    Ok(())
}
