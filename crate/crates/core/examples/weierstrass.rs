//! A continuous function built from a convergent sequence whose only
//! minimizer is the limit.

use infconv::grid::{Grid, NormKind};
use infconv::repro::{weierstrass_demo, WeierstrassInstance};

fn main() -> infconv::Result<()> {
    let grid = Grid::cube(2, -1.0, 1.0, 101)?;
    let limit = [-0.4, 0.26];
    let inst = WeierstrassInstance::spiral(&grid, limit, 0.6, 0.7, 1.1, 60, 40, NormKind::L2)?;
    let (report, f) = weierstrass_demo(&inst, &limit, NormKind::L2, 8)?;

    for b in &report.bounds {
        println!("k0 = {}: f(x_k0) = {:.3e} < {:.3e}", b.k0, b.value, b.bound);
    }
    println!("argmin {:?}, limit {:?}", report.argmin, limit);
    println!("value range [{}, {:.4}]", f.min_value(), report.max_value);
    Ok(())
}
