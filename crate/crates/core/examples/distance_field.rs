//! Conical envelope of an indicator: the distance to a point set.

use infconv::envelope::pasch_hausdorff;
use infconv::grid::{indicator, Grid, NormKind, PointSet};

fn main() -> infconv::Result<()> {
    let grid = Grid::cube(2, -2.0, 2.0, 17)?;
    let set = PointSet::from_predicate(&grid, |x| (x[0] - 1.0).abs() < 1e-9 && x[1] > 0.0);

    for norm in [NormKind::L1, NormKind::L2, NormKind::Linf] {
        let env = pasch_hausdorff(&indicator(&set)?, 1.0, norm)?;
        println!("{norm} distance field:");
        for row in (0..17).rev().step_by(2) {
            let line: Vec<String> =
                (0..17).step_by(2).map(|col| format!("{:5.2}", env.values()[col * 17 + row])).collect();
            println!("  {}", line.join(" "));
        }
    }
    Ok(())
}
