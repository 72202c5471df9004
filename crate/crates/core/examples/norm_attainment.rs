//! A linear functional on a grid ball attains its maximum, and every
//! envelope of -g + I_B keeps the same minimum and minimizers.

use infconv::grid::{Grid, NormKind};
use infconv::repro::norm_attainment_demo;

fn main() -> infconv::Result<()> {
    let grid = Grid::cube(2, -1.25, 1.25, 51)?;
    for norm in [NormKind::L1, NormKind::L2, NormKind::Linf] {
        let r = norm_attainment_demo(&[3.0, 4.0], 1.0, &grid, norm, 5)?;
        let mins: Vec<String> = r.steps.iter().map(|s| format!("{:.4}", s.minimum)).collect();
        println!(
            "{norm}: min {:.4} at {:?}, envelope minima [{}], boundary {}",
            r.attained_value,
            r.attaining_points,
            mins.join(", "),
            r.boundary_adjacent
        );
    }
    Ok(())
}
