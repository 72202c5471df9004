//! Extend scattered Lipschitz samples to a whole grid. The extension's
//! minimizers are exactly the best samples.

use infconv::analysis::{argmin_set, check_lipschitz};
use infconv::extension::{mcshane_extend, verify_minimizer_location, SampleSet};
use infconv::grid::{Grid, NormKind};

fn main() -> infconv::Result<()> {
    let grid = Grid::cube(2, -1.0, 1.0, 41)?;
    let points = vec![vec![-0.5, -0.5], vec![0.5, 0.0], vec![0.0, 0.75], vec![-0.75, 0.5]];
    let values = vec![0.4, -0.1, 0.3, -0.1];
    let samples = SampleSet::validated(points, values, 1.5, NormKind::L2)?;

    let ext = mcshane_extend(&samples, &grid)?;
    println!("{}", check_lipschitz(&ext.envelope, 1.5, NormKind::L2)?.to_json());
    println!("{}", verify_minimizer_location(&samples, &ext, 1e-9)?.to_json());
    for i in argmin_set(&ext.envelope, 1e-9)?.members() {
        println!("minimizer at {:?}", grid.coordinate(i));
    }
    Ok(())
}
