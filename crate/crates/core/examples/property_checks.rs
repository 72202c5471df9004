//! Run the property checks on a random function with +inf holes.

use infconv::analysis::{
    check_infimum_preservation, check_lipschitz, check_midpoint_convex, check_minimizer_preservation,
};
use infconv::envelope::{moreau_yosida, pasch_hausdorff};
use infconv::grid::NormKind;
use infconv::instances;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> infconv::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let grid = instances::plane_grid(&mut rng, 30, 20);
    let f = instances::function_with_holes(&mut rng, &grid);

    let cone = pasch_hausdorff(&f, 2.0, NormKind::L1)?;
    let quad = moreau_yosida(&f, 2.0)?;
    let reports = [
        check_infimum_preservation(&f, &cone),
        check_minimizer_preservation(&f, &cone, 1e-9),
        check_minimizer_preservation(&f, &quad, 1e-9),
        check_lipschitz(&cone.envelope, 2.0, NormKind::L1)?,
        // random data is not convex, so this one fails
        check_midpoint_convex(&quad.envelope),
    ];
    for r in &reports {
        println!("{:<24} {:5} worst {:e}", r.name, r.passed, r.worst_violation);
    }

    let convex = instances::convex_function(&mut rng, &grid);
    let env = moreau_yosida(&convex, 1.0)?;
    println!("convex input, envelope midpoint convex: {}", check_midpoint_convex(&env.envelope).passed);
    Ok(())
}
