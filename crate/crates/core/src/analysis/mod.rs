//! Property checks over grid functions and their envelopes.
//!
//! Each check returns a [`CheckReport`] carrying the largest violation found
//! and where it occurred. Checks that sample pairs use a generator seeded per
//! call, so results never depend on scheduling.

mod checks;
mod minorant;
mod report;

pub use checks::{
    check_coercivity_bound, check_infimum_preservation, check_lipschitz, check_lipschitz_seeded, check_midpoint_convex,
    check_midpoint_convex_seeded, check_minimizer_preservation, check_monotone_in_n,
};
pub use minorant::{affine_minorant, check_coercive_minorant, AffineMinorant, CoercivityMinorant};
pub use report::{CheckReport, Witness};

use crate::error::{Error, Result};
use crate::grid::{ExtendedValue, GridFunction, PointSet};

/// Seed used by sampled checks unless the caller supplies one.
pub const DEFAULT_SEED: u64 = 42;

/// Above this many points, pairwise checks sample instead of enumerating.
pub const EXHAUSTIVE_LIMIT: usize = 256;

/// Number of sampled pairs for large grids.
pub const SAMPLED_PAIRS: usize = 100_000;

/// Smallest value over the grid.
pub fn infimum(f: &GridFunction) -> ExtendedValue {
    f.min_value()
}

/// Points whose value is within `tol` of the minimum. When the minimum is
/// `-inf` this is the set where `f = -inf`.
pub fn argmin_set(f: &GridFunction, tol: f64) -> Result<PointSet> {
    let m = infimum(f).as_f64();
    if m == f64::INFINITY {
        return Err(Error::NoFiniteValues);
    }
    let mask = f.values().iter().map(|&v| if m == f64::NEG_INFINITY { v == m } else { v <= m + tol }).collect();
    PointSet::from_mask(f.grid(), mask)
}

/// Indices with nonincreasing values ending at a minimizer.
///
/// Walks the distinct finite values from the top down and keeps the last
/// `count` of them, each represented by its lowest index.
pub fn minimizing_sequence(f: &GridFunction, count: usize) -> Result<Vec<usize>> {
    if !f.is_proper() {
        return Err(Error::NonProper);
    }
    let mut order: Vec<usize> = (0..f.len()).filter(|&i| f.values()[i] < f64::INFINITY).collect();
    // descending by value, ascending by index within equal values
    order.sort_by(|&a, &b| f.value(b).cmp(&f.value(a)).then(a.cmp(&b)));
    order.dedup_by(|b, a| f.values()[*a] == f.values()[*b]);
    let skip = order.len().saturating_sub(count.max(1));
    Ok(order.split_off(skip))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{indicator, Grid};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn infimum_cases() {
        let g = Grid::line(-2.0, 2.0, 0.5).unwrap();
        assert_eq!(infimum(&GridFunction::constant(&g, f64::INFINITY).unwrap()), ExtendedValue::POS_INF);
        let f = crate::grid::linear_minus_on_ball(&[1.0], 1.0, &g, crate::grid::NormKind::L2).unwrap();
        assert_eq!(infimum(&f).value(), Some(-1.0));
    }

    #[test]
    fn argmin_cases() {
        let g = Grid::cube(2, 0.0, 1.0, 4).unwrap();
        let c = GridFunction::constant(&g, 2.0).unwrap();
        assert_eq!(argmin_set(&c, 0.0).unwrap().count(), g.len());
        let p = PointSet::from_indices(&g, [5]).unwrap();
        assert_eq!(argmin_set(&indicator(&p).unwrap(), 0.0).unwrap(), p);
        assert!(matches!(
            argmin_set(&GridFunction::constant(&g, f64::INFINITY).unwrap(), 0.0),
            Err(Error::NoFiniteValues)
        ));
    }

    #[test]
    fn argmin_matches_linear_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = Grid::line(0.0, 30.0, 1.0).unwrap();
        for _ in 0..50 {
            // small integer values make ties common
            let vals: Vec<f64> = (0..g.len()).map(|_| rng.gen_range(0..6) as f64).collect();
            let f = GridFunction::new(g.clone(), vals.clone()).unwrap();
            let m = vals.iter().cloned().fold(f64::INFINITY, f64::min);
            let expect: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] == m).collect();
            assert_eq!(argmin_set(&f, 0.0).unwrap().members().collect::<Vec<_>>(), expect);
        }
    }

    #[test]
    fn minimizing_sequence_descends() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = Grid::line(0.0, 40.0, 1.0).unwrap();
        for _ in 0..20 {
            let vals: Vec<f64> = (0..g.len()).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let f = GridFunction::new(g.clone(), vals.clone()).unwrap();
            let seq = minimizing_sequence(&f, 10).unwrap();
            assert_eq!(seq.len(), 10);
            let got: Vec<f64> = seq.iter().map(|&i| vals[i]).collect();
            assert!(got.windows(2).all(|w| w[0] >= w[1]));
            // sort oracle
            let mut sorted = vals.clone();
            sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
            assert_eq!(*got.last().unwrap(), *sorted.last().unwrap());
            assert_eq!(got, sorted[sorted.len() - 10..].to_vec());
        }
        let c = GridFunction::constant(&g, 1.0).unwrap();
        assert_eq!(minimizing_sequence(&c, 5).unwrap().len(), 1);
        assert!(minimizing_sequence(&GridFunction::constant(&g, f64::INFINITY).unwrap(), 3).is_err());
    }
}
