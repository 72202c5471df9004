use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::Worst;
use super::{argmin_set, infimum, CheckReport, Witness, DEFAULT_SEED, EXHAUSTIVE_LIMIT, SAMPLED_PAIRS};
use crate::envelope::EnvelopeResult;
use crate::error::{Error, Result};
use crate::grid::{distance_to_set, Grid, GridFunction, NormKind, PointSet, MAX_DIM};

const VALUE_TOL: f64 = 1e-9;
const MONOTONE_SLACK: f64 = 1e-12;

/// How far `a <= b` fails, with extended-real arithmetic.
fn excess(a: f64, b: f64) -> f64 {
    if a <= b {
        0.0
    } else if a.is_finite() && b.is_finite() {
        a - b
    } else {
        f64::INFINITY
    }
}

/// All pairs `i < j` for small grids, a seeded sample otherwise.
fn pairs(n: usize, seed: u64) -> Box<dyn Iterator<Item = (usize, usize)>> {
    if n <= EXHAUSTIVE_LIMIT {
        Box::new((0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j))))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Box::new((0..SAMPLED_PAIRS).map(move |_| (rng.gen_range(0..n), rng.gen_range(0..n))))
    }
}

/// `inf f = inf f_k`.
pub fn check_infimum_preservation(f: &GridFunction, env: &EnvelopeResult) -> CheckReport {
    let a = infimum(f).as_f64();
    let b = infimum(&env.envelope).as_f64();
    let violation = if a == b {
        0.0
    } else if a.is_finite() && b.is_finite() {
        (a - b).abs()
    } else {
        f64::INFINITY
    };
    CheckReport::new(
        "infimum_preservation",
        violation,
        VALUE_TOL,
        Witness::None,
        format!("min f = {}, min envelope = {}", infimum(f), infimum(&env.envelope)),
    )
}

/// `argmin f = argmin f_k` as index sets, both taken within `tol`.
///
/// The violation is the size of the symmetric difference; the witness is
/// its lowest index.
pub fn check_minimizer_preservation(f: &GridFunction, env: &EnvelopeResult, tol: f64) -> CheckReport {
    const NAME: &str = "minimizer_preservation";
    let (a, b) = match (argmin_set(f, tol), argmin_set(&env.envelope, tol)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            return CheckReport::new(NAME, f64::INFINITY, 0.0, Witness::None, e.to_string());
        }
    };
    let diff: Vec<usize> = (0..f.len()).filter(|&i| a.contains(i) != b.contains(i)).collect();
    let witness = diff.first().map_or(Witness::None, |&i| Witness::Index(i));
    CheckReport::new(
        NAME,
        diff.len() as f64,
        0.0,
        witness,
        format!("|argmin f| = {}, |argmin envelope| = {}, differing = {}", a.count(), b.count(), diff.len()),
    )
}

/// `f_n <= f_{n+1} <= f` pointwise along an envelope sequence.
pub fn check_monotone_in_n(seq: &[EnvelopeResult], f: &GridFunction) -> CheckReport {
    let mut worst = Worst::new();
    for (n, r) in seq.iter().enumerate() {
        for (x, &v) in r.values().iter().enumerate() {
            worst.record(excess(v, f.values()[x]), Witness::Pair(n, x));
            if let Some(next) = seq.get(n + 1) {
                worst.record(excess(v, next.values()[x]), Witness::Pair(n, x));
            }
        }
    }
    CheckReport::new(
        "monotone_in_n",
        worst.value,
        MONOTONE_SLACK,
        worst.witness,
        format!("{} envelopes; witness is (sequence position, point)", seq.len()),
    )
}

/// `|f(x) - f(x')| <= k ‖x - x'‖` over all pairs (small grids) or a sample
/// seeded with [`DEFAULT_SEED`].
pub fn check_lipschitz(f: &GridFunction, k: f64, norm: NormKind) -> Result<CheckReport> {
    check_lipschitz_seeded(f, k, norm, DEFAULT_SEED)
}

pub fn check_lipschitz_seeded(f: &GridFunction, k: f64, norm: NormKind, seed: u64) -> Result<CheckReport> {
    if let Some(i) = f.values().iter().position(|v| !v.is_finite()) {
        return Err(Error::InfiniteValue(i));
    }
    let grid = f.grid();
    let d = grid.dim();
    let v = f.values();
    let mut worst = Worst::new();
    let mut checked = 0usize;
    for (x, y) in pairs(grid.len(), seed) {
        checked += 1;
        let dist = norm.norm(&grid.displacement(x, y)[..d]);
        worst.record((v[x] - v[y]).abs() - k * dist, Witness::Pair(x, y));
    }
    Ok(CheckReport::new(
        "lipschitz",
        worst.value,
        VALUE_TOL,
        worst.witness,
        format!("k = {k}, norm = {norm}, {checked} pairs"),
    ))
}

/// `f((x+y)/2) <= (f(x) + f(y)) / 2` for lattice pairs whose midpoint is a
/// lattice point. Vacuous when the right side is `+inf`.
pub fn check_midpoint_convex(f: &GridFunction) -> CheckReport {
    check_midpoint_convex_seeded(f, DEFAULT_SEED)
}

pub fn check_midpoint_convex_seeded(f: &GridFunction, seed: u64) -> CheckReport {
    let grid = f.grid();
    let v = f.values();
    let mut worst = Worst::new();
    let mut checked = 0usize;
    for (x, y) in pairs(grid.len(), seed) {
        let Some((y, mid)) = midpoint(grid, x, y) else { continue };
        checked += 1;
        let rhs = 0.5 * (v[x] + v[y]);
        if rhs.is_nan() || rhs == f64::INFINITY {
            continue;
        }
        worst.record(excess(v[mid], rhs), Witness::Pair(x, y));
    }
    CheckReport::new(
        "midpoint_convex",
        worst.value,
        VALUE_TOL,
        worst.witness,
        format!("{checked} pairs with lattice midpoints"),
    )
}

/// Midpoint of `x` and `y`. Exhaustive enumeration skips pairs without a
/// lattice midpoint; sampled pairs are nudged by one step per axis to match
/// parity, so the returned partner may differ from `y`.
fn midpoint(grid: &Grid, x: usize, y: usize) -> Option<(usize, usize)> {
    let ix = grid.unravel(x);
    let mut iy = grid.unravel(y);
    let sampled = grid.len() > EXHAUSTIVE_LIMIT;
    let mut mid = [0usize; MAX_DIM];
    for a in 0..grid.dim() {
        if (ix[a] + iy[a]) % 2 == 1 {
            if !sampled {
                return None;
            }
            iy[a] = if iy[a] > 0 { iy[a] - 1 } else { iy[a] + 1 };
            if iy[a] >= grid.axes()[a].count {
                return None;
            }
        }
        mid[a] = (ix[a] + iy[a]) / 2;
    }
    let y = grid.ravel(&iy[..grid.dim()])?;
    if y == x {
        return None;
    }
    Some((y, grid.ravel(&mid[..grid.dim()])?))
}

/// `f_k(x) >= min f + k d(x, H)` for `f` that is `+inf` off `H`.
///
/// The detail string also reports the largest gap `f_k - bound`, which is
/// zero when `f` is the indicator of `H`.
pub fn check_coercivity_bound(
    env: &EnvelopeResult,
    f: &GridFunction,
    set: &PointSet,
    k: f64,
    norm: NormKind,
) -> Result<CheckReport> {
    if let Some(i) = (0..f.len()).find(|&i| !set.contains(i) && f.values()[i] < f64::INFINITY) {
        return Err(Error::PreconditionViolated(format!("f is finite at {i}, outside H")));
    }
    if !f.is_bounded_below() {
        return Err(Error::PreconditionViolated("f is not bounded below on H".into()));
    }
    let m = infimum(f).as_f64();
    let dist = distance_to_set(f.grid(), set, norm)?;
    let mut worst = Worst::new();
    let mut gap = 0.0f64;
    for (x, &e) in env.values().iter().enumerate() {
        let bound = m + k * dist.values()[x];
        worst.record(excess(bound, e), Witness::Index(x));
        gap = gap.max((e - bound).abs());
    }
    Ok(CheckReport::new(
        "coercivity_bound",
        worst.value,
        VALUE_TOL,
        worst.witness,
        format!("min f = {m}, k = {k}, max |envelope - bound| = {gap:e}"),
    ))
}
