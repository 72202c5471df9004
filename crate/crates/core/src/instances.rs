//! Seeded generators for test and benchmark inputs.

use rand::Rng;

use crate::grid::{Axis, Grid, GridFunction, NormKind};

/// One-dimensional grid with `n` nodes, random origin and spacing.
pub fn line_grid<R: Rng>(rng: &mut R, n: usize) -> Grid {
    let h = rng.gen_range(0.1..1.0);
    let origin = rng.gen_range(-5.0..5.0);
    Grid::new(vec![Axis::new(origin, h, n)]).expect("valid axis")
}

/// Two-dimensional grid with the given side counts and random spacings.
pub fn plane_grid<R: Rng>(rng: &mut R, n0: usize, n1: usize) -> Grid {
    let axes = [n0, n1].iter().map(|&n| Axis::new(rng.gen_range(-3.0..3.0), rng.gen_range(0.1..1.0), n)).collect();
    Grid::new(axes).expect("valid axes")
}

/// Uniform values in `[-5, 5]` with a few random boxes set to `+inf`.
/// At least one point stays finite.
pub fn function_with_holes<R: Rng>(rng: &mut R, grid: &Grid) -> GridFunction {
    let mut values: Vec<f64> = (0..grid.len()).map(|_| rng.gen_range(-5.0..5.0)).collect();
    let holes = rng.gen_range(0..=3);
    for _ in 0..holes {
        let mut lo = [0usize; 3];
        let mut hi = [0usize; 3];
        for (a, ax) in grid.axes().iter().enumerate() {
            let x = rng.gen_range(0..ax.count);
            let y = rng.gen_range(0..ax.count);
            lo[a] = x.min(y);
            hi[a] = x.max(y);
        }
        for (i, v) in values.iter_mut().enumerate() {
            let idx = grid.unravel(i);
            if (0..grid.dim()).all(|a| idx[a] >= lo[a] && idx[a] <= hi[a]) {
                *v = f64::INFINITY;
            }
        }
    }
    if values.iter().all(|v| v.is_infinite()) {
        let keep = rng.gen_range(0..values.len());
        values[keep] = rng.gen_range(-5.0..5.0);
    }
    GridFunction::new(grid.clone(), values).expect("finite or +inf")
}

/// Random convex function of one variable: a maximum of affine pieces plus
/// a quadratic term.
pub fn convex_1d<R: Rng>(rng: &mut R) -> impl Fn(f64) -> f64 {
    let pieces: Vec<(f64, f64)> =
        (0..rng.gen_range(1..5)).map(|_| (rng.gen_range(-3.0..3.0), rng.gen_range(-2.0..2.0))).collect();
    let q = rng.gen_range(0.0..1.0);
    move |x| pieces.iter().map(|(a, b)| a * x + b).fold(f64::NEG_INFINITY, f64::max) + q * x * x
}

/// Convex function on a grid: in 1D a random convex function restricted to
/// a random index interval (`+inf` outside); in 2D a sum of two such
/// functions of the separate coordinates.
pub fn convex_function<R: Rng>(rng: &mut R, grid: &Grid) -> GridFunction {
    #[allow(clippy::type_complexity)]
    let parts: Vec<(Box<dyn Fn(f64) -> f64>, usize, usize)> = grid
        .axes()
        .iter()
        .map(|ax| {
            let f = convex_1d(rng);
            let a = rng.gen_range(0..ax.count);
            let b = rng.gen_range(0..ax.count);
            (Box::new(f) as Box<dyn Fn(f64) -> f64>, a.min(b), a.max(b))
        })
        .collect();
    let values = (0..grid.len())
        .map(|i| {
            let idx = grid.unravel(i);
            let c = grid.coordinate(i);
            parts
                .iter()
                .enumerate()
                .map(|(a, (f, lo, hi))| if idx[a] < *lo || idx[a] > *hi { f64::INFINITY } else { f(c[a]) })
                .sum()
        })
        .collect();
    GridFunction::new(grid.clone(), values).expect("valid")
}

/// Scattered samples of a random `slope`-Lipschitz function.
///
/// Values come from `min_j c_j + slope ‖x - a_j‖` with random anchors in
/// `[-1, 1]^dim`; `points` draws the sample locations.
pub fn lipschitz_samples<R: Rng>(
    rng: &mut R,
    dim: usize,
    count: usize,
    slope: f64,
    norm: NormKind,
    points: impl Fn(&mut R) -> Vec<f64>,
) -> (Vec<Vec<f64>>, Vec<f64>) {
    let anchors: Vec<(Vec<f64>, f64)> =
        (0..3).map(|_| ((0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect(), rng.gen_range(-2.0..2.0))).collect();
    let mut pts: Vec<Vec<f64>> = Vec::with_capacity(count);
    while pts.len() < count {
        let p = points(rng);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    let vals = pts
        .iter()
        .map(|p| {
            anchors
                .iter()
                .map(|(a, c)| {
                    let z: Vec<f64> = p.iter().zip(a).map(|(x, y)| x - y).collect();
                    c + slope * norm.norm(&z)
                })
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    (pts, vals)
}

/// Coefficient vector with entries in `[-3, 3]`.
pub fn coefficients<R: Rng>(rng: &mut R, dim: usize) -> Vec<f64> {
    (0..dim).map(|_| rng.gen_range(-3.0..3.0)).collect()
}
