use rayon::prelude::*;

use super::{EnvelopeResult, Kernel, Witnesses};
use crate::grid::{GridFunction, MAX_DIM};

/// Exact inf-convolution by scanning every witness for every point.
///
/// Accepts any valid grid function. If some value is `-inf` the envelope is
/// `-inf` everywhere with that point (lowest index) as witness; a function
/// identically `+inf` gives `+inf` everywhere with no witness.
pub fn inf_conv_bruteforce(f: &GridFunction, kernel: Kernel) -> EnvelopeResult {
    let grid = f.grid();
    let n = grid.len();
    let d = grid.dim();
    let fv = f.values();

    if let Some(w) = fv.iter().position(|&v| v == f64::NEG_INFINITY) {
        let envelope = GridFunction::with_neg_inf(grid.clone(), vec![f64::NEG_INFINITY; n], true).expect("valid");
        return EnvelopeResult { envelope, argmin: vec![Some(w); n], witnesses: Witnesses::Grid };
    }

    let cands: Vec<(usize, [usize; MAX_DIM], f64)> =
        fv.iter().enumerate().filter(|(_, v)| v.is_finite()).map(|(i, &v)| (i, grid.unravel(i), v)).collect();
    let spacing: Vec<f64> = grid.axes().iter().map(|a| a.spacing).collect();

    let (values, argmin): (Vec<f64>, Vec<Option<usize>>) = (0..n)
        .into_par_iter()
        .map(|x| {
            let ix = grid.unravel(x);
            let mut z = [0.0; MAX_DIM];
            let mut best = f64::INFINITY;
            let mut arg = None;
            for (y, iy, fy) in &cands {
                for a in 0..d {
                    z[a] = (ix[a] as f64 - iy[a] as f64) * spacing[a];
                }
                let v = fy + kernel.eval(&z[..d]);
                if v < best {
                    best = v;
                    arg = Some(*y);
                }
            }
            (best, arg)
        })
        .unzip();

    EnvelopeResult {
        envelope: GridFunction::new(grid.clone(), values).expect("valid"),
        argmin,
        witnesses: Witnesses::Grid,
    }
}
