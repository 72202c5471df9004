//! Inf-convolution of grid functions with conical and quadratic kernels.
//!
//! [`inf_conv_bruteforce`] is the exact reference: it scans every pair of
//! lattice points. [`pasch_hausdorff`] and [`moreau_yosida`] use separable
//! linear-time passes where the kernel allows it and fall back to the
//! reference otherwise. All paths break ties towards the lowest flat index
//! and report final values as `f(w) + kernel(x - w)` for the chosen witness
//! `w`, evaluated with the same expression the reference uses.

mod bruteforce;
mod conical;
mod quadratic;

use crate::error::{Error, Result};
use crate::grid::{Grid, GridFunction, NormKind};

pub use bruteforce::inf_conv_bruteforce;

/// Kernel `g` in `(f □ g)(x) = inf_y f(y) + g(x - y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kernel {
    /// `k ‖z‖`
    Conical { k: f64, norm: NormKind },
    /// `(k/2) ‖z‖₂²`
    Quadratic { k: f64 },
}

impl Kernel {
    pub fn conical(k: f64, norm: NormKind) -> Self {
        Kernel::Conical { k, norm }
    }

    pub fn quadratic(k: f64) -> Self {
        Kernel::Quadratic { k }
    }

    pub fn k(&self) -> f64 {
        match *self {
            Kernel::Conical { k, .. } | Kernel::Quadratic { k } => k,
        }
    }

    pub fn eval(&self, z: &[f64]) -> f64 {
        match *self {
            Kernel::Conical { k, norm } => k * norm.norm(z),
            Kernel::Quadratic { k } => 0.5 * k * z.iter().map(|v| v * v).sum::<f64>(),
        }
    }

    fn validate(&self) -> Result<()> {
        let k = self.k();
        if k > 0.0 && k.is_finite() {
            Ok(())
        } else {
            Err(Error::BadParameter(k))
        }
    }
}

/// Where the indices stored in [`EnvelopeResult::argmin`] point.
#[derive(Debug, Clone, PartialEq)]
pub enum Witnesses {
    /// Flat indices into the grid of the envelope.
    Grid,
    /// Indices into an explicit list of (possibly off-grid) points.
    Points(Vec<Vec<f64>>),
}

/// Envelope values plus, per point, the witness attaining the infimum.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopeResult {
    pub envelope: GridFunction,
    pub argmin: Vec<Option<usize>>,
    pub witnesses: Witnesses,
}

impl EnvelopeResult {
    pub fn grid(&self) -> &Grid {
        self.envelope.grid()
    }

    pub fn values(&self) -> &[f64] {
        self.envelope.values()
    }

    /// Coordinates of the witness at `x`.
    pub fn witness_point(&self, x: usize) -> Result<Vec<f64>> {
        let v = self.envelope.values()[x];
        match (v.is_finite(), self.argmin[x]) {
            (true, Some(w)) => Ok(match &self.witnesses {
                Witnesses::Grid => self.grid().coordinate(w),
                Witnesses::Points(pts) => pts[w].clone(),
            }),
            _ => Err(Error::NoWitness(x)),
        }
    }
}

/// The proximal point of lattice point `x`: the coordinates of its witness.
pub fn proximal_map(result: &EnvelopeResult, x: usize) -> Result<Vec<f64>> {
    result.witness_point(x)
}

fn check_fast_input(f: &GridFunction) -> Result<()> {
    if f.allow_neg_inf() {
        return Err(Error::NegInfUnsupported);
    }
    if !f.is_proper() {
        return Err(Error::NonProper);
    }
    Ok(())
}

/// `f_k(x) = inf_y f(y) + k ‖y - x‖`.
///
/// One-dimensional grids (any norm) and L1 on any grid use per-axis scans;
/// L2 and L∞ in two or more dimensions have no separable form and use the
/// brute-force reference.
pub fn pasch_hausdorff(f: &GridFunction, k: f64, norm: NormKind) -> Result<EnvelopeResult> {
    check_fast_input(f)?;
    let kernel = Kernel::conical(k, norm);
    kernel.validate()?;
    if f.grid().dim() == 1 || norm == NormKind::L1 {
        Ok(conical::separable(f, k, kernel))
    } else {
        Ok(inf_conv_bruteforce(f, kernel))
    }
}

/// `f_⟨k⟩(x) = inf_y f(y) + (k/2) ‖y - x‖₂²`, by per-axis lower envelopes
/// of parabolas.
pub fn moreau_yosida(f: &GridFunction, k: f64) -> Result<EnvelopeResult> {
    check_fast_input(f)?;
    let kernel = Kernel::quadratic(k);
    kernel.validate()?;
    Ok(quadratic::separable(f, k, kernel))
}

/// Pasch–Hausdorff envelopes for `k = 1, 2, ..., n_max`.
pub fn envelope_sequence(f: &GridFunction, n_max: usize, norm: NormKind) -> Result<Vec<EnvelopeResult>> {
    if n_max == 0 {
        return Err(Error::BadParameter(0.0));
    }
    (1..=n_max).map(|n| pasch_hausdorff(f, n as f64, norm)).collect()
}

/// Dispatches to the fast path for `kernel`.
pub fn envelope(f: &GridFunction, kernel: Kernel) -> Result<EnvelopeResult> {
    match kernel {
        Kernel::Conical { k, norm } => pasch_hausdorff(f, k, norm),
        Kernel::Quadratic { k } => moreau_yosida(f, k),
    }
}

/// Rebuilds final values from witnesses using the reference kernel
/// expression.
fn finish(f: &GridFunction, argmin: Vec<Option<usize>>, kernel: Kernel) -> EnvelopeResult {
    let grid = f.grid();
    let d = grid.dim();
    let fv = f.values();
    let values = argmin
        .iter()
        .enumerate()
        .map(|(x, w)| match *w {
            Some(w) => fv[w] + kernel.eval(&grid.displacement(x, w)[..d]),
            None => f64::INFINITY,
        })
        .collect();
    EnvelopeResult {
        envelope: GridFunction::new(grid.clone(), values).expect("finite inputs give valid values"),
        argmin,
        witnesses: Witnesses::Grid,
    }
}

/// Visits every line of the grid along `axis`, passing the flat indices of
/// its points in order.
fn for_each_line(grid: &Grid, axis: usize, mut visit: impl FnMut(&[usize])) {
    let stride = grid.stride(axis);
    let n = grid.axes()[axis].count;
    let outer = grid.len() / (stride * n);
    let mut line = vec![0usize; n];
    for o in 0..outer {
        for r in 0..stride {
            let base = o * stride * n + r;
            for (t, slot) in line.iter_mut().enumerate() {
                *slot = base + t * stride;
            }
            visit(&line);
        }
    }
}

/// Runs a one-dimensional witness pass along every axis, last axis first, so
/// that the lexicographic tie-break reproduces lowest-flat-index order.
fn separable_passes(
    f: &GridFunction,
    mut pass: impl FnMut(&[f64], f64, &mut [Option<usize>]),
    kernel_1d: impl Fn(f64, f64) -> f64,
) -> Vec<Option<usize>> {
    let grid = f.grid();
    let mut g: Vec<f64> = f.values().to_vec();
    let mut arg: Vec<Option<usize>> = g.iter().enumerate().map(|(i, v)| v.is_finite().then_some(i)).collect();
    let mut next_g = vec![f64::INFINITY; g.len()];
    let mut next_arg = vec![None; g.len()];
    let mut line_vals = Vec::new();
    let mut local = Vec::new();
    for axis in (0..grid.dim()).rev() {
        let h = grid.axes()[axis].spacing;
        for_each_line(grid, axis, |line| {
            line_vals.clear();
            line_vals.extend(line.iter().map(|&i| g[i]));
            local.clear();
            local.resize(line.len(), None);
            pass(&line_vals, h, &mut local);
            for (t, &x) in line.iter().enumerate() {
                match local[t] {
                    Some(s) => {
                        let dz = (t as f64 - s as f64) * h;
                        next_g[x] = line_vals[s] + kernel_1d(dz, h);
                        next_arg[x] = arg[line[s]];
                    }
                    None => {
                        next_g[x] = f64::INFINITY;
                        next_arg[x] = None;
                    }
                }
            }
        });
        std::mem::swap(&mut g, &mut next_g);
        std::mem::swap(&mut arg, &mut next_arg);
    }
    arg
}
