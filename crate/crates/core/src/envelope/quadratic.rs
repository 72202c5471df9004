use super::{finish, separable_passes, EnvelopeResult, Kernel};
use crate::grid::GridFunction;

/// Quadratic envelope by per-axis lower envelopes of parabolas; exact since
/// `‖z‖₂² = Σ zᵢ²`.
pub(super) fn separable(f: &GridFunction, k: f64, kernel: Kernel) -> EnvelopeResult {
    let arg = separable_passes(f, |vals, h, out| parabola_pass(vals, h, k, out), |dz, _| 0.5 * k * (dz * dz));
    finish(f, arg, kernel)
}

/// Lowest-index witness of `min_s vals[s] + (k/2) ((t - s) h)²` for every `t`,
/// in linear time.
///
/// Parabolas are added left to right; `bounds[j]` is where `hull[j]` starts
/// to be the lowest. Points with `+inf` value never attain the minimum and
/// are skipped.
pub(crate) fn parabola_pass(vals: &[f64], h: f64, k: f64, out: &mut [Option<usize>]) {
    let n = vals.len();
    let pos = |s: usize| s as f64 * h;
    let lifted = |s: usize| vals[s] + 0.5 * k * pos(s) * pos(s);

    let mut hull: Vec<usize> = Vec::with_capacity(n);
    let mut bounds: Vec<f64> = Vec::with_capacity(n + 1);
    for q in (0..n).filter(|&q| vals[q].is_finite()) {
        loop {
            let Some(&p) = hull.last() else {
                hull.push(q);
                bounds.clear();
                bounds.push(f64::NEG_INFINITY);
                break;
            };
            let s = (lifted(q) - lifted(p)) / (k * (pos(q) - pos(p)));
            if s <= *bounds.last().expect("one bound per hull entry") {
                hull.pop();
                bounds.pop();
                if hull.is_empty() {
                    hull.push(q);
                    bounds.push(f64::NEG_INFINITY);
                    break;
                }
            } else {
                hull.push(q);
                bounds.push(s);
                break;
            }
        }
    }

    if hull.is_empty() {
        out.iter_mut().for_each(|o| *o = None);
        return;
    }
    let mut j = 0;
    for (t, slot) in out.iter_mut().enumerate() {
        let x = pos(t);
        // at an exact crossing the earlier parabola (lower index) is kept
        while j + 1 < hull.len() && bounds[j + 1] < x {
            j += 1;
        }
        *slot = Some(hull[j]);
    }
}
