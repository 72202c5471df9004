use super::{finish, separable_passes, EnvelopeResult, Kernel};
use crate::grid::GridFunction;

/// Conical envelope by per-axis scans. Exact for one-dimensional grids and
/// for the L1 norm, where `k ‖z‖₁ = k Σ |zᵢ|` splits across axes.
pub(super) fn separable(f: &GridFunction, k: f64, kernel: Kernel) -> EnvelopeResult {
    let arg = separable_passes(f, |vals, h, out| cone_pass(vals, h, k, out), |dz, _| k * dz.abs());
    finish(f, arg, kernel)
}

/// Lowest-index witness of `min_s vals[s] + k |t - s| h` for every `t`.
///
/// All cones share the slope `k`, so the better of two witnesses on the same
/// side of `t` stays better as `t` moves away from both. A forward sweep
/// therefore only has to carry the best witness at or left of `t`, and a
/// backward sweep the best at or right of `t`.
pub(crate) fn cone_pass(vals: &[f64], h: f64, k: f64, out: &mut [Option<usize>]) {
    let n = vals.len();
    let cost = |s: usize, t: usize| vals[s] + k * ((t as f64 - s as f64).abs() * h);

    let mut left = vec![None; n];
    let mut carry: Option<usize> = None;
    for t in 0..n {
        if vals[t].is_finite() {
            // strict: a tie keeps the older, lower index
            if carry.is_none_or(|w| vals[t] < cost(w, t)) {
                carry = Some(t);
            }
        }
        left[t] = carry;
    }

    carry = None;
    for t in (0..n).rev() {
        if vals[t].is_finite() {
            // non-strict: a tie moves to the lower index t
            if carry.is_none_or(|w| vals[t] <= cost(w, t)) {
                carry = Some(t);
            }
        }
        out[t] = match (left[t], carry) {
            (Some(l), Some(r)) => {
                if cost(l, t) <= cost(r, t) {
                    Some(l)
                } else {
                    Some(r)
                }
            }
            (l, r) => l.or(r),
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(vals: &[f64], h: f64, k: f64) -> Vec<Option<usize>> {
        (0..vals.len())
            .map(|t| {
                let mut best = f64::INFINITY;
                let mut arg = None;
                for (s, &v) in vals.iter().enumerate() {
                    if !v.is_finite() {
                        continue;
                    }
                    let c = v + k * ((t as f64 - s as f64).abs() * h);
                    if c < best {
                        best = c;
                        arg = Some(s);
                    }
                }
                arg
            })
            .collect()
    }

    #[test]
    fn matches_scan_of_all_witnesses() {
        let inf = f64::INFINITY;
        let cases: Vec<Vec<f64>> = vec![
            vec![0.0, inf, inf, inf, 0.0],
            vec![inf, inf, 2.0, inf],
            vec![inf, inf, inf],
            vec![3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0],
            vec![1.0, 1.0, 1.0, 1.0],
            vec![0.0, 1.0, 2.0, 1.0, 0.0, 1.0, 2.0],
        ];
        for vals in cases {
            for (h, k) in [(1.0, 1.0), (0.5, 3.0), (0.1, 0.25)] {
                let mut out = vec![None; vals.len()];
                cone_pass(&vals, h, k, &mut out);
                assert_eq!(out, brute(&vals, h, k), "vals {vals:?} h {h} k {k}");
            }
        }
    }
}
