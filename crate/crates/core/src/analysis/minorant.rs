use super::report::Worst;
use super::{check_midpoint_convex, CheckReport, Witness};
use crate::envelope::{moreau_yosida, proximal_map};
use crate::error::{Error, Result};
use crate::grid::{GridFunction, NormKind, PointSet};

const VALUE_TOL: f64 = 1e-9;

/// Lower bound `f(x) >= φ(‖x‖) + β` with `φ` tabulated at breakpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct CoercivityMinorant {
    breakpoints: Vec<(f64, f64)>,
    beta: f64,
}

impl CoercivityMinorant {
    /// `breakpoints` are `(t, φ(t))` pairs, strictly increasing in `t >= 0`
    /// and nondecreasing in `φ(t) >= 0`.
    pub fn new(breakpoints: Vec<(f64, f64)>, beta: f64) -> Result<Self> {
        let bad = |why: &str| Err(Error::PreconditionViolated(format!("minorant breakpoints: {why}")));
        if breakpoints.is_empty() {
            return bad("empty");
        }
        if breakpoints.iter().any(|&(t, p)| !(t >= 0.0 && p >= 0.0 && t.is_finite() && p.is_finite())) {
            return bad("arguments and values must be finite and nonnegative");
        }
        if breakpoints.windows(2).any(|w| !(w[0].0 < w[1].0 && w[0].1 <= w[1].1)) {
            return bad("not increasing");
        }
        if !beta.is_finite() {
            return bad("beta must be finite");
        }
        Ok(CoercivityMinorant { breakpoints, beta })
    }

    /// `φ` sampled at `ts` with values `phi(t)`.
    pub fn tabulate(ts: impl IntoIterator<Item = f64>, phi: impl Fn(f64) -> f64, beta: f64) -> Result<Self> {
        CoercivityMinorant::new(ts.into_iter().map(|t| (t, phi(t))).collect(), beta)
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Step interpolation from below: the value at the last breakpoint not
    /// exceeding `t`, zero before the first breakpoint. Never above `φ` for
    /// nondecreasing `φ`.
    pub fn phi(&self, t: f64) -> f64 {
        let idx = self.breakpoints.partition_point(|&(s, _)| s <= t);
        if idx == 0 {
            0.0
        } else {
            self.breakpoints[idx - 1].1
        }
    }
}

/// `f(x) >= φ(‖x‖) + β` at every lattice point.
pub fn check_coercive_minorant(f: &GridFunction, minorant: &CoercivityMinorant, norm: NormKind) -> CheckReport {
    let grid = f.grid();
    let mut worst = Worst::new();
    for (i, &v) in f.values().iter().enumerate() {
        let r = norm.norm(&grid.coordinate(i));
        let bound = minorant.phi(r) + minorant.beta;
        let gap = if v >= bound {
            0.0
        } else if v.is_finite() {
            bound - v
        } else {
            f64::INFINITY
        };
        worst.record(gap, Witness::Index(i));
    }
    CheckReport::new(
        "coercive_minorant",
        worst.value,
        VALUE_TOL,
        worst.witness,
        format!("beta = {}, norm = {norm}", minorant.beta),
    )
}

/// Affine function `x ↦ ⟨slope, x⟩ + alpha` lying below a grid function.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineMinorant {
    pub slope: Vec<f64>,
    pub alpha: f64,
    /// Lattice point the supporting function was built at.
    pub base: usize,
}

impl AffineMinorant {
    pub fn eval(&self, x: &[f64]) -> f64 {
        self.slope.iter().zip(x).map(|(a, b)| a * b).sum::<f64>() + self.alpha
    }

    /// `-‖slope‖_* M + alpha` with `M = max ‖x‖` over `set`: a lower bound
    /// for the function on `set`.
    pub fn lower_bound_on(&self, set: &PointSet, norm: NormKind) -> f64 {
        let grid = set.grid();
        let radius = set.members().map(|i| norm.norm(&grid.coordinate(i))).fold(0.0, f64::max);
        -norm.dual().norm(&self.slope) * radius + self.alpha
    }
}

/// Supporting affine minorant of a convex grid function.
///
/// Built from the quadratic envelope with `k = 1`: at the base point `x̂`
/// (lowest index minimizing the envelope) the slope is `k (x̂ - prox(x̂))`
/// and `alpha = envelope(x̂) - ⟨slope, x̂⟩`. The inequality is verified at
/// every lattice point before returning.
pub fn affine_minorant(f: &GridFunction) -> Result<AffineMinorant> {
    const K: f64 = 1.0;
    if !f.is_proper() {
        return Err(Error::NonProper);
    }
    let convex = check_midpoint_convex(f);
    if !convex.passed {
        return Err(Error::NotConvex(convex.worst_violation));
    }
    let env = moreau_yosida(f, K)?;
    let base = (0..f.len())
        .min_by(|&a, &b| env.envelope.value(a).cmp(&env.envelope.value(b)).then(a.cmp(&b)))
        .expect("nonempty grid");
    let x_hat = f.grid().coordinate(base);
    let prox = proximal_map(&env, base)?;
    let slope: Vec<f64> = x_hat.iter().zip(&prox).map(|(x, p)| K * (x - p)).collect();
    let alpha = env.values()[base] - slope.iter().zip(&x_hat).map(|(a, b)| a * b).sum::<f64>();
    let minorant = AffineMinorant { slope, alpha, base };

    let grid = f.grid();
    for (i, &v) in f.values().iter().enumerate() {
        let below = minorant.eval(&grid.coordinate(i));
        if v < below - VALUE_TOL {
            return Err(Error::PreconditionViolated(format!(
                "affine minorant fails at {i}: f = {v}, minorant = {below}"
            )));
        }
    }
    Ok(minorant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{linear_minus_on_ball, Grid};

    #[test]
    fn validates_breakpoints() {
        assert!(CoercivityMinorant::new(vec![], 0.0).is_err());
        assert!(CoercivityMinorant::new(vec![(1.0, 1.0), (0.5, 2.0)], 0.0).is_err());
        assert!(CoercivityMinorant::new(vec![(0.0, 2.0), (1.0, 1.0)], 0.0).is_err());
        let m = CoercivityMinorant::new(vec![(0.5, 1.0), (2.0, 3.0)], -1.0).unwrap();
        assert_eq!(m.phi(0.1), 0.0);
        assert_eq!(m.phi(0.5), 1.0);
        assert_eq!(m.phi(1.9), 1.0);
        assert_eq!(m.phi(10.0), 3.0);
    }

    #[test]
    fn norm_dominates_identity() {
        let g = Grid::cube(2, -2.0, 2.0, 17).unwrap();
        for norm in [NormKind::L1, NormKind::L2, NormKind::Linf] {
            let f = GridFunction::from_fn(&g, |x| norm.norm(x)).unwrap();
            let m = CoercivityMinorant::tabulate((0..=60).map(|i| i as f64 * 0.05), |t| t, 0.0).unwrap();
            let r = check_coercive_minorant(&f, &m, norm);
            assert!(r.passed);
            assert_eq!(r.worst_violation, 0.0);
        }
    }

    #[test]
    fn linear_on_ball_has_half_slope_minorant() {
        let g = Grid::cube(2, -1.5, 1.5, 13).unwrap();
        let coeffs = [0.8, -0.6];
        let f = linear_minus_on_ball(&coeffs, 1.0, &g, NormKind::L2).unwrap();
        // phi(1) + beta <= -‖g‖ with phi(t) = t/2
        let beta = -NormKind::L2.norm(&coeffs) - 0.5;
        let m = CoercivityMinorant::tabulate((0..=40).map(|i| i as f64 * 0.1), |t| 0.5 * t, beta).unwrap();
        assert!(check_coercive_minorant(&f, &m, NormKind::L2).passed);
    }

    #[test]
    fn zero_function_is_not_coercive() {
        let g = Grid::cube(2, -10.0, 10.0, 21).unwrap();
        let f = GridFunction::constant(&g, 0.0).unwrap();
        let m = CoercivityMinorant::tabulate((0..=20).map(f64::from), |t| t, 0.0).unwrap();
        let r = check_coercive_minorant(&f, &m, NormKind::L2);
        assert!(!r.passed);
        let Witness::Index(i) = r.witness else { panic!() };
        assert!(NormKind::L2.norm(&g.coordinate(i)) > 10.0);
    }

    #[test]
    fn affine_minorant_cases() {
        let g = Grid::line(-2.0, 2.0, 0.25).unwrap();
        let c = GridFunction::constant(&g, 1.5).unwrap();
        let m = affine_minorant(&c).unwrap();
        assert_eq!(m.slope, vec![0.0]);
        assert_eq!(m.alpha, 1.5);

        let abs = GridFunction::from_fn(&g, |x| x[0].abs()).unwrap();
        let m = affine_minorant(&abs).unwrap();
        assert!(m.slope[0].abs() <= 1.0);
        for i in 0..g.len() {
            assert!(abs.values()[i] >= m.eval(&g.coordinate(i)) - 1e-12);
        }

        let spike = GridFunction::from_fn(&g, |x| if x[0] == 0.0 { 1.0 } else { 0.0 }).unwrap();
        assert!(matches!(affine_minorant(&spike), Err(Error::NotConvex(_))));
        let inf = GridFunction::constant(&g, f64::INFINITY).unwrap();
        assert!(matches!(affine_minorant(&inf), Err(Error::NonProper)));
    }

    #[test]
    fn bounded_below_bound_on_ball() {
        let g = Grid::cube(2, -1.5, 1.5, 13).unwrap();
        let f = linear_minus_on_ball(&[1.0, 2.0], 1.0, &g, NormKind::L2).unwrap();
        let m = affine_minorant(&f).unwrap();
        let ball = f.domain();
        let bound = m.lower_bound_on(&ball, NormKind::L2);
        assert!(f.min_value().as_f64() >= bound - 1e-12);
    }
}
