//! Desk-scale reproductions of four explicit constructions: a minimizing
//! sequence without a limit in `C[0,1]`, a Weierstrass-type function built
//! from a convergent sequence, attainment of a linear functional on a ball,
//! and a function with a `-inf` value whose conical envelope is `≡ -inf`.
//!
//! Each reproduction returns a serializable report whose `passed` field is the
//! conjunction of its embedded assertions.

use serde::Serialize;

use crate::analysis::{argmin_set, check_infimum_preservation, check_minimizer_preservation, CheckReport};
use crate::envelope::{envelope_sequence, inf_conv_bruteforce, pasch_hausdorff, Kernel};
use crate::error::{Error, Result};
use crate::grid::io::JsonValue;
use crate::grid::{linear_minus_on_ball, Grid, GridFunction, NormKind, PointSet};

const EXACT_TOL: f64 = 1e-12;
const VALUE_TOL: f64 = 1e-9;

// ---------------------------------------------------------------------------
// minimizing sequence on C[0,1]

/// Piecewise-linear functions on `[0, 1]` with `m` subintervals, and the
/// trapezoid weights of `u ↦ ∫₀^½ u − ∫_½^1 u`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Example16Instance {
    pub m: usize,
    pub node_values: Vec<f64>,
    pub constraint_weights: Vec<f64>,
}

impl Example16Instance {
    /// Node values of the ramp function `ũ` with `n + 1 = m`.
    pub fn ramp(m: usize) -> Result<Self> {
        let w = trapezoid_weights(m)?;
        let n1 = m as f64;
        let u = (0..=m)
            .map(|i| {
                if 2 * i + 2 <= m {
                    1.0
                } else if 2 * i >= m + 2 {
                    -1.0
                } else {
                    let t = i as f64 / n1;
                    -n1 * t + n1 / 2.0
                }
            })
            .collect();
        Ok(Example16Instance { m, node_values: u, constraint_weights: w })
    }

    pub fn h(&self) -> f64 {
        1.0 / self.m as f64
    }

    pub fn constraint(&self) -> f64 {
        dot(&self.constraint_weights, &self.node_values)
    }

    /// Sup norm; exact for piecewise-linear functions.
    pub fn sup_norm(&self) -> f64 {
        self.node_values.iter().fold(0.0, |a, v| a.max(v.abs()))
    }

    /// Same instance scaled onto the constraint hyperplane.
    pub fn normalized(&self) -> Self {
        let c = self.constraint();
        Example16Instance { node_values: self.node_values.iter().map(|v| v / c).collect(), ..self.clone() }
    }
}

fn check_subdivision(m: usize) -> Result<()> {
    if m % 2 == 1 {
        return Err(Error::OddSubdivision(m));
    }
    if m < 4 {
        return Err(Error::PreconditionViolated(format!("need m >= 4, got {m}")));
    }
    Ok(())
}

fn trapezoid_weights(m: usize) -> Result<Vec<f64>> {
    check_subdivision(m)?;
    let h = 1.0 / m as f64;
    let half = m / 2;
    Ok((0..=m)
        .map(|i| match i {
            0 => h / 2.0,
            i if i < half => h,
            i if i == half => 0.0,
            i if i < m => -h,
            _ => -h / 2.0,
        })
        .collect())
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `min { max|u| : ⟨w, u⟩ = 1 }`, equal to `1 / Σ|w|` by scaling.
pub fn example16_discrete_minimum(m: usize) -> Result<f64> {
    let w = trapezoid_weights(m)?;
    Ok(1.0 / w.iter().map(|x| x.abs()).sum::<f64>())
}

/// Independent estimate of the same minimum: bisection on the bound `t`,
/// where `t` is feasible iff coordinate ascent of `⟨w, u⟩` over the box
/// `|u| <= t`, started from the clamped ramp, reaches 1.
pub fn example16_descent_minimum(m: usize) -> Result<f64> {
    let inst = Example16Instance::ramp(m)?.normalized();
    let w = &inst.constraint_weights;
    let feasible = |t: f64| {
        let mut u: Vec<f64> = inst.node_values.iter().map(|v| v.clamp(-t, t)).collect();
        for (ui, wi) in u.iter_mut().zip(w) {
            if *wi > 0.0 {
                *ui = t;
            } else if *wi < 0.0 {
                *ui = -t;
            }
        }
        dot(w, &u) >= 1.0
    };
    let (mut lo, mut hi) = (0.0, inst.sup_norm());
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if feasible(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

#[derive(Debug, Clone, Serialize)]
pub struct Example16Row {
    pub m: usize,
    pub h: f64,
    /// Constraint value of the ramp before normalization.
    pub ramp_constraint: f64,
    pub normalized_constraint: f64,
    pub sup_norm: f64,
    pub expected: f64,
    pub discrete_minimum: f64,
    pub descent_minimum: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Example16Report {
    pub rows: Vec<Example16Row>,
    pub strictly_decreasing: bool,
    pub all_above_one: bool,
    pub passed: bool,
}

impl Example16Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// `m, discrete_minimum, sup_norm` per row.
    pub fn minima_csv(&self) -> String {
        let mut s = String::from("m,discrete_minimum,sup_norm,descent_minimum\n");
        for r in &self.rows {
            s.push_str(&format!("{},{},{},{}\n", r.m, r.discrete_minimum, r.sup_norm, r.descent_minimum));
        }
        s
    }
}

/// Node values `t, u(t)` of the normalized ramp.
pub fn example16_nodes_csv(m: usize) -> Result<String> {
    let u = Example16Instance::ramp(m)?.normalized();
    let mut s = String::from("t,u\n");
    for (i, v) in u.node_values.iter().enumerate() {
        s.push_str(&format!("{},{}\n", i as f64 / m as f64, v));
    }
    Ok(s)
}

pub fn example16_paper_sequence(m_list: &[usize]) -> Result<Example16Report> {
    let mut rows = Vec::with_capacity(m_list.len());
    for &m in m_list {
        let ramp = Example16Instance::ramp(m)?;
        let u = ramp.normalized();
        let expected = m as f64 / (m as f64 - 1.0);
        let discrete_minimum = example16_discrete_minimum(m)?;
        let descent_minimum = example16_descent_minimum(m)?;
        let row = Example16Row {
            m,
            h: ramp.h(),
            ramp_constraint: ramp.constraint(),
            normalized_constraint: u.constraint(),
            sup_norm: u.sup_norm(),
            expected,
            discrete_minimum,
            descent_minimum,
            passed: false,
        };
        let passed = (row.ramp_constraint - (1.0 - row.h)).abs() <= EXACT_TOL
            && (row.normalized_constraint - 1.0).abs() <= EXACT_TOL
            && (row.sup_norm - expected).abs() <= EXACT_TOL
            && (discrete_minimum - expected).abs() <= EXACT_TOL
            && (descent_minimum - discrete_minimum).abs() <= VALUE_TOL;
        rows.push(Example16Row { passed, ..row });
    }
    let mut by_m: Vec<&Example16Row> = rows.iter().collect();
    by_m.sort_by_key(|r| r.m);
    let strictly_decreasing =
        by_m.windows(2).all(|w| w[0].m == w[1].m || w[0].discrete_minimum > w[1].discrete_minimum);
    let all_above_one = rows.iter().all(|r| r.discrete_minimum > 1.0);
    let passed = strictly_decreasing && all_above_one && rows.iter().all(|r| r.passed);
    Ok(Example16Report { rows, strictly_decreasing, all_above_one, passed })
}

// ---------------------------------------------------------------------------
// Weierstrass-type function from a sequence

/// A sequence of lattice points inside a bounded set `A`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeierstrassInstance {
    pub set: PointSet,
    /// Flat indices `x_1, x_2, ...`.
    pub sequence: Vec<usize>,
    pub k_terms: usize,
    pub diameter: f64,
}

impl WeierstrassInstance {
    /// Diameter is measured in `norm` over all pairs of `set`.
    pub fn new(set: PointSet, sequence: Vec<usize>, k_terms: usize, norm: NormKind) -> Result<Self> {
        if k_terms == 0 {
            return Err(Error::PreconditionViolated("k_terms must be at least 1".into()));
        }
        if sequence.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(&i) = sequence.iter().find(|&&i| i >= set.grid().len() || !set.contains(i)) {
            return Err(Error::PreconditionViolated(format!("sequence point {i} is outside the set")));
        }
        let diameter = set.diameter(norm);
        if diameter.is_nan() || diameter <= 0.0 {
            return Err(Error::DegenerateDiameter);
        }
        Ok(WeierstrassInstance { set, sequence, k_terms, diameter })
    }

    /// Points `p + r0 ρⁿ (cos nθ, sin nθ)` for `n = 1..=len`, snapped to the
    /// nearest lattice point. The set is the whole grid.
    #[allow(clippy::too_many_arguments)]
    pub fn spiral(
        grid: &Grid,
        p: [f64; 2],
        r0: f64,
        rho: f64,
        theta: f64,
        len: usize,
        k_terms: usize,
        norm: NormKind,
    ) -> Result<Self> {
        if grid.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, actual: grid.dim() });
        }
        let mut seq = Vec::with_capacity(len);
        for n in 1..=len {
            let r = r0 * rho.powi(n as i32);
            let a = theta * n as f64;
            let x = [p[0] + r * a.cos(), p[1] + r * a.sin()];
            seq.push(
                grid.nearest(&x)
                    .ok_or_else(|| Error::PreconditionViolated(format!("sequence point {n} leaves the grid")))?,
            );
        }
        WeierstrassInstance::new(PointSet::all(grid), seq, k_terms, norm)
    }

    /// Upper bound on the truncated tail of the series.
    pub fn tail_bound(&self) -> f64 {
        0.5f64.powi(self.k_terms as i32)
    }
}

/// `f(x) = Σ_{k=1}^{K} d(x, X_k) / (2^k D(A))` on `A`, `+inf` elsewhere, with
/// `X_k = {x_n : n >= k}`. Once `k` runs past the sequence, `X_k` is the last
/// point alone.
pub fn weierstrass_function(inst: &WeierstrassInstance, grid: &Grid, norm: NormKind) -> Result<GridFunction> {
    if inst.set.grid() != grid {
        return Err(Error::GridMismatch);
    }
    if inst.diameter.is_nan() || inst.diameter <= 0.0 {
        return Err(Error::DegenerateDiameter);
    }
    let len = inst.sequence.len();
    let coords: Vec<Vec<f64>> = inst.sequence.iter().map(|&i| grid.coordinate(i)).collect();
    let values = (0..grid.len())
        .map(|x| {
            if !inst.set.contains(x) {
                return f64::INFINITY;
            }
            let c = grid.coordinate(x);
            let dist: Vec<f64> =
                coords.iter().map(|p| norm.norm(&c.iter().zip(p).map(|(a, b)| a - b).collect::<Vec<_>>())).collect();
            // suffix minima give d(x, X_k) for every k at once
            let mut suffix = dist.clone();
            for n in (0..len.saturating_sub(1)).rev() {
                suffix[n] = suffix[n].min(suffix[n + 1]);
            }
            let mut scale = 1.0;
            let mut total = 0.0;
            for k in 1..=inst.k_terms {
                scale *= 0.5;
                total += suffix[k.min(len) - 1] * scale / inst.diameter;
            }
            total
        })
        .collect();
    GridFunction::new(grid.clone(), values)
}

#[derive(Debug, Clone, Serialize)]
pub struct WeierstrassBound {
    pub k0: usize,
    pub point: Vec<f64>,
    pub value: f64,
    pub bound: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeierstrassReport {
    pub limit: Vec<f64>,
    pub nearest_to_limit: Vec<f64>,
    pub diameter: f64,
    pub k_terms: usize,
    pub tail_bound: f64,
    pub bounds: Vec<WeierstrassBound>,
    pub argmin: Vec<Vec<f64>>,
    #[serde(serialize_with = "extended")]
    pub minimum: f64,
    pub max_value: f64,
    pub argmin_at_limit: bool,
    pub passed: bool,
}

impl WeierstrassReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

fn extended<S: serde::Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    JsonValue(*v).serialize(s)
}

/// Builds the function for a sequence converging to `limit`, checks
/// `f(x_{k0}) < 2^{1-k0}` for `k0 = 1..=k0_max` and that the global
/// minimizer is the lattice point nearest the limit.
pub fn weierstrass_demo(
    inst: &WeierstrassInstance,
    limit: &[f64],
    norm: NormKind,
    k0_max: usize,
) -> Result<(WeierstrassReport, GridFunction)> {
    let grid = inst.set.grid();
    let f = weierstrass_function(inst, grid, norm)?;
    let nearest = grid.nearest(limit).ok_or(Error::PreconditionViolated("limit lies outside the grid".into()))?;
    let bounds: Vec<WeierstrassBound> = (1..=k0_max.min(inst.k_terms).min(inst.sequence.len()))
        .map(|k0| {
            let x = inst.sequence[k0 - 1];
            let value = f.values()[x];
            let bound = 2.0f64.powi(1 - k0 as i32);
            WeierstrassBound { k0, point: grid.coordinate(x), value, bound, passed: value < bound }
        })
        .collect();
    let am = argmin_set(&f, 0.0)?;
    let argmin: Vec<usize> = am.members().collect();
    let argmin_at_limit = argmin == vec![nearest];
    let max_value = f.max_finite().unwrap_or(0.0);
    let in_range = f.min_value().as_f64() >= 0.0 && max_value < 1.0;
    let passed = argmin_at_limit && in_range && bounds.len() == k0_max && bounds.iter().all(|b| b.passed);
    let report = WeierstrassReport {
        limit: limit.to_vec(),
        nearest_to_limit: grid.coordinate(nearest),
        diameter: inst.diameter,
        k_terms: inst.k_terms,
        tail_bound: inst.tail_bound(),
        bounds,
        argmin: argmin.iter().map(|&i| grid.coordinate(i)).collect(),
        minimum: f.min_value().as_f64(),
        max_value,
        argmin_at_limit,
        passed,
    };
    Ok((report, f))
}

// ---------------------------------------------------------------------------
// attainment of a linear functional on a ball

#[derive(Debug, Clone, Serialize)]
pub struct AttainmentStep {
    pub n: usize,
    pub minimum: f64,
    pub argmin_matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormAttainmentReport {
    pub coeffs: Vec<f64>,
    pub radius: f64,
    pub norm: NormKind,
    pub ball_points: usize,
    /// `min f` for `f = -g + I_B`.
    pub attained_value: f64,
    /// `-max ⟨g, x⟩` over the ball mask, by direct scan.
    pub expected_value: f64,
    pub steps: Vec<AttainmentStep>,
    pub attaining_points: Vec<Vec<f64>>,
    pub boundary_adjacent: bool,
    pub passed: bool,
}

impl NormAttainmentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

pub fn norm_attainment_demo(
    coeffs: &[f64],
    radius: f64,
    grid: &Grid,
    norm: NormKind,
    n_max: usize,
) -> Result<NormAttainmentReport> {
    if coeffs.len() != grid.dim() {
        return Err(Error::DimensionMismatch { expected: grid.dim(), actual: coeffs.len() });
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::BadParameter(radius));
    }
    let ball = PointSet::ball(grid, &vec![0.0; grid.dim()], radius, norm)?;
    if ball.is_empty() {
        return Err(Error::BallOffGrid);
    }
    let f = linear_minus_on_ball(coeffs, radius, grid, norm)?;
    let expected_value = -ball.members().map(|i| dot(coeffs, &grid.coordinate(i))).fold(f64::NEG_INFINITY, f64::max);
    let attained_value = f.min_value().as_f64();
    let argmin_f = argmin_set(&f, VALUE_TOL)?;

    let seq = envelope_sequence(&f, n_max, norm)?;
    let steps: Vec<AttainmentStep> = seq
        .iter()
        .enumerate()
        .map(|(i, env)| AttainmentStep {
            n: i + 1,
            minimum: env.envelope.min_value().as_f64(),
            argmin_matches: argmin_set(&env.envelope, VALUE_TOL).map(|s| s == argmin_f).unwrap_or(false),
        })
        .collect();

    let attaining: Vec<usize> = argmin_f.members().collect();
    let boundary_adjacent = attaining.iter().any(|&i| ball.is_boundary(i));
    let passed = (attained_value - expected_value).abs() <= VALUE_TOL
        && steps.iter().all(|s| (s.minimum - attained_value).abs() <= VALUE_TOL && s.argmin_matches)
        && boundary_adjacent;
    Ok(NormAttainmentReport {
        coeffs: coeffs.to_vec(),
        radius,
        norm,
        ball_points: ball.count(),
        attained_value,
        expected_value,
        steps,
        attaining_points: attaining.iter().map(|&i| grid.coordinate(i)).collect(),
        boundary_adjacent,
        passed,
    })
}

// ---------------------------------------------------------------------------
// -inf counterexample

#[derive(Debug, Clone, Serialize)]
pub struct Remark26Report {
    pub k: f64,
    pub points: usize,
    pub envelope_all_neg_inf: bool,
    pub infimum_check: CheckReport,
    /// Expected to fail.
    pub minimizer_check: CheckReport,
    /// A nonzero node minimizing the envelope but not the function.
    pub spurious_minimizer: Option<Vec<f64>>,
    /// Same function with `-inf` replaced by a large finite value.
    pub finite_variant_check: CheckReport,
    pub passed: bool,
}

impl Remark26Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// Value substituted for `-inf` in the finite variant.
pub const FINITE_FLOOR: f64 = -1e6;

/// `f = ln x` for `x > 0`, `-inf` at 0, `+inf` for `x < 0`.
pub fn remark26_function(grid: &Grid) -> Result<GridFunction> {
    if grid.dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, actual: grid.dim() });
    }
    let zero = grid.locate(&[0.0], 1e-9).ok_or(Error::ZeroNotOnGrid)?;
    if zero + 1 >= grid.len() {
        return Err(Error::PreconditionViolated("grid needs positive nodes".into()));
    }
    let values = (0..grid.len())
        .map(|i| match i.cmp(&zero) {
            std::cmp::Ordering::Less => f64::INFINITY,
            std::cmp::Ordering::Equal => f64::NEG_INFINITY,
            std::cmp::Ordering::Greater => grid.coordinate(i)[0].ln(),
        })
        .collect();
    GridFunction::with_neg_inf(grid.clone(), values, true)
}

pub fn remark26_counterexample(grid: &Grid, k: f64) -> Result<Remark26Report> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::BadParameter(k));
    }
    let f = remark26_function(grid)?;
    let env = inf_conv_bruteforce(&f, Kernel::conical(k, NormKind::L2));
    let envelope_all_neg_inf = env.values().iter().all(|&v| v == f64::NEG_INFINITY);
    let infimum_check = check_infimum_preservation(&f, &env);
    let minimizer_check = check_minimizer_preservation(&f, &env, VALUE_TOL);
    let spurious_minimizer = (0..grid.len())
        .find(|&i| f.values()[i] != f64::NEG_INFINITY && env.values()[i] == f64::NEG_INFINITY)
        .map(|i| grid.coordinate(i));

    let floor = GridFunction::new(
        grid.clone(),
        f.values().iter().map(|&v| if v == f64::NEG_INFINITY { FINITE_FLOOR } else { v }).collect(),
    )?;
    let floor_env = pasch_hausdorff(&floor, k, NormKind::L2)?;
    let finite_variant_check = check_minimizer_preservation(&floor, &floor_env, VALUE_TOL);

    let passed = envelope_all_neg_inf
        && infimum_check.passed
        && !minimizer_check.passed
        && spurious_minimizer.is_some()
        && finite_variant_check.passed;
    Ok(Remark26Report {
        k,
        points: grid.len(),
        envelope_all_neg_inf,
        infimum_check,
        minimizer_check,
        spurious_minimizer,
        finite_variant_check,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_and_ramp() {
        for m in [4, 6, 10, 100, 1000] {
            let inst = Example16Instance::ramp(m).unwrap();
            let h = inst.h();
            let total: f64 = inst.constraint_weights.iter().map(|w| w.abs()).sum();
            assert!((total - (1.0 - h)).abs() <= 1e-12);
            assert_eq!(inst.constraint_weights[m / 2], 0.0);
            assert_eq!(inst.node_values[m / 2], 0.0);
            // ramp nodes equal sign(w)
            for (u, w) in inst.node_values.iter().zip(&inst.constraint_weights) {
                assert_eq!(
                    *u,
                    if *w > 0.0 {
                        1.0
                    } else if *w < 0.0 {
                        -1.0
                    } else {
                        0.0
                    }
                );
            }
            assert!((inst.constraint() - (1.0 - h)).abs() <= 1e-12);
        }
        assert!(matches!(Example16Instance::ramp(5), Err(Error::OddSubdivision(5))));
        assert!(example16_discrete_minimum(2).is_err());
    }

    #[test]
    fn minima_match_closed_form() {
        for (m, expect) in [(4, 4.0 / 3.0), (10, 10.0 / 9.0), (100, 100.0 / 99.0), (1000, 1000.0 / 999.0)] {
            assert!((example16_discrete_minimum(m).unwrap() - expect).abs() <= 1e-12);
            assert!((example16_descent_minimum(m).unwrap() - expect).abs() <= 1e-9);
        }
        let r = example16_paper_sequence(&[4, 10, 100, 1000]).unwrap();
        assert!(r.passed, "{}", r.to_json());
        assert!(r.minima_csv().starts_with("m,discrete_minimum"));
        assert_eq!(example16_nodes_csv(4).unwrap().lines().count(), 6);
    }

    fn box_grid() -> Grid {
        Grid::cube(2, -1.0, 1.0, 41).unwrap()
    }

    #[test]
    fn weierstrass_constant_sequence() {
        let g = box_grid();
        let p = g.nearest(&[0.3, -0.2]).unwrap();
        let inst = WeierstrassInstance::new(PointSet::all(&g), vec![p; 5], 10, NormKind::L2).unwrap();
        let f = weierstrass_function(&inst, &g, NormKind::L2).unwrap();
        assert_eq!(f.values()[p], 0.0);
        assert!(f.values().iter().all(|&v| (0.0..1.0).contains(&v)));
    }

    #[test]
    fn weierstrass_spiral() {
        let g = box_grid();
        let limit = [0.2, 0.1];
        let inst = WeierstrassInstance::spiral(&g, limit, 0.6, 0.7, 1.1, 40, 30, NormKind::L2).unwrap();
        let (r, _) = weierstrass_demo(&inst, &limit, NormKind::L2, 8).unwrap();
        assert!(r.passed, "{}", r.to_json());
        assert!(r.tail_bound < 1e-8);
    }

    #[test]
    fn weierstrass_errors() {
        let g = box_grid();
        let one = PointSet::from_indices(&g, [7]).unwrap();
        assert!(matches!(WeierstrassInstance::new(one, vec![7], 3, NormKind::L2), Err(Error::DegenerateDiameter)));
        assert!(WeierstrassInstance::new(PointSet::all(&g), vec![], 3, NormKind::L2).is_err());
        assert!(WeierstrassInstance::new(PointSet::all(&g), vec![1], 0, NormKind::L2).is_err());
    }

    #[test]
    fn attainment_cases() {
        let g = Grid::line(-1.5, 1.5, 0.25).unwrap();
        let r = norm_attainment_demo(&[1.0], 1.0, &g, NormKind::L2, 5).unwrap();
        assert!(r.passed);
        assert_eq!(r.attained_value, -1.0);
        assert_eq!(r.attaining_points, vec![vec![1.0]]);

        let r = norm_attainment_demo(&[0.0], 1.0, &g, NormKind::L2, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.attained_value, 0.0);
        assert_eq!(r.attaining_points.len(), r.ball_points);

        let g2 = Grid::cube(2, -1.2, 1.2, 25).unwrap();
        let r = norm_attainment_demo(&[3.0, 4.0], 1.0, &g2, NormKind::L2, 2).unwrap();
        assert!(r.passed);
        assert!((r.attained_value + 5.0).abs() < 0.1);
        assert_eq!(
            r.attaining_points,
            [vec![0.6, 0.8]].iter().map(|p| g2.coordinate(g2.nearest(p).unwrap())).collect::<Vec<_>>()
        );

        let far = Grid::line(5.0, 6.0, 0.5).unwrap();
        assert!(matches!(norm_attainment_demo(&[1.0], 1.0, &far, NormKind::L2, 2), Err(Error::BallOffGrid)));
    }

    #[test]
    fn remark26() {
        let g = Grid::line(-1.0, 3.0, 0.25).unwrap();
        let r = remark26_counterexample(&g, 1.0).unwrap();
        assert!(r.envelope_all_neg_inf);
        assert!(!r.minimizer_check.passed);
        assert!(r.infimum_check.passed);
        assert!(r.finite_variant_check.passed);
        assert!(r.passed);

        let off = Grid::line(0.1, 2.1, 0.5).unwrap();
        assert!(matches!(remark26_counterexample(&off, 1.0), Err(Error::ZeroNotOnGrid)));
    }
}
