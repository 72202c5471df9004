use rayon::prelude::*;

use super::{ExtendedValue, Grid, NormKind, PointSet};
use crate::error::{Error, Result};

/// An extended-real-valued function on the points of a [`Grid`].
///
/// Values are kept in row-major order. `+inf` marks points outside the
/// effective domain; `-inf` is only accepted when `allow_neg_inf` is set.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: Grid,
    values: Vec<f64>,
    allow_neg_inf: bool,
}

impl GridFunction {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        Self::with_neg_inf(grid, values, false)
    }

    pub fn with_neg_inf(grid: Grid, values: Vec<f64>, allow_neg_inf: bool) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::LengthMismatch { expected: grid.len(), actual: values.len() });
        }
        for &v in &values {
            if v.is_nan() {
                return Err(Error::NotANumber);
            }
            if v == f64::NEG_INFINITY && !allow_neg_inf {
                return Err(Error::NegInfNotAllowed);
            }
        }
        Ok(GridFunction { grid, values, allow_neg_inf })
    }

    pub fn from_fn(grid: &Grid, mut f: impl FnMut(&[f64]) -> f64) -> Result<Self> {
        let values = (0..grid.len()).map(|i| f(&grid.coordinate(i))).collect();
        GridFunction::new(grid.clone(), values)
    }

    pub fn constant(grid: &Grid, c: f64) -> Result<Self> {
        GridFunction::new(grid.clone(), vec![c; grid.len()])
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn value(&self, i: usize) -> ExtendedValue {
        ExtendedValue::new(self.values[i]).expect("NaN excluded at construction")
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn allow_neg_inf(&self) -> bool {
        self.allow_neg_inf
    }

    /// Takes at least one finite value.
    pub fn is_proper(&self) -> bool {
        self.values.iter().any(|v| v.is_finite())
    }

    pub fn has_neg_inf(&self) -> bool {
        self.values.contains(&f64::NEG_INFINITY)
    }

    pub fn is_all_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    /// `-inf < inf f < +inf`.
    pub fn is_bounded_below(&self) -> bool {
        self.is_proper() && !self.has_neg_inf()
    }

    /// Bounded on bounded sets. Every subset of a grid is bounded, so this is
    /// the same as being real-valued everywhere.
    pub fn is_bounded(&self) -> bool {
        self.is_all_finite()
    }

    /// Every point of a finite grid is isolated, so any grid function is
    /// lower semicontinuous.
    pub fn is_lower_semicontinuous(&self) -> bool {
        true
    }

    /// Smallest value, `+inf` for a function identically `+inf`.
    pub fn min_value(&self) -> ExtendedValue {
        let m = self.values.iter().cloned().fold(f64::INFINITY, f64::min);
        ExtendedValue::new(m).expect("no NaN")
    }

    /// Largest finite value, if any.
    pub fn max_finite(&self) -> Option<f64> {
        self.values.iter().filter(|v| v.is_finite()).cloned().reduce(f64::max)
    }

    /// Effective domain `{x : f(x) < +inf}`.
    pub fn domain(&self) -> PointSet {
        let mask = self.values.iter().map(|&v| v < f64::INFINITY).collect();
        PointSet::from_mask(&self.grid, mask).expect("same grid")
    }

    /// Adds `c` to every value.
    pub fn shifted(&self, c: f64) -> GridFunction {
        GridFunction {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v + c).collect(),
            allow_neg_inf: self.allow_neg_inf,
        }
    }

    /// Same values with `-inf` permitted.
    pub fn allowing_neg_inf(mut self) -> GridFunction {
        self.allow_neg_inf = true;
        self
    }
}

/// `I_K`: zero on the set, `+inf` elsewhere.
pub fn indicator(set: &PointSet) -> Result<GridFunction> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let values = set.mask().iter().map(|&m| if m { 0.0 } else { f64::INFINITY }).collect();
    GridFunction::new(set.grid().clone(), values)
}

/// `-<coeffs, x> + I_B` where `B` is the centred ball of the given radius.
pub fn linear_minus_on_ball(coeffs: &[f64], radius: f64, grid: &Grid, norm: NormKind) -> Result<GridFunction> {
    if coeffs.len() != grid.dim() {
        return Err(Error::DimensionMismatch { expected: grid.dim(), actual: coeffs.len() });
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::BadParameter(radius));
    }
    let ball = PointSet::ball(grid, &vec![0.0; grid.dim()], radius, norm)?;
    let values = (0..grid.len())
        .map(|i| {
            if ball.contains(i) {
                -grid.coordinate(i).iter().zip(coeffs).map(|(x, g)| x * g).sum::<f64>()
            } else {
                f64::INFINITY
            }
        })
        .collect();
    GridFunction::new(grid.clone(), values)
}

/// `d(x, H) = min_{h in H} ‖x - h‖` at every lattice point.
pub fn distance_to_set(grid: &Grid, set: &PointSet, norm: NormKind) -> Result<GridFunction> {
    if set.grid() != grid {
        return Err(Error::GridMismatch);
    }
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let members: Vec<usize> = set.members().collect();
    let d = grid.dim();
    let values = (0..grid.len())
        .into_par_iter()
        .map(|x| {
            if set.contains(x) {
                return 0.0;
            }
            members.iter().map(|&h| norm.norm(&grid.displacement(x, h)[..d])).fold(f64::INFINITY, f64::min)
        })
        .collect();
    GridFunction::new(grid.clone(), values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indicator_cases() {
        let g = Grid::line(-2.0, 2.0, 0.5).unwrap();
        assert!(matches!(indicator(&PointSet::empty(&g)), Err(Error::EmptySet)));
        let all = indicator(&PointSet::all(&g)).unwrap();
        assert!(all.values().iter().all(|&v| v == 0.0));
        let one = indicator(&PointSet::from_indices(&g, [3]).unwrap()).unwrap();
        assert_eq!(one.values().iter().filter(|v| v.is_finite()).count(), 1);
        assert_eq!(one.values()[3], 0.0);

        let ball = PointSet::ball(&g, &[0.0], 1.0, NormKind::L2).unwrap();
        let ind = indicator(&ball).unwrap();
        let inf = f64::INFINITY;
        assert_eq!(ind.values(), &[inf, inf, 0.0, 0.0, 0.0, 0.0, 0.0, inf, inf]);
        assert!(ind.is_proper());
    }

    #[test]
    fn linear_on_ball() {
        let g = Grid::line(-2.0, 2.0, 0.5).unwrap();
        let f = linear_minus_on_ball(&[1.0], 1.0, &g, NormKind::L2).unwrap();
        assert_eq!(f.min_value().value(), Some(-1.0));
        let at = f.values().iter().position(|&v| v == -1.0).unwrap();
        assert_eq!(g.coordinate(at), vec![1.0]);

        let zero = linear_minus_on_ball(&[0.0], 1.0, &g, NormKind::L2).unwrap();
        let ball = PointSet::ball(&g, &[0.0], 1.0, NormKind::L2).unwrap();
        assert_eq!(zero, indicator(&ball).unwrap());

        assert!(matches!(
            linear_minus_on_ball(&[1.0, 2.0], 1.0, &g, NormKind::L2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn linear_on_linf_ball_face() {
        let g = Grid::cube(2, -2.0, 2.0, 9).unwrap();
        let f = linear_minus_on_ball(&[1.0, 0.0], 1.0, &g, NormKind::Linf).unwrap();
        assert_eq!(f.min_value().value(), Some(-1.0));
        let face: Vec<Vec<f64>> = (0..g.len()).filter(|&i| f.values()[i] == -1.0).map(|i| g.coordinate(i)).collect();
        assert_eq!(face.len(), 5);
        assert!(face.iter().all(|c| c[0] == 1.0 && c[1].abs() <= 1.0));
    }

    #[test]
    fn distance_on_line() {
        let g = Grid::line(0.0, 4.0, 1.0).unwrap();
        let set = PointSet::from_indices(&g, [0]).unwrap();
        let d = distance_to_set(&g, &set, NormKind::L2).unwrap();
        assert_eq!(d.values(), &[0.0, 1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn distance_two_corners_is_min_of_singletons() {
        let g = Grid::cube(2, 0.0, 3.0, 7).unwrap();
        let (a, b) = (0, g.len() - 1);
        for norm in [NormKind::L1, NormKind::L2, NormKind::Linf] {
            let both = distance_to_set(&g, &PointSet::from_indices(&g, [a, b]).unwrap(), norm).unwrap();
            let da = distance_to_set(&g, &PointSet::from_indices(&g, [a]).unwrap(), norm).unwrap();
            let db = distance_to_set(&g, &PointSet::from_indices(&g, [b]).unwrap(), norm).unwrap();
            for i in 0..g.len() {
                assert_eq!(both.values()[i], da.values()[i].min(db.values()[i]));
            }
        }
    }

    #[test]
    fn neg_inf_is_opt_in() {
        let g = Grid::line(0.0, 1.0, 1.0).unwrap();
        assert!(matches!(GridFunction::new(g.clone(), vec![0.0, f64::NEG_INFINITY]), Err(Error::NegInfNotAllowed)));
        assert!(GridFunction::with_neg_inf(g.clone(), vec![0.0, f64::NEG_INFINITY], true).is_ok());
        assert!(matches!(GridFunction::new(g, vec![0.0, f64::NAN]), Err(Error::NotANumber)));
    }
}
