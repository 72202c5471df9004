use super::{Grid, NormKind};
use crate::error::{Error, Result};

/// A finite subset of a grid, stored as one membership flag per lattice point.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    grid: Grid,
    mask: Vec<bool>,
}

impl PointSet {
    pub fn from_mask(grid: &Grid, mask: Vec<bool>) -> Result<Self> {
        if mask.len() != grid.len() {
            return Err(Error::LengthMismatch { expected: grid.len(), actual: mask.len() });
        }
        Ok(PointSet { grid: grid.clone(), mask })
    }

    pub fn empty(grid: &Grid) -> Self {
        PointSet { grid: grid.clone(), mask: vec![false; grid.len()] }
    }

    pub fn all(grid: &Grid) -> Self {
        PointSet { grid: grid.clone(), mask: vec![true; grid.len()] }
    }

    pub fn from_indices(grid: &Grid, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = PointSet::empty(grid);
        for i in indices {
            if i >= grid.len() {
                return Err(Error::LengthMismatch { expected: grid.len(), actual: i + 1 });
            }
            set.mask[i] = true;
        }
        Ok(set)
    }

    pub fn from_predicate(grid: &Grid, mut pred: impl FnMut(&[f64]) -> bool) -> Self {
        let mask = (0..grid.len()).map(|i| pred(&grid.coordinate(i))).collect();
        PointSet { grid: grid.clone(), mask }
    }

    /// Lattice points with `‖x - center‖ <= radius`.
    ///
    /// Membership carries a relative slack of `1e-12` so that nodes lying on
    /// the sphere up to rounding (e.g. `(0.6, 0.8)` for the unit L2 ball) are
    /// counted as members.
    pub fn ball(grid: &Grid, center: &[f64], radius: f64, norm: NormKind) -> Result<Self> {
        if center.len() != grid.dim() {
            return Err(Error::DimensionMismatch { expected: grid.dim(), actual: center.len() });
        }
        let limit = radius * (1.0 + 1e-12);
        Ok(PointSet::from_predicate(grid, |x| {
            let z: Vec<f64> = x.iter().zip(center).map(|(a, c)| a - c).collect();
            norm.norm(&z) <= limit
        }))
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask.get(i).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, i: usize) {
        self.mask[i] = true;
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter().enumerate().filter_map(|(i, &m)| m.then_some(i))
    }

    pub fn count(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&m| m)
    }

    /// Members with at least one axis neighbour outside the set or off the grid.
    pub fn is_boundary(&self, i: usize) -> bool {
        if !self.contains(i) {
            return false;
        }
        let nbrs: Vec<Option<usize>> = self.grid.neighbours(i).collect();
        nbrs.iter().any(|n| match n {
            Some(j) => !self.mask[*j],
            None => true,
        })
    }

    /// Largest pairwise distance between members.
    pub fn diameter(&self, norm: NormKind) -> f64 {
        let pts: Vec<usize> = self.members().collect();
        let mut best = 0.0f64;
        for (a, &x) in pts.iter().enumerate() {
            for &y in &pts[a + 1..] {
                let d = self.grid.displacement(x, y);
                best = best.max(norm.norm(&d[..self.grid.dim()]));
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_on_line() {
        let g = Grid::line(-2.0, 2.0, 0.5).unwrap();
        let b = PointSet::ball(&g, &[0.0], 1.0, NormKind::L2).unwrap();
        let xs: Vec<f64> = b.members().map(|i| g.coordinate(i)[0]).collect();
        assert_eq!(xs, vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert!(b.is_boundary(g.nearest(&[1.0]).unwrap()));
        assert!(!b.is_boundary(g.nearest(&[0.0]).unwrap()));
        assert_eq!(b.diameter(NormKind::L2), 2.0);
    }

    #[test]
    fn diagonal_node_on_unit_circle() {
        let g = Grid::cube(2, -1.0, 1.0, 11).unwrap();
        let b = PointSet::ball(&g, &[0.0, 0.0], 1.0, NormKind::L2).unwrap();
        assert!(b.contains(g.nearest(&[0.6, 0.8]).unwrap()));
        assert!(!b.contains(g.nearest(&[0.8, 0.8]).unwrap()));
    }
}
