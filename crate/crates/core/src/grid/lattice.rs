use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_DIM: usize = 3;

/// One axis of a uniform lattice: nodes at `origin + i * spacing`, `i < count`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub origin: f64,
    pub spacing: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(origin: f64, spacing: f64, count: usize) -> Self {
        Axis { origin, spacing, count }
    }

    /// Axis with `count` nodes spanning `[lo, hi]` inclusive.
    pub fn span(lo: f64, hi: f64, count: usize) -> Self {
        let spacing = if count > 1 { (hi - lo) / (count - 1) as f64 } else { 1.0 };
        Axis { origin: lo, spacing, count }
    }

    pub fn coordinate(&self, i: usize) -> f64 {
        self.origin + i as f64 * self.spacing
    }
}

/// Uniform rectangular lattice in one to three dimensions.
///
/// Points are numbered in row-major order with the last axis fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    axes: Vec<Axis>,
    strides: [usize; MAX_DIM],
    len: usize,
}

impl Grid {
    pub fn new(axes: Vec<Axis>) -> Result<Self> {
        let dim = axes.len();
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::BadDimension(dim));
        }
        for (a, ax) in axes.iter().enumerate() {
            let reason = if !ax.origin.is_finite() {
                Some("origin must be finite")
            } else if !(ax.spacing.is_finite() && ax.spacing > 0.0) {
                Some("spacing must be positive and finite")
            } else if ax.count == 0 {
                Some("count must be at least 1")
            } else {
                None
            };
            if let Some(reason) = reason {
                return Err(Error::BadAxis { axis: a, reason: reason.into() });
            }
        }
        let mut strides = [0; MAX_DIM];
        let mut len = 1usize;
        for a in (0..dim).rev() {
            strides[a] = len;
            len = len
                .checked_mul(axes[a].count)
                .ok_or_else(|| Error::BadAxis { axis: a, reason: "point count overflows".into() })?;
        }
        Ok(Grid { axes, strides, len })
    }

    /// One-dimensional grid from `lo` to `hi` with step `h`.
    pub fn line(lo: f64, hi: f64, h: f64) -> Result<Self> {
        let count = ((hi - lo) / h).round() as usize + 1;
        Grid::new(vec![Axis::new(lo, h, count)])
    }

    /// Cube `[lo, hi]^dim` with `count` nodes per axis.
    pub fn cube(dim: usize, lo: f64, hi: f64, count: usize) -> Result<Self> {
        Grid::new(vec![Axis::span(lo, hi, count); dim])
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn counts(&self) -> Vec<usize> {
        self.axes.iter().map(|a| a.count).collect()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn stride(&self, axis: usize) -> usize {
        self.strides[axis]
    }

    pub fn min_spacing(&self) -> f64 {
        self.axes.iter().map(|a| a.spacing).fold(f64::INFINITY, f64::min)
    }

    pub fn unravel(&self, flat: usize) -> [usize; MAX_DIM] {
        let mut idx = [0; MAX_DIM];
        let mut rest = flat;
        for (a, slot) in idx.iter_mut().enumerate().take(self.dim()) {
            *slot = rest / self.strides[a];
            rest %= self.strides[a];
        }
        idx
    }

    /// Flat index of a multi-index, or `None` when out of range.
    pub fn ravel(&self, idx: &[usize]) -> Option<usize> {
        if idx.len() != self.dim() {
            return None;
        }
        let mut flat = 0;
        for (a, (&i, ax)) in idx.iter().zip(&self.axes).enumerate() {
            if i >= ax.count {
                return None;
            }
            flat += i * self.strides[a];
        }
        Some(flat)
    }

    pub fn coordinate(&self, flat: usize) -> Vec<f64> {
        let idx = self.unravel(flat);
        self.axes.iter().enumerate().map(|(a, ax)| ax.coordinate(idx[a])).collect()
    }

    /// Displacement `x - y` between two lattice points, computed per axis as
    /// `(i_x - i_y) * spacing` so it depends only on index differences.
    pub fn displacement(&self, x: usize, y: usize) -> [f64; MAX_DIM] {
        let (ix, iy) = (self.unravel(x), self.unravel(y));
        let mut d = [0.0; MAX_DIM];
        for (a, ax) in self.axes.iter().enumerate() {
            d[a] = (ix[a] as f64 - iy[a] as f64) * ax.spacing;
        }
        d
    }

    /// Nearest lattice node to `point`, if `point` lies within the grid's box
    /// (half a cell of slack on each side).
    pub fn nearest(&self, point: &[f64]) -> Option<usize> {
        if point.len() != self.dim() {
            return None;
        }
        let mut idx = [0usize; MAX_DIM];
        for (a, ax) in self.axes.iter().enumerate() {
            let t = ((point[a] - ax.origin) / ax.spacing).round();
            if !(t >= 0.0 && t < ax.count as f64) {
                return None;
            }
            idx[a] = t as usize;
        }
        self.ravel(&idx[..self.dim()])
    }

    /// Lattice node whose coordinate matches `point` to within `rel_tol`
    /// spacings on every axis.
    pub fn locate(&self, point: &[f64], rel_tol: f64) -> Option<usize> {
        let flat = self.nearest(point)?;
        let c = self.coordinate(flat);
        let on = self.axes.iter().enumerate().all(|(a, ax)| (c[a] - point[a]).abs() <= rel_tol * ax.spacing);
        on.then_some(flat)
    }

    /// Flat indices of the axis neighbours of `flat` (up to `2 * dim`).
    pub fn neighbours(&self, flat: usize) -> impl Iterator<Item = Option<usize>> + '_ {
        let idx = self.unravel(flat);
        (0..self.dim()).flat_map(move |a| {
            let lo = (idx[a] > 0).then(|| flat - self.strides[a]);
            let hi = (idx[a] + 1 < self.axes[a].count).then(|| flat + self.strides[a]);
            [lo, hi]
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_axes() {
        assert!(matches!(Grid::new(vec![]), Err(Error::BadDimension(0))));
        assert!(Grid::new(vec![Axis::new(0.0, 1.0, 2); 4]).is_err());
        assert!(Grid::new(vec![Axis::new(0.0, 0.0, 2)]).is_err());
        assert!(Grid::new(vec![Axis::new(0.0, 1.0, 0)]).is_err());
    }

    #[test]
    fn index_round_trip() {
        let g = Grid::new(vec![Axis::new(-1.0, 0.5, 3), Axis::new(2.0, 0.25, 4), Axis::new(0.0, 1.0, 5)]).unwrap();
        assert_eq!(g.len(), 60);
        for flat in 0..g.len() {
            let idx = g.unravel(flat);
            assert_eq!(g.ravel(&idx[..3]), Some(flat));
            let c = g.coordinate(flat);
            assert_eq!(g.locate(&c, 0.0), Some(flat));
            for a in 0..3 {
                assert_eq!(c[a], g.axes()[a].origin + idx[a] as f64 * g.axes()[a].spacing);
            }
        }
        // last axis fastest
        assert_eq!(g.unravel(1), [0, 0, 1]);
        assert_eq!(g.unravel(5), [0, 1, 0]);
    }

    #[test]
    fn line_grid() {
        let g = Grid::line(-2.0, 2.0, 0.5).unwrap();
        assert_eq!(g.len(), 9);
        assert_eq!(g.coordinate(8), vec![2.0]);
        assert_eq!(g.displacement(0, 8)[0], -4.0);
        assert_eq!(g.neighbours(0).flatten().collect::<Vec<_>>(), vec![1]);
    }
}
