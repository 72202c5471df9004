//! Lipschitz extension of scattered samples.
//!
//! Extending a `k`-Lipschitz function on a sample set `S` by `+inf` and
//! taking its conical envelope gives `min_s f(s) + k ‖x - s‖`, the lower
//! (McShane) extension. Its global minimizers are exactly the minimizers of
//! `f` on `S`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{argmin_set, CheckReport, Witness};
use crate::envelope::{EnvelopeResult, Witnesses};
use crate::error::{Error, Result};
use crate::grid::{Grid, GridFunction, NormKind};

const PAIR_SLACK: f64 = 1e-12;

/// Values of a function at distinct scattered points, with the Lipschitz
/// constant and norm it is claimed to satisfy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSet {
    pub k: f64,
    pub norm: NormKind,
    pub points: Vec<Vec<f64>>,
    pub values: Vec<f64>,
}

impl SampleSet {
    /// Checks shapes, finiteness, `k > 0` and distinctness. The Lipschitz
    /// bound itself is left to [`validate_lipschitz`] so violating inputs can
    /// still be reported on.
    pub fn new(points: Vec<Vec<f64>>, values: Vec<f64>, k: f64, norm: NormKind) -> Result<Self> {
        if points.len() != values.len() {
            return Err(Error::LengthMismatch { expected: points.len(), actual: values.len() });
        }
        if points.is_empty() {
            return Err(Error::EmptySet);
        }
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::BadParameter(k));
        }
        let dim = points[0].len();
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, actual: p.len() });
            }
            if p.iter().any(|c| !c.is_finite()) {
                return Err(Error::Parse("sample coordinates must be finite".into()));
            }
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Parse("sample values must be finite".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(Error::PreconditionViolated(format!("sample {i} repeats an earlier point")));
            }
        }
        Ok(SampleSet { k, norm, points, values })
    }

    /// Like [`SampleSet::new`], additionally rejecting Lipschitz violations.
    pub fn validated(points: Vec<Vec<f64>>, values: Vec<f64>, k: f64, norm: NormKind) -> Result<Self> {
        let s = SampleSet::new(points, values, k, norm)?;
        s.ensure_lipschitz()?;
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SampleSet = serde_json::from_str(text)?;
        SampleSet::new(raw.points, raw.values, raw.k, raw.norm)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    fn distance(&self, a: &[f64], b: &[f64]) -> f64 {
        let z: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.norm.norm(&z)
    }

    fn ensure_lipschitz(&self) -> Result<()> {
        let r = validate_lipschitz(self);
        match (r.passed, r.witness) {
            (true, _) => Ok(()),
            (false, Witness::Pair(i, j)) => Err(Error::LipschitzViolated(i, j)),
            (false, _) => Err(Error::LipschitzViolated(0, 0)),
        }
    }
}

/// All-pairs check of `|f(s) - f(s')| <= k ‖s - s'‖`.
pub fn validate_lipschitz(samples: &SampleSet) -> CheckReport {
    let mut worst = 0.0f64;
    let mut witness = Witness::None;
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            let d = samples.distance(&samples.points[i], &samples.points[j]);
            let excess = (samples.values[i] - samples.values[j]).abs() - samples.k * d;
            if excess > worst {
                worst = excess;
                witness = Witness::Pair(i, j);
            }
        }
    }
    CheckReport::new(
        "sample_lipschitz",
        worst,
        PAIR_SLACK,
        witness,
        format!("{} samples, k = {}, norm = {}", samples.len(), samples.k, samples.norm),
    )
}

/// `min_s f(s) + k ‖x - s‖` at every lattice point, by direct minimization
/// over the samples. Witness indices refer to `samples.points`; ties go to
/// the lowest sample index.
pub fn mcshane_extend(samples: &SampleSet, grid: &Grid) -> Result<EnvelopeResult> {
    if samples.dim() != grid.dim() {
        return Err(Error::DimensionMismatch { expected: grid.dim(), actual: samples.dim() });
    }
    samples.ensure_lipschitz()?;
    let (values, argmin): (Vec<f64>, Vec<Option<usize>>) = (0..grid.len())
        .into_par_iter()
        .map(|x| {
            let c = grid.coordinate(x);
            let mut best = f64::INFINITY;
            let mut arg = None;
            for (s, (p, v)) in samples.points.iter().zip(&samples.values).enumerate() {
                let e = v + samples.k * samples.distance(&c, p);
                if e < best {
                    best = e;
                    arg = Some(s);
                }
            }
            (best, arg)
        })
        .unzip();
    Ok(EnvelopeResult {
        envelope: GridFunction::new(grid.clone(), values)?,
        argmin,
        witnesses: Witnesses::Points(samples.points.clone()),
    })
}

/// Every global minimizer of the extension (within `tol`) is a sample point,
/// and the extension's minimum equals the smallest sample value.
pub fn verify_minimizer_location(samples: &SampleSet, ext: &EnvelopeResult, tol: f64) -> Result<CheckReport> {
    let grid = ext.grid();
    let mut on_grid = Vec::with_capacity(samples.len());
    for (i, p) in samples.points.iter().enumerate() {
        on_grid.push(grid.locate(p, 1e-9).ok_or(Error::SamplesOffGrid(i))?);
    }
    let minimizers = argmin_set(&ext.envelope, tol)?;
    let stray: Vec<usize> = minimizers.members().filter(|i| !on_grid.contains(i)).collect();
    let gap = (ext.envelope.min_value().as_f64() - samples.min_value()).abs();
    let (violation, witness) = match stray.first() {
        Some(&i) => (f64::INFINITY, Witness::Index(i)),
        None => (gap, Witness::None),
    };
    Ok(CheckReport::new(
        "minimizer_location",
        violation,
        tol,
        witness,
        format!(
            "{} minimizers, {} off the sample set, |min extension - min samples| = {gap:e}",
            minimizers.count(),
            stray.len()
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::check_lipschitz;
    use crate::envelope::proximal_map;

    fn grid2() -> Grid {
        Grid::cube(2, -1.0, 1.0, 21).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert!(SampleSet::new(vec![vec![0.0]], vec![], 1.0, NormKind::L2).is_err());
        assert!(SampleSet::new(vec![vec![0.0]], vec![1.0], 0.0, NormKind::L2).is_err());
        assert!(SampleSet::new(vec![vec![0.0], vec![0.0]], vec![1.0, 1.0], 1.0, NormKind::L2).is_err());
        assert!(SampleSet::new(vec![vec![0.0], vec![0.0, 1.0]], vec![1.0, 1.0], 1.0, NormKind::L2).is_err());
        assert!(matches!(
            SampleSet::validated(vec![vec![0.0], vec![1.0]], vec![0.0, 5.0], 1.0, NormKind::L2),
            Err(Error::LipschitzViolated(0, 1))
        ));
    }

    #[test]
    fn lipschitz_validation() {
        let one = SampleSet::new(vec![vec![0.3, 0.1]], vec![7.0], 1.0, NormKind::L2).unwrap();
        assert!(validate_lipschitz(&one).passed);

        let bad = SampleSet::new(vec![vec![0.0], vec![1.0]], vec![0.0, 2.0], 1.0, NormKind::L2).unwrap();
        let r = validate_lipschitz(&bad);
        assert!(!r.passed);
        assert_eq!(r.witness, Witness::Pair(0, 1));

        let pts: Vec<Vec<f64>> = (0..30).map(|i| vec![(i as f64 * 0.7).sin(), (i as f64 * 1.3).cos()]).collect();
        let vals = pts.iter().map(|p| NormKind::L2.norm(p)).collect();
        assert!(validate_lipschitz(&SampleSet::new(pts, vals, 1.0, NormKind::L2).unwrap()).passed);
    }

    #[test]
    fn single_sample_cone() {
        let g = grid2();
        let s = SampleSet::new(vec![vec![0.3, -0.5]], vec![2.0], 3.0, NormKind::L1).unwrap();
        let ext = mcshane_extend(&s, &g).unwrap();
        for x in 0..g.len() {
            let c = g.coordinate(x);
            let expect = 2.0 + 3.0 * ((c[0] - 0.3).abs() + (c[1] + 0.5).abs());
            assert!((ext.values()[x] - expect).abs() <= 1e-12);
            assert_eq!(proximal_map(&ext, x).unwrap(), vec![0.3, -0.5]);
        }
        let r = verify_minimizer_location(&s, &ext, 1e-9).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn restriction_and_lipschitz() {
        let g = grid2();
        let pts = vec![vec![-0.5, 0.0], vec![0.5, 0.5], vec![0.0, -0.9]];
        let vals = vec![0.2, -0.3, 0.4];
        let s = SampleSet::validated(pts.clone(), vals.clone(), 2.0, NormKind::L2).unwrap();
        let ext = mcshane_extend(&s, &g).unwrap();
        for (p, v) in pts.iter().zip(&vals) {
            let i = g.locate(p, 1e-9).unwrap();
            assert_eq!(ext.values()[i], *v);
        }
        assert!(check_lipschitz(&ext.envelope, 2.0, NormKind::L2).unwrap().passed);
        assert_eq!(ext.envelope.min_value().as_f64(), -0.3);
    }

    #[test]
    fn unique_and_tied_minima() {
        let g = grid2();
        let pts = vec![vec![-0.5, 0.0], vec![0.5, 0.5], vec![0.0, -0.9]];
        let s = SampleSet::new(pts.clone(), vec![1.0, 0.0, 1.0], 1.0, NormKind::L2).unwrap();
        let ext = mcshane_extend(&s, &g).unwrap();
        let m: Vec<usize> = argmin_set(&ext.envelope, 1e-9).unwrap().members().collect();
        assert_eq!(m, vec![g.locate(&pts[1], 1e-9).unwrap()]);
        assert!(verify_minimizer_location(&s, &ext, 1e-9).unwrap().passed);

        let s = SampleSet::new(pts.clone(), vec![0.0, 0.0, 1.0], 1.0, NormKind::L2).unwrap();
        let ext = mcshane_extend(&s, &g).unwrap();
        let m: Vec<usize> = argmin_set(&ext.envelope, 1e-9).unwrap().members().collect();
        let mut expect = vec![g.locate(&pts[0], 1e-9).unwrap(), g.locate(&pts[1], 1e-9).unwrap()];
        expect.sort();
        assert_eq!(m, expect);
        assert!(verify_minimizer_location(&s, &ext, 1e-9).unwrap().passed);
    }

    #[test]
    fn off_grid_samples() {
        let g = grid2();
        let s = SampleSet::new(vec![vec![0.033, 0.0]], vec![0.0], 1.0, NormKind::L2).unwrap();
        let ext = mcshane_extend(&s, &g).unwrap();
        assert!(matches!(verify_minimizer_location(&s, &ext, 1e-9), Err(Error::SamplesOffGrid(0))));
    }

    #[test]
    fn json_layout() {
        let text = r#"{"k":2.0,"norm":"linf","points":[[0.0,1.0],[1.0,0.5]],"values":[1.0,0.0]}"#;
        let s = SampleSet::from_json(text).unwrap();
        assert_eq!(s.norm, NormKind::Linf);
        assert_eq!(s.to_json(), text);
        assert!(SampleSet::from_json(r#"{"k":1,"norm":"l3","points":[[0]],"values":[0]}"#).is_err());
    }
}
