use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The norm carried by the underlying space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormKind {
    L1,
    #[default]
    L2,
    Linf,
}

impl NormKind {
    pub fn norm(self, z: &[f64]) -> f64 {
        match self {
            NormKind::L1 => z.iter().map(|v| v.abs()).sum(),
            NormKind::L2 => match z {
                [v] => v.abs(),
                _ => z.iter().map(|v| v * v).sum::<f64>().sqrt(),
            },
            NormKind::Linf => z.iter().fold(0.0, |m, v| m.max(v.abs())),
        }
    }

    /// The norm whose unit ball is polar to this one's.
    pub fn dual(self) -> NormKind {
        match self {
            NormKind::L1 => NormKind::Linf,
            NormKind::L2 => NormKind::L2,
            NormKind::Linf => NormKind::L1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NormKind::L1 => "l1",
            NormKind::L2 => "l2",
            NormKind::Linf => "linf",
        }
    }
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "l1" => Ok(NormKind::L1),
            "l2" => Ok(NormKind::L2),
            "linf" => Ok(NormKind::Linf),
            other => Err(Error::Parse(format!("unknown norm {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const ALL: [NormKind; 3] = [NormKind::L1, NormKind::L2, NormKind::Linf];

    #[test]
    fn values() {
        let z = [3.0, -4.0];
        assert_eq!(NormKind::L1.norm(&z), 7.0);
        assert_eq!(NormKind::L2.norm(&z), 5.0);
        assert_eq!(NormKind::Linf.norm(&z), 4.0);
        for n in ALL {
            assert_eq!(n.norm(&[0.0, 0.0, 0.0]), 0.0);
            assert_eq!(n.norm(&[-2.5]), 2.5);
            assert_eq!(n.name().parse::<NormKind>().unwrap(), n);
        }
    }

    proptest! {
        #[test]
        fn norm_axioms(x in prop::collection::vec(-1e3f64..1e3, 3),
                       y in prop::collection::vec(-1e3f64..1e3, 3),
                       t in -10.0f64..10.0) {
            for n in ALL {
                let s: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
                prop_assert!(n.norm(&s) <= n.norm(&x) + n.norm(&y) + 1e-9);
                let tx: Vec<f64> = x.iter().map(|a| t * a).collect();
                prop_assert!((n.norm(&tx) - t.abs() * n.norm(&x)).abs() <= 1e-9 * (1.0 + n.norm(&tx)));
                if x.iter().any(|&v| v != 0.0) {
                    prop_assert!(n.norm(&x) > 0.0);
                }
            }
        }
    }
}
