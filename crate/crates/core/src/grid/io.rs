//! JSON and CSV forms of grid functions.
//!
//! JSON layout: `{"dim":d,"origin":[..],"spacing":[..],"counts":[..],"values":[..]}`
//! where each value is a number or one of the strings `"inf"` / `"-inf"`.
//! Reading a file that contains `"-inf"` yields a function with
//! `allow_neg_inf` set.

use std::fmt::Write as _;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use super::{Axis, Grid, GridFunction};
use crate::error::{Error, Result};

/// Extended real as it appears in JSON.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JsonValue(pub f64);

impl Serialize for JsonValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0 == f64::INFINITY {
            s.serialize_str("inf")
        } else if self.0 == f64::NEG_INFINITY {
            s.serialize_str("-inf")
        } else {
            s.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for JsonValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(x) => Ok(JsonValue(x)),
            Raw::Str(s) => match s.as_str() {
                "inf" | "+inf" => Ok(JsonValue(f64::INFINITY)),
                "-inf" => Ok(JsonValue(f64::NEG_INFINITY)),
                other => Err(de::Error::custom(format!("bad extended value {other:?}"))),
            },
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct GridFunctionJson {
    dim: usize,
    origin: Vec<f64>,
    spacing: Vec<f64>,
    counts: Vec<usize>,
    values: Vec<JsonValue>,
}

impl GridFunction {
    pub fn to_json(&self) -> String {
        let g = self.grid();
        let doc = GridFunctionJson {
            dim: g.dim(),
            origin: g.axes().iter().map(|a| a.origin).collect(),
            spacing: g.axes().iter().map(|a| a.spacing).collect(),
            counts: g.counts(),
            values: self.values().iter().map(|&v| JsonValue(v)).collect(),
        };
        serde_json::to_string(&doc).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GridFunctionJson = serde_json::from_str(text)?;
        if doc.origin.len() != doc.dim || doc.spacing.len() != doc.dim || doc.counts.len() != doc.dim {
            return Err(Error::Parse(format!(
                "dim is {} but origin/spacing/counts have lengths {}/{}/{}",
                doc.dim,
                doc.origin.len(),
                doc.spacing.len(),
                doc.counts.len()
            )));
        }
        let axes = (0..doc.dim).map(|a| Axis::new(doc.origin[a], doc.spacing[a], doc.counts[a])).collect();
        let grid = Grid::new(axes)?;
        let values: Vec<f64> = doc.values.into_iter().map(|v| v.0).collect();
        let neg = values.contains(&f64::NEG_INFINITY);
        GridFunction::with_neg_inf(grid, values, neg)
    }

    /// One row per lattice point: `x1,..,xd,value`.
    pub fn to_csv(&self) -> String {
        let g = self.grid();
        let mut out = String::new();
        let header: Vec<String> = (1..=g.dim()).map(|a| format!("x{a}")).chain(["value".into()]).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for (i, &v) in self.values().iter().enumerate() {
            for c in g.coordinate(i) {
                write!(out, "{c},").unwrap();
            }
            writeln!(out, "{}", format_value(v)).unwrap();
        }
        out
    }
}

pub(crate) fn format_value(v: f64) -> String {
    if v == f64::INFINITY {
        "inf".into()
    } else if v == f64::NEG_INFINITY {
        "-inf".into()
    } else {
        format!("{v}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_documented_layout() {
        let text = r#"{"dim":1,"origin":[0.0],"spacing":[0.5],"counts":[3],"values":[1.5,"inf","-inf"]}"#;
        let f = GridFunction::from_json(text).unwrap();
        assert!(f.allow_neg_inf());
        assert_eq!(f.values(), &[1.5, f64::INFINITY, f64::NEG_INFINITY]);
        assert_eq!(f.to_json(), text);
    }

    #[test]
    fn rejects_malformed() {
        assert!(GridFunction::from_json(r#"{"dim":1,"origin":[0],"spacing":[1],"counts":[2],"values":[1]}"#).is_err());
        assert!(GridFunction::from_json(r#"{"dim":2,"origin":[0],"spacing":[1],"counts":[2],"values":[1,2]}"#).is_err());
        assert!(
            GridFunction::from_json(r#"{"dim":1,"origin":[0],"spacing":[1],"counts":[1],"values":["nan"]}"#).is_err()
        );
        assert!(GridFunction::from_json("not json").is_err());
    }

    #[test]
    fn csv_rows() {
        let g = Grid::line(0.0, 1.0, 0.5).unwrap();
        let f = GridFunction::new(g, vec![1.0, f64::INFINITY, -2.5]).unwrap();
        assert_eq!(f.to_csv(), "x1,value\n0,1\n0.5,inf\n1,-2.5\n");
    }

    proptest! {
        #[test]
        fn json_round_trip(
            vals in prop::collection::vec(
                prop_oneof![(-1e6f64..1e6), Just(f64::INFINITY), Just(f64::NEG_INFINITY)], 12),
            origin in -10.0f64..10.0,
            spacing in 1e-3f64..10.0,
        ) {
            let g = Grid::new(vec![Axis::new(origin, spacing, 3), Axis::new(-origin, spacing * 2.0, 4)]).unwrap();
            let f = GridFunction::with_neg_inf(g, vals, true).unwrap();
            let back = GridFunction::from_json(&f.to_json()).unwrap();
            prop_assert_eq!(back.grid(), f.grid());
            prop_assert_eq!(back.values(), f.values());
        }
    }
}
