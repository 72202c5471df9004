use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::grid::io::JsonValue;

/// Location of the worst violation found by a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    None,
    Index(usize),
    Pair(usize, usize),
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match *self {
            Witness::None => s.serialize_none(),
            Witness::Index(i) => s.serialize_u64(i as u64),
            Witness::Pair(a, b) => {
                let mut seq = s.serialize_seq(Some(2))?;
                seq.serialize_element(&a)?;
                seq.serialize_element(&b)?;
                seq.end()
            }
        }
    }
}

/// Outcome of a property check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    #[serde(serialize_with = "extended")]
    pub worst_violation: f64,
    pub witness: Witness,
    pub detail: String,
}

fn extended<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    JsonValue(*v).serialize(s)
}

impl CheckReport {
    /// `passed` is `worst_violation <= tol`.
    pub fn new(name: &str, worst_violation: f64, tol: f64, witness: Witness, detail: impl Into<String>) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: worst_violation <= tol,
            worst_violation,
            witness,
            detail: detail.into(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Running maximum of violations with the location of the largest.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Worst {
    pub value: f64,
    pub witness: Witness,
}

impl Worst {
    pub fn new() -> Self {
        Worst { value: 0.0, witness: Witness::None }
    }

    pub fn record(&mut self, violation: f64, witness: Witness) {
        if violation > self.value {
            self.value = violation;
            self.witness = witness;
        }
    }
}
