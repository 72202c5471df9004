use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Which part of the extended real line a value sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    Finite,
    PosInf,
    NegInf,
}

/// A real number, `+inf` or `-inf`; never NaN.
///
/// Stored as a plain `f64` so grid functions can keep their values in a flat
/// float buffer. The ordering is total: `-inf < finite < +inf`, and `-0.0`
/// compares equal to `0.0`.
#[derive(Clone, Copy, Default)]
pub struct ExtendedValue(f64);

impl ExtendedValue {
    pub const POS_INF: ExtendedValue = ExtendedValue(f64::INFINITY);
    pub const NEG_INF: ExtendedValue = ExtendedValue(f64::NEG_INFINITY);

    /// Wraps a float. Infinities map to the matching tag; NaN is rejected.
    pub fn new(x: f64) -> Result<Self> {
        if x.is_nan() {
            Err(Error::NotANumber)
        } else {
            Ok(ExtendedValue(x))
        }
    }

    pub fn finite(x: f64) -> Result<Self> {
        if x.is_finite() {
            Ok(ExtendedValue(x))
        } else {
            Err(Error::NotANumber)
        }
    }

    pub fn tag(self) -> Tag {
        if self.0 == f64::INFINITY {
            Tag::PosInf
        } else if self.0 == f64::NEG_INFINITY {
            Tag::NegInf
        } else {
            Tag::Finite
        }
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    /// The finite value, if any.
    pub fn value(self) -> Option<f64> {
        self.0.is_finite().then_some(self.0)
    }

    pub fn as_f64(self) -> f64 {
        self.0
    }
}

impl PartialEq for ExtendedValue {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Eq for ExtendedValue {}

impl PartialOrd for ExtendedValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedValue {
    fn cmp(&self, other: &Self) -> Ordering {
        // NaN is excluded at construction
        self.0.partial_cmp(&other.0).unwrap_or(Ordering::Equal)
    }
}

impl fmt::Debug for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag() {
            Tag::PosInf => f.write_str("inf"),
            Tag::NegInf => f.write_str("-inf"),
            Tag::Finite => write!(f, "{}", self.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nan() {
        assert!(ExtendedValue::new(f64::NAN).is_err());
        assert!(ExtendedValue::finite(f64::INFINITY).is_err());
    }

    #[test]
    fn total_order() {
        let a = ExtendedValue::NEG_INF;
        let b = ExtendedValue::new(-1e300).unwrap();
        let c = ExtendedValue::new(3.0).unwrap();
        let d = ExtendedValue::POS_INF;
        let mut v = vec![d, c, a, b];
        v.sort();
        assert_eq!(v, vec![a, b, c, d]);
        assert_eq!(ExtendedValue::new(-0.0).unwrap(), ExtendedValue::new(0.0).unwrap());
        assert_eq!(a.tag(), Tag::NegInf);
        assert_eq!(c.value(), Some(3.0));
        assert_eq!(d.value(), None);
    }
}
