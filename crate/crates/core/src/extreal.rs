//! Extended value lattice for functional values.
//!
//! Besides finite reals and `-inf` there is a third value `nu`, the infimum of
//! the empty set. `nu` is not `+inf`: it is incomparable with everything, so
//! every order predicate involving it is false, while `nu == nu` holds.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub enum ExtReal {
    Finite(f64),
    MinusInf,
    Nu,
}

impl PartialEq for ExtReal {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => a == b,
            (ExtReal::MinusInf, ExtReal::MinusInf) => true,
            (ExtReal::Nu, ExtReal::Nu) => true,
            _ => false,
        }
    }
}

impl ExtReal {
    pub fn finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn is_nu(self) -> bool {
        matches!(self, ExtReal::Nu)
    }

    pub fn is_minus_inf(self) -> bool {
        matches!(self, ExtReal::MinusInf)
    }

    /// In the domain means "not nu".
    pub fn in_domain(self) -> bool {
        !self.is_nu()
    }

    /// Lattice order restricted to `{-inf} ∪ ℝ`; `None` whenever nu is involved.
    pub fn partial_order(self, other: ExtReal) -> Option<std::cmp::Ordering> {
        use std::cmp::Ordering::*;
        match (self, other) {
            (ExtReal::Nu, _) | (_, ExtReal::Nu) => None,
            (ExtReal::MinusInf, ExtReal::MinusInf) => Some(Equal),
            (ExtReal::MinusInf, ExtReal::Finite(_)) => Some(Less),
            (ExtReal::Finite(_), ExtReal::MinusInf) => Some(Greater),
            (ExtReal::Finite(a), ExtReal::Finite(b)) => a.partial_cmp(&b),
        }
    }

    pub fn le(self, other: ExtReal) -> bool {
        matches!(
            self.partial_order(other),
            Some(std::cmp::Ordering::Less | std::cmp::Ordering::Equal)
        )
    }

    pub fn lt(self, other: ExtReal) -> bool {
        matches!(self.partial_order(other), Some(std::cmp::Ordering::Less))
    }

    pub fn ge(self, other: ExtReal) -> bool {
        other.le(self)
    }

    pub fn gt(self, other: ExtReal) -> bool {
        other.lt(self)
    }

    /// Minimum in the `{-inf} ∪ ℝ` lattice with nu acting as the neutral element.
    pub fn min_absorbing_nu(self, other: ExtReal) -> ExtReal {
        match (self, other) {
            (ExtReal::Nu, x) | (x, ExtReal::Nu) => x,
            (ExtReal::MinusInf, _) | (_, ExtReal::MinusInf) => ExtReal::MinusInf,
            (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::Finite(a.min(b)),
        }
    }

    /// `self + c` for a real `c`; nu is rejected.
    pub fn add_real(self, c: f64) -> Result<ExtReal> {
        match self {
            ExtReal::Finite(t) => Ok(ExtReal::Finite(t + c)),
            ExtReal::MinusInf => Ok(ExtReal::MinusInf),
            ExtReal::Nu => Err(Error::NuArithmetic),
        }
    }

    /// Sum in `{-inf} ∪ ℝ`; nu on either side is rejected.
    pub fn checked_add(self, other: ExtReal) -> Result<ExtReal> {
        match (self, other) {
            (ExtReal::Nu, _) | (_, ExtReal::Nu) => Err(Error::NuArithmetic),
            (ExtReal::MinusInf, _) | (_, ExtReal::MinusInf) => Ok(ExtReal::MinusInf),
            (ExtReal::Finite(a), ExtReal::Finite(b)) => Ok(ExtReal::Finite(a + b)),
        }
    }

    /// Applies `f` to a finite value and passes `-inf` and nu through.
    pub fn map_finite(self, f: impl FnOnce(f64) -> f64) -> ExtReal {
        match self {
            ExtReal::Finite(t) => ExtReal::Finite(f(t)),
            other => other,
        }
    }

    /// Numeric stand-in used for sign tests; nu has none.
    pub fn to_f64_clamped(self, minus_inf: f64) -> Option<f64> {
        match self {
            ExtReal::Finite(t) => Some(t),
            ExtReal::MinusInf => Some(minus_inf),
            ExtReal::Nu => None,
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(t) => write!(f, "{t}"),
            ExtReal::MinusInf => f.write_str("-inf"),
            ExtReal::Nu => f.write_str("nu"),
        }
    }
}

impl std::str::FromStr for ExtReal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" => Ok(ExtReal::MinusInf),
            "nu" => Ok(ExtReal::Nu),
            other => other
                .parse::<f64>()
                .ok()
                .filter(|t| t.is_finite())
                .map(ExtReal::Finite)
                .ok_or_else(|| Error::InvalidInput(format!("not an extended real: {other:?}"))),
        }
    }
}

impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtReal::Finite(t) => serializer.serialize_f64(*t),
            ExtReal::MinusInf => serializer.serialize_str("-inf"),
            ExtReal::Nu => serializer.serialize_str("nu"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(t) => Ok(ExtReal::Finite(t)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const NU: ExtReal = ExtReal::Nu;
    const NEG: ExtReal = ExtReal::MinusInf;

    #[test]
    fn nu_is_incomparable_but_equal_to_itself() {
        let one = ExtReal::Finite(1.0);
        for x in [one, NEG, NU] {
            assert!(!NU.le(x) && !NU.lt(x) && !NU.ge(x) && !NU.gt(x));
            assert!(!x.le(NU) && !x.lt(NU) && !x.ge(NU) && !x.gt(NU));
        }
        assert_eq!(NU, NU);
        assert_ne!(NU, NEG);
    }

    #[test]
    fn order_on_minus_inf_and_reals() {
        let a = ExtReal::Finite(-3.0);
        let b = ExtReal::Finite(2.0);
        assert!(NEG.lt(a) && a.lt(b) && NEG.le(NEG) && !NEG.lt(NEG));
        assert!(b.gt(a) && a.ge(a));
    }

    #[test]
    fn min_treats_nu_as_neutral() {
        let a = ExtReal::Finite(4.0);
        assert_eq!(NU.min_absorbing_nu(a), a);
        assert_eq!(NU.min_absorbing_nu(NU), NU);
        assert_eq!(a.min_absorbing_nu(NEG), NEG);
        assert_eq!(
            a.min_absorbing_nu(ExtReal::Finite(1.0)),
            ExtReal::Finite(1.0)
        );
    }

    #[test]
    fn arithmetic_with_nu_errors() {
        assert_eq!(NU.add_real(1.0), Err(Error::NuArithmetic));
        assert_eq!(
            ExtReal::Finite(1.0).checked_add(NU),
            Err(Error::NuArithmetic)
        );
        assert_eq!(NEG.checked_add(ExtReal::Finite(2.0)), Ok(NEG));
    }

    #[test]
    fn text_and_json_forms() {
        for v in [ExtReal::Finite(1.5), NEG, NU] {
            let s = v.to_string();
            assert_eq!(s.parse::<ExtReal>().unwrap(), v);
            let j = serde_json::to_string(&v).unwrap();
            assert_eq!(serde_json::from_str::<ExtReal>(&j).unwrap(), v);
        }
        assert_eq!(serde_json::to_string(&NU).unwrap(), "\"nu\"");
        assert!("inf".parse::<ExtReal>().is_err());
    }
}
