//! Extended naturals: `u64` plus a distinguished infinity.
//!
//! Head sets use infinity for residue classes that contain no semigroup
//! element, so the value participates in comparisons and sums symbolically:
//! it is larger than every finite value and absorbs addition. Overflow of a
//! finite sum is a hard error rather than a silent wrap or saturation.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A non-negative integer extended with infinity.
///
/// The derived ordering places every `Fin` below `Inf` and orders finite
/// values numerically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ExtNat {
    /// A finite value.
    Fin(u64),
    /// Greater than every finite value; absorbs addition.
    Inf,
}

impl ExtNat {
    /// True for `Fin`.
    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Fin(_))
    }

    /// The finite value, if any.
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Fin(v) => Some(v),
            ExtNat::Inf => None,
        }
    }

    /// Addition with infinity absorption; finite overflow is an error.
    pub fn checked_add(self, rhs: ExtNat) -> Result<ExtNat> {
        match (self, rhs) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => {
                a.checked_add(b).map(ExtNat::Fin).ok_or(Error::Overflow)
            }
            _ => Ok(ExtNat::Inf),
        }
    }
}

impl From<u64> for ExtNat {
    fn from(v: u64) -> Self {
        ExtNat::Fin(v)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(v) => write!(f, "{v}"),
            ExtNat::Inf => write!(f, "inf"),
        }
    }
}

/// Serialized as a JSON number, or the literal string `"inf"`.
impl Serialize for ExtNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtNat::Fin(v) => serializer.serialize_u64(*v),
            ExtNat::Inf => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtNat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ExtNatVisitor;

        impl<'de> Visitor<'de> for ExtNatVisitor {
            type Value = ExtNat;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or the string \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExtNat, E> {
                Ok(ExtNat::Fin(v))
            }

            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<ExtNat, E> {
                if s == "inf" {
                    Ok(ExtNat::Inf)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(s), &self))
                }
            }
        }

        deserializer.deserialize_any(ExtNatVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_dominates_every_finite_value() {
        assert!(ExtNat::Fin(u64::MAX) < ExtNat::Inf);
        assert!(ExtNat::Fin(3) < ExtNat::Fin(4));
        assert_eq!(ExtNat::Inf, ExtNat::Inf);
    }

    #[test]
    fn addition_absorbs_infinity_and_checks_overflow() {
        assert_eq!(
            ExtNat::Fin(2).checked_add(ExtNat::Fin(3)).unwrap(),
            ExtNat::Fin(5)
        );
        assert_eq!(ExtNat::Inf.checked_add(ExtNat::Fin(3)).unwrap(), ExtNat::Inf);
        assert_eq!(ExtNat::Inf.checked_add(ExtNat::Inf).unwrap(), ExtNat::Inf);
        assert!(matches!(
            ExtNat::Fin(u64::MAX).checked_add(ExtNat::Fin(1)),
            Err(Error::Overflow)
        ));
    }

    #[test]
    fn display_uses_inf_literal() {
        assert_eq!(ExtNat::Fin(17).to_string(), "17");
        assert_eq!(ExtNat::Inf.to_string(), "inf");
    }

    #[test]
    fn json_round_trip() {
        let values = vec![ExtNat::Fin(0), ExtNat::Fin(55), ExtNat::Inf];
        let json = serde_json::to_string(&values).unwrap();
        assert_eq!(json, "[0,55,\"inf\"]");
        let back: Vec<ExtNat> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, values);
    }

    #[test]
    fn rejects_other_strings() {
        assert!(serde_json::from_str::<ExtNat>("\"infinity\"").is_err());
        assert!(serde_json::from_str::<ExtNat>("-1").is_err());
    }
}
