//! Exact coefficient rings: the integers, or residues modulo a fixed m >= 2.
//!
//! Residue elements are always canonicalized into `[0, m)` so that equal
//! values have equal representations and serialization is bit-exact.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient domain of a [`crate::series::QSeries`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoefficientRing {
    /// Arbitrary-precision exact integers.
    Integers,
    /// Integers modulo `modulus`, canonicalized into `[0, modulus)`.
    Residues { modulus: u64 },
}

impl CoefficientRing {
    pub fn integers() -> Self {
        CoefficientRing::Integers
    }

    /// A residue ring modulo `m`. Errors when `m < 2`.
    pub fn residues(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(CoefficientRing::Residues { modulus: m })
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            CoefficientRing::Integers => None,
            CoefficientRing::Residues { modulus } => Some(*modulus),
        }
    }

    pub fn is_residues(&self) -> bool {
        matches!(self, CoefficientRing::Residues { .. })
    }

    /// Canonical form of `x` in this ring.
    pub fn normalize(&self, x: BigInt) -> BigInt {
        match self {
            CoefficientRing::Integers => x,
            CoefficientRing::Residues { modulus } => {
                let m = BigInt::from(*modulus);
                let r = x % &m;
                if r.is_negative() {
                    r + m
                } else {
                    r
                }
            }
        }
    }

    /// True when `x` has a multiplicative inverse in this ring.
    pub fn is_unit(&self, x: &BigInt) -> bool {
        match self {
            CoefficientRing::Integers => x.abs() == BigInt::from(1),
            CoefficientRing::Residues { modulus } => {
                x.gcd(&BigInt::from(*modulus)) == BigInt::from(1)
            }
        }
    }

    /// The inverse of a unit; `None` for non-units.
    pub fn inverse(&self, x: &BigInt) -> Option<BigInt> {
        match self {
            CoefficientRing::Integers => {
                if x.abs() == BigInt::from(1) {
                    Some(x.clone())
                } else {
                    None
                }
            }
            CoefficientRing::Residues { modulus } => {
                let m = BigInt::from(*modulus);
                let e = x.extended_gcd(&m);
                if e.gcd == BigInt::from(1) {
                    Some(self.normalize(e.x))
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => write!(f, "Z"),
            CoefficientRing::Residues { modulus } => write!(f, "Z/{}", modulus),
        }
    }
}

// JSON form: "Z" for the integers, {"mod": m} for residues.
impl Serialize for CoefficientRing {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CoefficientRing::Integers => serializer.serialize_str("Z"),
            CoefficientRing::Residues { modulus } => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("mod", modulus)?;
                map.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for CoefficientRing {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        struct RingVisitor;

        impl<'de> Visitor<'de> for RingVisitor {
            type Value = CoefficientRing;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "the string \"Z\" or a map {{\"mod\": m}}")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Self::Value, E> {
                if v == "Z" {
                    Ok(CoefficientRing::Integers)
                } else {
                    Err(E::custom(format!("unknown ring tag {:?}", v)))
                }
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut modulus: Option<u64> = None;
                while let Some(key) = map.next_key::<String>()? {
                    if key == "mod" {
                        modulus = Some(map.next_value()?);
                    } else {
                        return Err(de::Error::custom(format!("unknown ring field {:?}", key)));
                    }
                }
                let m = modulus.ok_or_else(|| de::Error::custom("missing \"mod\" field"))?;
                CoefficientRing::residues(m).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_any(RingVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_canonical_range() {
        let r = CoefficientRing::residues(7).unwrap();
        assert_eq!(r.normalize(BigInt::from(-1)), BigInt::from(6));
        assert_eq!(r.normalize(BigInt::from(7)), BigInt::from(0));
        assert_eq!(r.normalize(BigInt::from(-15)), BigInt::from(6));
    }

    #[test]
    fn units_and_inverses() {
        let z = CoefficientRing::integers();
        assert!(z.is_unit(&BigInt::from(-1)));
        assert!(!z.is_unit(&BigInt::from(2)));

        let r7 = CoefficientRing::residues(7).unwrap();
        assert_eq!(r7.inverse(&BigInt::from(2)), Some(BigInt::from(4)));
        let r6 = CoefficientRing::residues(6).unwrap();
        assert_eq!(r6.inverse(&BigInt::from(2)), None);
        assert_eq!(r6.inverse(&BigInt::from(5)), Some(BigInt::from(5)));
    }

    #[test]
    fn modulus_at_least_two() {
        assert!(CoefficientRing::residues(1).is_err());
        assert!(CoefficientRing::residues(0).is_err());
    }

    #[test]
    fn json_round_trip() {
        let z = CoefficientRing::integers();
        let s = serde_json::to_string(&z).unwrap();
        assert_eq!(s, "\"Z\"");
        assert_eq!(serde_json::from_str::<CoefficientRing>(&s).unwrap(), z);

        let r = CoefficientRing::residues(49).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, "{\"mod\":49}");
        assert_eq!(serde_json::from_str::<CoefficientRing>(&s).unwrap(), r);
    }
}
