//! Serde adapters that write big integers and rationals as decimal strings.

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};

pub mod biguint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(values.iter().map(|v| v.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| s.parse::<BigUint>().map_err(D::Error::custom))
            .collect()
    }
}

/// `"p/q"` strings; integers are written without a denominator.
pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(value: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse::<BigRational>().map_err(D::Error::custom)
    }
}
