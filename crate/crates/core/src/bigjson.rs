//! Serde adapters for big integers: a JSON number when the value fits in
//! `i64`, a decimal string otherwise. Both forms are accepted on input.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

struct BigIntVisitor;

impl<'de> Visitor<'de> for BigIntVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
        v.parse().map_err(|_| E::custom(format!("invalid integer string `{v}`")))
    }
}

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(small) => s.serialize_i64(small),
        None => s.serialize_str(&v.to_string()),
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    d.deserialize_any(BigIntVisitor)
}

/// A `BigInt` that serializes through this module; used inside containers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Json(pub BigInt);

impl Serialize for Json {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for Json {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        deserialize(d).map(Json)
    }
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let wrapped: Vec<Json> = v.iter().cloned().map(Json).collect();
        wrapped.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Ok(Vec::<Json>::deserialize(d)?.into_iter().map(|j| j.0).collect())
    }
}

pub mod vec2 {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        let wrapped: Vec<Vec<Json>> = v
            .iter()
            .map(|row| row.iter().cloned().map(Json).collect())
            .collect();
        wrapped.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        Ok(Vec::<Vec<Json>>::deserialize(d)?
            .into_iter()
            .map(|row| row.into_iter().map(|j| j.0).collect())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Debug, PartialEq, Serialize, Deserialize)]
    struct Holder {
        #[serde(with = "super")]
        v: BigInt,
    }

    #[test]
    fn small_values_are_numbers_big_values_are_strings() {
        let small = Holder { v: BigInt::from(-144) };
        assert_eq!(serde_json::to_string(&small).unwrap(), r#"{"v":-144}"#);
        let big = Holder {
            v: BigInt::from(i64::MAX) * 10,
        };
        let text = serde_json::to_string(&big).unwrap();
        assert_eq!(text, r#"{"v":"92233720368547758070"}"#);
        assert_eq!(serde_json::from_str::<Holder>(&text).unwrap(), big);
        assert!(serde_json::from_str::<Holder>(r#"{"v":"12a"}"#).is_err());
        assert!(serde_json::from_str::<Holder>(r#"{"v":1.5}"#).is_err());
    }
}
