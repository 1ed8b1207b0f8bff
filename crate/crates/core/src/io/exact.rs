//! Exact numbers in JSON.
//!
//! Integers travel as JSON numbers when they fit in an `i64` and as decimal
//! strings otherwise. Rationals travel as `"p/q"` strings in lowest terms
//! with `q > 0`, or `"p"` when `q = 1`. Floating-point literals are refused.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactInt(pub BigInt);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(pub BigRational);

pub fn ints(v: &[BigInt]) -> Vec<ExactInt> {
    v.iter().cloned().map(ExactInt).collect()
}

pub fn int_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<ExactInt>> {
    rows.iter().map(|r| ints(r)).collect()
}

pub fn to_bigints(v: &[ExactInt]) -> Vec<BigInt> {
    v.iter().map(|x| x.0.clone()).collect()
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let bad = || format!("{s:?} is not an exact rational; expected \"p\" or \"p/q\"");
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
    let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
    if q.is_zero() {
        return Err(format!("{s:?} has a zero denominator"));
    }
    Ok(BigRational::new(p, q))
}

pub fn format_rational(r: &BigRational) -> String {
    // `Ratio` keeps lowest terms with a positive denominator and prints
    // integers without a denominator.
    r.to_string()
}

/// Path of the first floating-point literal in `v`, with its text.
pub fn find_float(v: &Value) -> Option<(String, String)> {
    fn walk(v: &Value, path: &mut String) -> Option<(String, String)> {
        match v {
            Value::Number(n) if n.is_f64() => Some((path.clone(), n.to_string())),
            Value::Array(items) => items.iter().enumerate().find_map(|(i, x)| {
                let len = path.len();
                path.push_str(&format!("[{i}]"));
                let hit = walk(x, path);
                path.truncate(len);
                hit
            }),
            Value::Object(map) => map.iter().find_map(|(k, x)| {
                let len = path.len();
                path.push('.');
                path.push_str(k);
                let hit = walk(x, path);
                path.truncate(len);
                hit
            }),
            _ => None,
        }
    }
    walk(v, &mut String::from("$"))
}

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for ExactInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ExactInt;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }
            fn visit_i64<E: de::Error>(self, x: i64) -> Result<ExactInt, E> {
                Ok(ExactInt(x.into()))
            }
            fn visit_u64<E: de::Error>(self, x: u64) -> Result<ExactInt, E> {
                Ok(ExactInt(x.into()))
            }
            fn visit_f64<E: de::Error>(self, x: f64) -> Result<ExactInt, E> {
                Err(E::custom(format!(
                    "floating-point literal {x} is not exact"
                )))
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<ExactInt, E> {
                BigInt::from_str(s.trim())
                    .map(ExactInt)
                    .map_err(|_| E::custom(format!("{s:?} is not an integer")))
            }
        }
        d.deserialize_any(V)
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ExactRational;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a \"p/q\" string or an integer")
            }
            fn visit_i64<E: de::Error>(self, x: i64) -> Result<ExactRational, E> {
                Ok(ExactRational(BigRational::from_integer(x.into())))
            }
            fn visit_u64<E: de::Error>(self, x: u64) -> Result<ExactRational, E> {
                Ok(ExactRational(BigRational::from_integer(x.into())))
            }
            fn visit_f64<E: de::Error>(self, x: f64) -> Result<ExactRational, E> {
                Err(E::custom(format!(
                    "floating-point literal {x} is not exact; write \"p/q\""
                )))
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<ExactRational, E> {
                parse_rational(s).map(ExactRational).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}
