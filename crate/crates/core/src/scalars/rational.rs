//! Arbitrary-precision rationals and their string form (`"p/q"`, or `"p"`
//! when the denominator is one).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn from_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn from_frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

pub fn format(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Serde adapter for a single rational stored as a string.
pub mod as_string {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}
