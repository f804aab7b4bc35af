//! Helpers for exact rationals and their `"p/q"` string form.
//!
//! All rational values in this crate are [`BigRational`]; they are rendered as
//! `"p/q"` (or plain `"p"` when integral) and never as floats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Exact rational from machine integers.
pub fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Renders `r` as `"p/q"`, or `"p"` when the denominator is one.
pub fn ratio_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_ratio(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim())
        .map_err(|e| Error::InvalidInput(format!("cannot parse rational '{s}': {e}")))
}

/// Renders a doubled coordinate `2x` as the value of `x`: `"3/2"`, `"-1/2"`, `"2"`.
pub fn half_string(doubled: i64) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{doubled}/2")
    }
}

/// Parses one weight coordinate into doubled form. Accepts integers (`"2"`),
/// halves (`"3/2"`, `"-1/2"`), and general `p/q` with `q | 2` after reduction.
pub fn parse_half(s: &str) -> Result<i64> {
    let r = parse_ratio(s)?;
    half_from_ratio(&r).ok_or_else(|| {
        Error::InvalidInput(format!(
            "weight coordinate '{s}' is neither an integer nor a half-integer"
        ))
    })
}

/// Doubled coordinate of a rational, if it is an integer or half-integer.
pub fn half_from_ratio(r: &BigRational) -> Option<i64> {
    let doubled = r * BigRational::from_integer(BigInt::from(2));
    if doubled.denom().is_one() {
        i64::try_from(doubled.numer()).ok()
    } else {
        None
    }
}
