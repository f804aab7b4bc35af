//! Principal specialization of the Weyl character as an exact Laurent
//! polynomial, and the second log-derivative route to `s(V_mu)`.
//!
//! Projecting the formal character along the Weyl vector sends a weight
//! `theta` to `q^(4 (rho, theta))`, giving
//!
//! ```text
//! f(q) = sum_theta dim V_mu(theta) q^(4 (rho, theta))
//!      = prod_{a in R+} (q^(2(mu+rho, a)) - q^(-2(mu+rho, a)))
//!                     / (q^(2(rho, a))    - q^(-2(rho, a))) .
//! ```
//!
//! The product of the numerator two-term factors is divided by the product of
//! the denominator factors in one exact long division; a nonzero remainder is
//! impossible and treated as an internal error. `f(1)` recovers `dim V_mu`,
//! `f'(1)` vanishes by the symmetry of the exponents, and
//!
//! ```text
//! s(V_mu) = 6 / (b(b+1)(b+2)) * (log f)''(1),   (log f)''(1) = f''(1) / f(1),
//! ```
//!
//! which makes `f` an oracle for `s` that is independent of both the
//! Freudenthal route and the closed form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::reps::parse_biguint;
use crate::roots::{dot2, RootSystem, Series, Weight};

/// Default cap on the rank [`principal_character`] accepts.
pub const DEFAULT_QCHAR_MAX_RANK: usize = 12;
/// Default cap on `dim V_mu` for [`principal_character`].
pub const DEFAULT_QCHAR_MAX_DIM: u64 = 10_000_000;

/// A Laurent polynomial in `q` with exact integer coefficients, finitely
/// supported.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    pub fn monomial(exponent: i64, coeff: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exponent, coeff);
        }
        LaurentPoly { coeffs }
    }

    /// `q^a - q^(-a)` for `a > 0`.
    pub fn two_term(a: i64) -> Self {
        debug_assert!(a > 0);
        LaurentPoly {
            coeffs: BTreeMap::from([(a, BigInt::one()), (-a, -BigInt::one())]),
        }
    }

    pub fn from_coeffs(coeffs: BTreeMap<i64, BigInt>) -> Self {
        LaurentPoly {
            coeffs: coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.coeffs.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let entry = coeffs.entry(ea + eb).or_default();
                *entry += ca * cb;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }

    /// Exact division; a nonzero remainder is an internal error.
    ///
    /// Ordinary long division from the top exponent down. If the quotient
    /// exists its support lies in `[minExp(self) - minExp(divisor),
    /// maxExp(self) - maxExp(divisor)]`, so the working shift hitting the
    /// lower end without clearing the remainder proves the division inexact.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::InvalidInput("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let lead_exp = *divisor.coeffs.keys().next_back().expect("nonzero");
        let lead_coeff = divisor.coeffs[&lead_exp].clone();
        let min_shift = self.coeffs.keys().next().expect("nonzero")
            - divisor.coeffs.keys().next().expect("nonzero");

        let mut remainder = self.coeffs.clone();
        let mut quotient: BTreeMap<i64, BigInt> = BTreeMap::new();
        while let Some((&top_exp, top_coeff)) = remainder.iter().next_back() {
            let shift = top_exp - lead_exp;
            let (q, r) = num_integer::Integer::div_rem(top_coeff, &lead_coeff);
            if shift < min_shift || !r.is_zero() || q.is_zero() {
                return Err(Error::Internal(
                    "nonzero remainder in Laurent division".into(),
                ));
            }
            for (e, c) in &divisor.coeffs {
                let key = e + shift;
                let entry = remainder.entry(key).or_default();
                *entry -= &q * c;
                if entry.is_zero() {
                    remainder.remove(&key);
                }
            }
            quotient.insert(shift, q);
        }
        Ok(LaurentPoly { coeffs: quotient })
    }

    /// `f(1)`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// `f'(1) = sum c_e * e`.
    pub fn derivative_at_one(&self) -> BigInt {
        self.coeffs.iter().map(|(e, c)| BigInt::from(*e) * c).sum()
    }

    /// `f''(1) = sum c_e * e * (e - 1)`.
    pub fn second_derivative_at_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|(e, c)| BigInt::from((*e as i128) * (*e as i128 - 1)) * c)
            .sum()
    }

    /// Serializes as an exponent -> coefficient map with string keys.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (e, c) in &self.coeffs {
            let value = match i64::try_from(c) {
                Ok(small) => serde_json::Value::from(small),
                Err(_) => serde_json::Value::String(c.to_string()),
            };
            map.insert(e.to_string(), value);
        }
        serde_json::Value::Object(map)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<LaurentPoly> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::InvalidInput("Laurent polynomial must be a JSON object".into()))?;
        let mut coeffs = BTreeMap::new();
        for (k, v) in obj {
            let exponent: i64 = k
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad exponent '{k}'")))?;
            let coeff = match v {
                serde_json::Value::Number(n) if n.as_i64().is_some() => {
                    BigInt::from(n.as_i64().unwrap())
                }
                other => BigInt::from(parse_biguint(other)?),
            };
            coeffs.insert(exponent, coeff);
        }
        Ok(LaurentPoly::from_coeffs(coeffs))
    }
}

/// The specialization `f(q)` of the character of `V_mu` with default limits.
pub fn principal_character(rs: &RootSystem, mu: &Weight) -> Result<LaurentPoly> {
    principal_character_with_limits(rs, mu, DEFAULT_QCHAR_MAX_RANK, DEFAULT_QCHAR_MAX_DIM)
}

/// The specialization `f(q)` of the character of `V_mu` from the positive
/// root product. This route enumerates no weights, but it is an oracle, not
/// the production path, so it refuses ranks above `max_rank` and dimensions
/// above `max_dim`.
pub fn principal_character_with_limits(
    rs: &RootSystem,
    mu: &Weight,
    max_rank: usize,
    max_dim: u64,
) -> Result<LaurentPoly> {
    rs.assert_dominant(mu)?;
    if rs.rank() > max_rank {
        return Err(Error::LimitExceeded(format!(
            "rank {} exceeds the q-character cap {max_rank}",
            rs.rank()
        )));
    }
    let dim = rs.weyl_dimension(mu)?;
    if dim > max_dim.into() {
        return Err(Error::LimitExceeded(format!(
            "dim V_mu = {dim} exceeds the q-character cap {max_dim}"
        )));
    }
    // In type D a negative last coordinate is reflected away: rho has no
    // last coordinate, so the exponents 4(rho, theta) are blind to its sign.
    let mu = if rs.series() == Series::D && *mu.coords2().last().unwrap() < 0 {
        mu.reflect_last()
    } else {
        mu.clone()
    };

    let shifted = mu.add(rs.rho());
    let mut numerator = LaurentPoly::one();
    let mut denominator = LaurentPoly::one();
    for alpha in rs.positive_roots() {
        let top = exponent_2wa(&shifted, alpha)?;
        let bottom = exponent_2wa(rs.rho(), alpha)?;
        numerator = numerator.mul(&LaurentPoly::two_term(top));
        denominator = denominator.mul(&LaurentPoly::two_term(bottom));
    }
    let f = numerator.div_exact(&denominator)?;

    for (e, c) in f.coeffs() {
        if c.is_negative() || f.coeff(-e) != *c {
            return Err(Error::Internal(
                "character specialization is not a symmetric nonnegative polynomial".into(),
            ));
        }
    }
    Ok(f)
}

/// The integer `2 (w, alpha)`, read off doubled coordinates.
fn exponent_2wa(w: &Weight, alpha: &Weight) -> Result<i64> {
    let four_wa = dot2(w.coords2(), alpha.coords2());
    if four_wa % 2 != 0 || four_wa <= 0 {
        return Err(Error::Internal(format!(
            "exponent 2(w, alpha) = {}/2 is not a positive integer",
            four_wa
        )));
    }
    Ok((four_wa / 2) as i64)
}

/// `(log f)''(1) = f''(1) / f(1)`, using `f'(1) = 0`, which is asserted.
pub fn logf_dd_from_poly(f: &LaurentPoly) -> Result<BigRational> {
    let f1 = f.eval_at_one();
    if f1.is_zero() {
        return Err(Error::InvalidInput("f(1) = 0; log f is undefined there".into()));
    }
    if !f.derivative_at_one().is_zero() {
        return Err(Error::Internal("f'(1) != 0 breaks the Weyl symmetry of f".into()));
    }
    Ok(BigRational::new(f.second_derivative_at_one(), f1))
}

/// Closed form `(log f)''(1) = (4/3) b [ (sum mu_i) b + sum (mu_i^2 - 2 i mu_i) ]`,
/// valid after reflecting a negative last coordinate in type D.
pub fn logf_dd_closed(mu: &Weight, b2: u32) -> Result<BigRational> {
    let rs = RootSystem::new(b2)?;
    rs.assert_dominant(mu)?;
    let c2: Vec<i64> = {
        let mut v = mu.coords2().to_vec();
        let last = v.len() - 1;
        v[last] = v[last].abs();
        v
    };
    let b = BigInt::from(b2);
    let sum2: i64 = c2.iter().sum();
    let mut quad4 = BigInt::zero();
    for (i, c) in c2.iter().enumerate() {
        quad4 += BigInt::from(c * c - 4 * (i as i64) * c);
    }
    let bracket = BigRational::new(BigInt::from(sum2) * &b, BigInt::from(2))
        + BigRational::new(quad4, BigInt::from(4));
    Ok(BigRational::new(BigInt::from(4) * &b, BigInt::from(3)) * bracket)
}

/// `s(V_mu)` through the q-character: `6 / (b(b+1)(b+2)) * (log f)''(1)` with
/// `f` computed from the root product. Agrees exactly with the closed form
/// and the Freudenthal profile route.
pub fn s_via_qchar(mu: &Weight, b2: u32) -> Result<BigRational> {
    let rs = RootSystem::new(b2)?;
    let f = principal_character(&rs, mu)?;
    let logdd = logf_dd_from_poly(&f)?;
    let b = BigInt::from(b2);
    Ok(BigRational::new(BigInt::from(6), &b * (&b + 1) * (&b + 2)) * logdd)
}
