//! The Salamon invariant of graded modules and the resulting bounds on the
//! second Betti number of a hyper-Kähler manifold of dimension 2n.
//!
//! For a module `W` with h-eigenspace dimensions `dim W_k`,
//!
//! ```text
//! s(W) = sum_k (-1)^k k^2 dim W_k  /  sum_k (-1)^k dim W_k ,
//! ```
//!
//! defined whenever the signed Euler characteristic in the denominator is
//! nonzero. Salamon's linear relation among the Betti numbers of a
//! hyper-Kähler manifold says `s(H*(X)) = n/3` whenever `e(X) != 0`. For an
//! irreducible module the value has the closed form
//!
//! ```text
//! s(V_mu) = 8 [ (sum_i mu_i) b2 + sum_i ((mu_i - i)^2 - i^2) ] / ((b2+1)(b2+2))
//! ```
//!
//! (after reflecting `mu_r -> -mu_r` in type D when negative). Feeding the
//! dominance condition `mu_0 + ... + mu_{r-1} + |mu_r| <= n` on an LLV
//! decomposition into the relation produces the quadratic bound
//! `b2^2 - 21 b2 + 2 - 24 n <= 0` in the absence of odd cohomology, and
//! `b2 <= 2k + 1` when an odd Betti number `b_k` survives.

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratio::ratio_string;
use crate::reps::{module_profile, GradedProfile, DEFAULT_ORBIT_CEILING};
use crate::roots::{factorial, Parity, RootSystem, Weight};

/// Signed Euler characteristic `sum_k (-1)^k dim W_k` of a profile.
pub fn signed_euler(p: &GradedProfile) -> BigInt {
    p.dims()
        .iter()
        .map(|(k, d)| {
            let d = BigInt::from(d.clone());
            if k.rem_euclid(2) == 0 {
                d
            } else {
                -d
            }
        })
        .sum()
}

/// Signed second moment `sum_k (-1)^k k^2 dim W_k`.
pub fn signed_k2(p: &GradedProfile) -> BigInt {
    p.dims()
        .iter()
        .map(|(k, d)| {
            let term = BigInt::from((*k as i128) * (*k as i128)) * BigInt::from(d.clone());
            if k.rem_euclid(2) == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// The invariant `s(W)` of a graded profile, as an exact rational.
pub fn s_of_profile(p: &GradedProfile) -> Result<BigRational> {
    let euler = signed_euler(p);
    if euler.is_zero() {
        return Err(Error::ZeroEuler);
    }
    Ok(BigRational::new(signed_k2(p), euler))
}

/// Truncation of the series `S(W) = sum_k (-1)^k dim W_k exp(kt)`: the
/// coefficient of `t^i` is `(1/i!) sum_k (-1)^k k^i dim W_k`. Odd
/// coefficients vanish by the symmetry of the profile and are stored omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SSeries {
    order: usize,
    even_coeffs: Vec<BigRational>,
}

impl SSeries {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `t^i`, `None` beyond the truncation order.
    pub fn coeff(&self, i: usize) -> Option<BigRational> {
        if i > self.order {
            return None;
        }
        if i % 2 == 1 {
            return Some(BigRational::zero());
        }
        Some(self.even_coeffs[i / 2].clone())
    }

    pub fn s0(&self) -> &BigRational {
        &self.even_coeffs[0]
    }

    /// `s(W) = 2 s_2 / s_0` recovered from the first two coefficients.
    pub fn s_value(&self) -> Result<BigRational> {
        if self.order < 2 {
            return Err(Error::InvalidInput("series order must be at least 2".into()));
        }
        if self.even_coeffs[0].is_zero() {
            return Err(Error::ZeroEuler);
        }
        Ok(self.even_coeffs[1].clone() * BigRational::from_integer(BigInt::from(2))
            / self.even_coeffs[0].clone())
    }

    /// Coefficientwise product truncated to the smaller order, matching
    /// `S(W ⊗ W') = S(W) S(W')`.
    pub fn product(&self, other: &SSeries) -> SSeries {
        let order = self.order.min(other.order);
        let even_coeffs = (0..=order / 2)
            .map(|i| {
                (0..=i)
                    .map(|j| self.even_coeffs[j].clone() * other.even_coeffs[i - j].clone())
                    .sum()
            })
            .collect();
        SSeries { order, even_coeffs }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (i, c) in self.even_coeffs.iter().enumerate() {
            map.insert(format!("s{}", 2 * i), serde_json::Value::String(ratio_string(c)));
        }
        serde_json::Value::Object(map)
    }
}

/// Coefficients of `S(W)` through `t^order`. The odd coefficients are
/// computed and verified to vanish rather than assumed.
pub fn s_series(p: &GradedProfile, order: usize) -> Result<SSeries> {
    let mut even_coeffs = Vec::with_capacity(order / 2 + 1);
    for i in 0..=order {
        let mut sum = BigInt::zero();
        for (k, d) in p.dims() {
            let term = BigInt::from(*k).pow(i as u32) * BigInt::from(d.clone());
            if k.rem_euclid(2) == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        let coeff = BigRational::new(sum, BigInt::from(factorial(i as u32)));
        if i % 2 == 1 {
            if !coeff.is_zero() {
                return Err(Error::Internal(format!(
                    "odd series coefficient s_{i} is nonzero"
                )));
            }
        } else {
            even_coeffs.push(coeff);
        }
    }
    Ok(SSeries { order, even_coeffs })
}

/// Closed form of `s(V_mu)` over so(b2 + 2). In type D a negative last
/// coordinate is reflected first, which leaves the value unchanged.
pub fn s_closed(mu: &Weight, b2: u32) -> Result<BigRational> {
    let rs = RootSystem::new(b2)?;
    rs.assert_dominant(mu)?;
    let c2: Vec<i64> = {
        let mut v = mu.coords2().to_vec();
        let last = v.len() - 1;
        v[last] = v[last].abs();
        v
    };
    // 8 [ (sum mu_i) b + sum (mu_i^2 - 2 i mu_i) ] / ((b+1)(b+2)), with
    // mu_i = c2_i / 2 kept exact
    let b = BigInt::from(b2);
    let sum2: i64 = c2.iter().sum();
    let mut quad4 = BigInt::zero(); // 4 * sum (mu_i^2 - 2 i mu_i)
    for (i, c) in c2.iter().enumerate() {
        quad4 += BigInt::from(c * c - 4 * (i as i64) * c);
    }
    let numer = BigRational::new(BigInt::from(sum2) * &b, BigInt::from(2))
        + BigRational::new(quad4, BigInt::from(4));
    let denom = BigRational::from_integer((&b + 1) * (&b + 2));
    Ok(numer * BigRational::from_integer(BigInt::from(8)) / denom)
}

/// One term `V_mu ^ mult` of a claimed LLV decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompTerm {
    pub mu: Weight,
    pub mult: BigUint,
}

/// A claimed LLV decomposition of the cohomology of a hyper-Kähler manifold
/// of dimension 2n with second Betti number b2: a multiset of dominant
/// weights of so(b2 + 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    n: u32,
    b2: u32,
    terms: Vec<DecompTerm>,
}

/// Coordinate parity content of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityMix {
    AllEven,
    AllOdd,
    Mixed,
}

impl Decomposition {
    /// Validates and normalizes the terms: weights are padded with trailing
    /// zeros to the rank of so(b2 + 2) and must be dominant; multiplicities
    /// must be positive.
    pub fn new(n: u32, b2: u32, terms: Vec<(Weight, BigUint)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        let rs = RootSystem::new(b2)?;
        let mut normalized = Vec::with_capacity(terms.len());
        for (mu, mult) in terms {
            let mu = mu.padded(rs.rank())?;
            rs.assert_dominant(&mu)?;
            if mult.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "term {mu} has zero multiplicity"
                )));
            }
            normalized.push(DecompTerm { mu, mult });
        }
        Ok(Decomposition { n, b2, terms: normalized })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn b2(&self) -> u32 {
        self.b2
    }

    pub fn terms(&self) -> &[DecompTerm] {
        &self.terms
    }

    pub fn root_system(&self) -> RootSystem {
        RootSystem::new(self.b2).expect("validated at construction")
    }

    pub fn parity_mix(&self) -> ParityMix {
        let mut evens = false;
        let mut odds = false;
        for term in &self.terms {
            match term.mu.parity() {
                Parity::Even => evens = true,
                Parity::Odd => odds = true,
            }
        }
        match (evens, odds) {
            (true, true) => ParityMix::Mixed,
            (_, true) => ParityMix::AllOdd,
            _ => ParityMix::AllEven,
        }
    }

    /// The Verbitsky component `V_(n)` is always present with multiplicity
    /// one in a geometric decomposition. Returns a warning when it is absent
    /// or repeated; hypothetical decompositions remain usable.
    pub fn verbitsky_lint(&self) -> Option<String> {
        let rs = self.root_system();
        let verbitsky = Weight::row(rs.rank(), self.n as i64);
        let found: Vec<&DecompTerm> =
            self.terms.iter().filter(|t| t.mu == verbitsky).collect();
        match found.as_slice() {
            [] => Some(format!(
                "decomposition lacks the Verbitsky component {verbitsky}"
            )),
            [one] if one.mult == BigUint::one() => None,
            _ => Some(format!(
                "Verbitsky component {verbitsky} should occur with multiplicity 1"
            )),
        }
    }

    /// Per-term signed contributions: (signed Euler, signed k^2 sum), both
    /// computed from the closed forms, so no profile is ever enumerated.
    fn signed_sums(&self) -> Result<(BigInt, BigRational)> {
        let rs = self.root_system();
        let mut euler = BigInt::zero();
        let mut second = BigRational::zero();
        for term in &self.terms {
            let dim = BigInt::from(rs.weyl_dimension(&term.mu)?);
            let sign = match term.mu.parity() {
                Parity::Even => BigInt::one(),
                Parity::Odd => -BigInt::one(),
            };
            let mult = BigInt::from(term.mult.clone());
            let signed_dim = &mult * &sign * &dim;
            // sum_k k^2 dim (V_mu)_k = s(V_mu) * dim V_mu
            second += BigRational::from_integer(signed_dim.clone())
                * s_closed(&term.mu, self.b2)?;
            euler += signed_dim;
        }
        Ok((euler, second))
    }

    /// `s` of the direct sum, computed exactly from the closed forms. When
    /// all terms share one parity the value is checked against the min/max
    /// sandwich over the individual `s(V_mu)`.
    pub fn s_value(&self) -> Result<BigRational> {
        let (euler, second) = self.signed_sums()?;
        if euler.is_zero() {
            return Err(Error::ZeroEuler);
        }
        let s = second / BigRational::from_integer(euler);
        if self.parity_mix() != ParityMix::Mixed && !self.terms.is_empty() {
            let values: Vec<BigRational> = self
                .terms
                .iter()
                .map(|t| s_closed(&t.mu, self.b2))
                .collect::<Result<_>>()?;
            let min = values.iter().min().expect("nonempty");
            let max = values.iter().max().expect("nonempty");
            if &s < min || &s > max {
                return Err(Error::Internal(format!(
                    "s = {s} escapes the sandwich [{min}, {max}]"
                )));
            }
        }
        Ok(s)
    }
}

/// Which form of Salamon's relation a verdict reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SalamonForm {
    /// `s(H*(X)) = n/3`, available when the signed Euler characteristic is
    /// nonzero.
    SInvariant,
    /// The raw signed form `sum_k (-1)^k k^2 b_{2n+k} = (n/3) e(X)`, used
    /// when `e(X) = 0` makes the s-form inapplicable.
    RawSigned,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SalamonVerdict {
    pub form: SalamonForm,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub pass: bool,
    /// Set when even and odd terms are mixed; the relation is then applied to
    /// the full signed sum.
    pub mixed_parity: bool,
}

/// Checks Salamon's relation for a claimed decomposition, exactly.
pub fn salamon_check(d: &Decomposition) -> Result<SalamonVerdict> {
    let mixed = d.parity_mix() == ParityMix::Mixed;
    let n_third = BigRational::new(BigInt::from(d.n()), BigInt::from(3));
    match d.s_value() {
        Ok(s) => Ok(SalamonVerdict {
            form: SalamonForm::SInvariant,
            pass: s == n_third,
            lhs: s,
            rhs: n_third,
            mixed_parity: mixed,
        }),
        Err(Error::ZeroEuler) => {
            let (_, second) = d.signed_sums()?;
            Ok(SalamonVerdict {
                form: SalamonForm::RawSigned,
                pass: second.is_zero(),
                lhs: second,
                rhs: BigRational::zero(),
                mixed_parity: mixed,
            })
        }
        Err(e) => Err(e),
    }
}

/// Verdict for one term of the dominance condition
/// `mu_0 + ... + mu_{r-1} + |mu_r| <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureTerm {
    pub mu: Weight,
    pub sum: BigRational,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n: u32,
    pub terms: Vec<ConjectureTerm>,
    pub pass: bool,
}

/// Checks the dominance condition for every term of a decomposition.
pub fn conjecture_check(d: &Decomposition) -> ConjectureReport {
    let bound = BigRational::from_integer(BigInt::from(d.n()));
    let terms: Vec<ConjectureTerm> = d
        .terms()
        .iter()
        .map(|t| {
            let sum = t.mu.chamber_sum();
            let pass = sum <= bound;
            ConjectureTerm { mu: t.mu.clone(), sum, pass }
        })
        .collect();
    let pass = terms.iter().all(|t| t.pass);
    ConjectureReport { n: d.n(), terms, pass }
}

/// Betti numbers `b_0, ..., b_{4n}` of a decomposition, with
/// `b_{2n+k} = sum mult * dim (V_mu)_k`.
pub fn betti_numbers(d: &Decomposition) -> Result<Vec<BigUint>> {
    betti_numbers_with_ceiling(d, DEFAULT_ORBIT_CEILING)
}

/// As [`betti_numbers`] with an explicit orbit-enumeration ceiling for the
/// non-harmonic terms.
pub fn betti_numbers_with_ceiling(d: &Decomposition, ceiling: u64) -> Result<Vec<BigUint>> {
    let rs = d.root_system();
    let n = d.n() as i64;
    let mut betti = vec![BigUint::zero(); (4 * n + 1) as usize];
    for term in d.terms() {
        if term.mu.coords2()[0] > 2 * n {
            return Err(Error::InvalidInput(format!(
                "term {} has degrees outside [0, {}]; its leading coordinate exceeds n = {}",
                term.mu,
                4 * n,
                d.n()
            )));
        }
        let profile = module_profile(&rs, &term.mu, ceiling)?;
        for (k, dim) in profile.dims() {
            betti[(2 * n + k) as usize] += &term.mult * dim;
        }
    }
    // degree symmetry and the signed bookkeeping double-check the assembly
    let len = betti.len();
    for j in 0..len / 2 {
        if betti[j] != betti[len - 1 - j] {
            return Err(Error::Internal(format!(
                "Betti numbers are not palindromic at degree {j}"
            )));
        }
    }
    let mut alternating = BigInt::zero();
    for (j, b) in betti.iter().enumerate() {
        let term = BigInt::from(b.clone());
        if j % 2 == 0 {
            alternating += term;
        } else {
            alternating -= term;
        }
    }
    let (euler, _) = d.signed_sums()?;
    if alternating != euler {
        return Err(Error::Internal(
            "alternating Betti sum differs from the signed Euler characteristic".into(),
        ));
    }
    Ok(betti)
}

/// The guaranteed weight size `n - k/2 + r/2` forced by a nonzero odd Betti
/// number `b_k`: some term must satisfy
/// `mu_0 + ... + mu_{r-1} + |mu_r| >= n - k/2 + r/2`.
pub fn odd_weight_floor(n: u64, k: u64, r: u64) -> Result<BigRational> {
    if k % 2 == 0 || k == 0 || k >= 2 * n {
        return Err(Error::InvalidInput(format!(
            "k must be odd with 0 < k < 2n; got k = {k}, n = {n}"
        )));
    }
    Ok(BigRational::from_integer(BigInt::from(n))
        + BigRational::new(BigInt::from(r as i64 - k as i64), BigInt::from(2)))
}

/// Largest `b` with `b^2 - 21 b + 2 - 24 n <= 0`, found by binary search on
/// the increasing branch of the quadratic.
fn even_bound_by_quadratic(n: u64) -> u64 {
    let holds = |b: u64| -> bool {
        let b = b as i128;
        b * b - 21 * b + 2 - 24 * (n as i128) <= 0
    };
    let mut lo = 11u64; // f(11) = -110 - 24n < 0 for n >= 1
    let mut hi = 22u64;
    while holds(hi) {
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if holds(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Conditional upper bound for the second Betti number of a hyper-Kähler
/// manifold of dimension 2n whose decomposition satisfies the dominance
/// condition: the integer part of `(21 + sqrt(96 n + 433)) / 2` when the odd
/// cohomology vanishes, and `2k + 1` when `H^k != 0` for odd `k`. The two
/// integer evaluations of the even case must agree.
pub fn b2_bound(n: u64, odd_k: Option<u64>) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    if let Some(k) = odd_k {
        if k % 2 == 0 || k == 0 || k >= 2 * n {
            return Err(Error::InvalidInput(format!(
                "odd_k must be odd with 0 < odd_k < 2n; got {k}"
            )));
        }
        return Ok(2 * k + 1);
    }
    let via_quadratic = even_bound_by_quadratic(n);
    let via_isqrt = (21 + (96u128 * n as u128 + 433).sqrt() as u64) / 2;
    if via_quadratic != via_isqrt {
        return Err(Error::Internal(format!(
            "quadratic and isqrt evaluations disagree at n = {n}: {via_quadratic} vs {via_isqrt}"
        )));
    }
    Ok(via_quadratic)
}

/// One row of [`bound_table`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub n: u64,
    /// Bound assuming no odd cohomology.
    pub even_bound: u64,
    /// Worst odd-cohomology bound `4n - 1` (odd degree `k = 2n - 1`).
    pub odd_worst: u64,
    /// `max(even_bound, 4n - 1)`, valid unconditionally on parity.
    pub unconditional: u64,
}

/// The bound table for `n = 1 ..= n_max`.
pub fn bound_table(n_max: u64) -> Result<Vec<BoundRow>> {
    if n_max == 0 {
        return Err(Error::InvalidInput("n_max must be positive".into()));
    }
    (1..=n_max)
        .map(|n| {
            let even_bound = b2_bound(n, None)?;
            let odd_worst = 4 * n - 1;
            Ok(BoundRow {
                n,
                even_bound,
                odd_worst,
                unconditional: even_bound.max(odd_worst),
            })
        })
        .collect()
}
