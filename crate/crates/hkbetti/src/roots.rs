//! Root and weight combinatorics of the orthogonal Lie algebras so(b2 + 2, C).
//!
//! For b2 = 2r the algebra has type D_{r+1}, for b2 = 2r + 1 type B_{r+1}; in
//! both cases the rank is r + 1. Everything is expressed in the epsilon basis
//! of the dual Cartan subalgebra:
//!
//! - positive roots: `e_i ± e_j` for `i < j`, plus every `e_i` in type B;
//! - Weyl vector rho: `(r, r-1, ..., 1, 0)` for D, `(r+1/2, ..., 3/2, 1/2)` for B;
//! - dominant chamber: `m_0 >= ... >= m_{r-1} >= |m_r|` (D), `m_0 >= ... >= m_r >= 0` (B);
//! - Weyl group: signed permutations of coordinates, restricted to evenly many
//!   sign changes in type D.
//!
//! Weight coordinates are either all integers ("even" weights) or all
//! half-integers ("odd" weights). They are stored doubled, so spin weights
//! stay in integer arithmetic; pairings divide by four at the very end.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ratio::half_string;

/// Coordinate parity of a weight: integer entries (even) or half-integer
/// entries (odd). Odd weights label spin representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Parity of a tensor product grading: odd combines with odd to even.
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Series of the root system: B for odd b2, D for even b2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    B,
    D,
}

/// A weight of so(b2 + 2) in epsilon coordinates, stored doubled.
///
/// `coords2()[i]` equals `2 * m_i`, so all entries share one parity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords2: Vec<i64>,
}

impl Weight {
    /// Builds a weight from doubled coordinates, rejecting mixed parity.
    pub fn from_doubled(coords2: Vec<i64>) -> Result<Self> {
        if coords2.is_empty() {
            return Err(Error::InvalidInput("weight needs at least one coordinate".into()));
        }
        let parity = coords2[0].rem_euclid(2);
        if coords2.iter().any(|c| c.rem_euclid(2) != parity) {
            return Err(Error::MixedParity);
        }
        Ok(Weight { coords2 })
    }

    /// Integer weight `(m_0, ..., m_r)`.
    pub fn from_integers(coords: &[i64]) -> Self {
        Weight { coords2: coords.iter().map(|c| 2 * c).collect() }
    }

    /// The zero weight of the given rank.
    pub fn zero(rank: usize) -> Self {
        Weight { coords2: vec![0; rank] }
    }

    /// The basis weight `e_i` at the given rank.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut coords2 = vec![0; rank];
        coords2[i] = 2;
        Weight { coords2 }
    }

    /// `(m, 0, ..., 0)`, the highest weight of the m-th harmonic power of the
    /// standard module.
    pub fn row(rank: usize, m: i64) -> Self {
        let mut coords2 = vec![0; rank];
        coords2[0] = 2 * m;
        Weight { coords2 }
    }

    pub fn coords2(&self) -> &[i64] {
        &self.coords2
    }

    pub fn len(&self) -> usize {
        self.coords2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords2.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords2.iter().all(|&c| c == 0)
    }

    pub fn parity(&self) -> Parity {
        if self.coords2[0].rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Extends with trailing zeros up to `rank` (the usual shorthand that
    /// omits trailing zero coordinates). Odd weights cannot be padded.
    pub fn padded(&self, rank: usize) -> Result<Self> {
        if self.coords2.len() == rank {
            return Ok(self.clone());
        }
        if self.coords2.len() > rank {
            return Err(Error::LengthMismatch { expected: rank, got: self.coords2.len() });
        }
        if self.parity() == Parity::Odd {
            return Err(Error::InvalidInput(format!(
                "odd weight {self} must spell out all {rank} coordinates"
            )));
        }
        let mut coords2 = self.coords2.clone();
        coords2.resize(rank, 0);
        Ok(Weight { coords2 })
    }

    /// Sum of coordinates with the last one in absolute value,
    /// `m_0 + ... + m_{r-1} + |m_r|`, as an exact rational.
    pub fn chamber_sum(&self) -> BigRational {
        let n = self.coords2.len();
        let doubled: i64 = self.coords2[..n - 1].iter().sum::<i64>() + self.coords2[n - 1].abs();
        BigRational::new(BigInt::from(doubled), BigInt::from(2))
    }

    pub(crate) fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.len(), other.len());
        Weight {
            coords2: self
                .coords2
                .iter()
                .zip(&other.coords2)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self + k * other` in doubled coordinates.
    pub(crate) fn add_scaled(&self, other: &Weight, k: i64) -> Weight {
        debug_assert_eq!(self.len(), other.len());
        Weight {
            coords2: self
                .coords2
                .iter()
                .zip(&other.coords2)
                .map(|(a, b)| a + k * b)
                .collect(),
        }
    }

    /// Reflection `m_r -> -m_r` of the last coordinate.
    pub fn reflect_last(&self) -> Weight {
        let mut coords2 = self.coords2.clone();
        if let Some(last) = coords2.last_mut() {
            *last = -*last;
        }
        Weight { coords2 }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords2.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", half_string(*c))?;
        }
        write!(f, ")")
    }
}

/// Dot product of doubled coordinate vectors (four times the actual pairing).
pub(crate) fn dot2(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(x, y)| (*x as i128) * (*y as i128)).sum()
}

/// Euclidean pairing of two weights in epsilon coordinates, as an exact
/// rational. This is the normalization in which `(rho, e_0) = r` resp.
/// `r + 1/2`; the abstract Killing form differs from it by a global scalar
/// that cancels in every ratio this crate computes.
pub fn pairing(a: &Weight, b: &Weight) -> Result<BigRational> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), got: b.len() });
    }
    Ok(BigRational::new(
        BigInt::from(dot2(a.coords2(), b.coords2())),
        BigInt::from(4),
    ))
}

/// Root data of so(b2 + 2, C): positive roots, Weyl vector, series and rank.
#[derive(Debug, Clone)]
pub struct RootSystem {
    b2: u32,
    series: Series,
    positive_roots: Vec<Weight>,
    simple_roots: Vec<Weight>,
    rho: Weight,
}

impl RootSystem {
    /// Root data for so(b2 + 2). Accepts any b2 >= 1 except b2 = 2, whose
    /// type-D system of rank 1 is not simple.
    pub fn new(b2: u32) -> Result<Self> {
        if b2 == 0 {
            return Err(Error::InvalidInput("b2 must be positive".into()));
        }
        if b2 == 2 {
            return Err(Error::UnsupportedRank(
                "b2 = 2 gives the non-simple D_2 system; smallest even case is b2 = 4".into(),
            ));
        }
        let series = if b2 % 2 == 0 { Series::D } else { Series::B };
        let rank = (b2 as usize) / 2 + 1;

        let mut positive_roots = Vec::new();
        for i in 0..rank {
            for j in (i + 1)..rank {
                positive_roots.push(Weight::basis(rank, i).add_scaled(&Weight::basis(rank, j), -1));
                positive_roots.push(Weight::basis(rank, i).add(&Weight::basis(rank, j)));
            }
        }
        if series == Series::B {
            for i in 0..rank {
                positive_roots.push(Weight::basis(rank, i));
            }
        }

        // rho as the half sum of positive roots; entries stay integral in
        // doubled coordinates because every root has even doubled entries.
        let mut rho2 = vec![0i64; rank];
        for root in &positive_roots {
            for (acc, c) in rho2.iter_mut().zip(root.coords2()) {
                *acc += c;
            }
        }
        debug_assert!(rho2.iter().all(|c| c % 2 == 0));
        let rho = Weight::from_doubled(rho2.iter().map(|c| c / 2).collect())?;

        let mut simple_roots: Vec<Weight> = (0..rank - 1)
            .map(|i| Weight::basis(rank, i).add_scaled(&Weight::basis(rank, i + 1), -1))
            .collect();
        match series {
            Series::B => simple_roots.push(Weight::basis(rank, rank - 1)),
            Series::D => {
                simple_roots.push(Weight::basis(rank, rank - 2).add(&Weight::basis(rank, rank - 1)))
            }
        }

        Ok(RootSystem { b2, series, positive_roots, simple_roots, rho })
    }

    pub fn b2(&self) -> u32 {
        self.b2
    }

    pub fn series(&self) -> Series {
        self.series
    }

    /// Rank r + 1 of the algebra, with r = floor(b2 / 2).
    pub fn rank(&self) -> usize {
        self.rho.len()
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    /// Weyl vector, the half sum of the positive roots.
    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Order of the Weyl group: 2^(r+1) (r+1)! for B, 2^r (r+1)! for D.
    pub fn weyl_order(&self) -> BigUint {
        let rank = self.rank() as u32;
        let mut order = BigUint::one() << match self.series {
            Series::B => rank,
            Series::D => rank - 1,
        };
        for k in 1..=rank {
            order *= BigUint::from(k);
        }
        order
    }

    fn check_len(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::LengthMismatch { expected: self.rank(), got: w.len() });
        }
        Ok(())
    }

    /// Dominance test: `m_0 >= ... >= m_r >= 0` for B, and
    /// `m_0 >= ... >= m_{r-1} >= |m_r|` for D.
    pub fn is_dominant(&self, mu: &Weight) -> Result<bool> {
        self.check_len(mu)?;
        let c = mu.coords2();
        let n = c.len();
        for i in 0..n - 1 {
            let next = if i + 1 == n - 1 && self.series == Series::D {
                c[i + 1].abs()
            } else {
                c[i + 1]
            };
            if c[i] < next {
                return Ok(false);
            }
        }
        Ok(match self.series {
            Series::B => c[n - 1] >= 0,
            Series::D => true,
        })
    }

    pub(crate) fn assert_dominant(&self, mu: &Weight) -> Result<()> {
        if self.is_dominant(mu)? {
            Ok(())
        } else {
            Err(Error::NotDominant(mu.to_string()))
        }
    }

    /// The dominant representative of the Weyl orbit of `theta`: sort the
    /// absolute values in decreasing order; in type D a sign survives on the
    /// smallest entry when the original had an odd number of negative
    /// coordinates (sign changes only come in pairs there).
    pub fn dominant_conjugate(&self, theta: &Weight) -> Result<Weight> {
        self.check_len(theta)?;
        let negatives = theta.coords2().iter().filter(|&&c| c < 0).count();
        let mut abs: Vec<i64> = theta.coords2().iter().map(|c| c.abs()).collect();
        abs.sort_unstable_by(|a, b| b.cmp(a));
        if self.series == Series::D && negatives % 2 == 1 {
            let last = abs.len() - 1;
            abs[last] = -abs[last];
        }
        Weight::from_doubled(abs)
    }

    /// Number of elements in the Weyl orbit of a dominant weight, computed
    /// from the multiset shape without enumeration.
    pub fn orbit_size(&self, lambda: &Weight) -> Result<BigUint> {
        self.assert_dominant(lambda)?;
        let mut counts: BTreeMap<i64, u32> = BTreeMap::new();
        for c in lambda.coords2() {
            *counts.entry(c.abs()).or_insert(0) += 1;
        }
        // distinct arrangements of the absolute values
        let mut arrangements = factorial(self.rank() as u32);
        for count in counts.values() {
            arrangements /= factorial(*count);
        }
        let nonzero = lambda.coords2().iter().filter(|&&c| c != 0).count() as u32;
        let has_zero = nonzero < self.rank() as u32;
        let sign_choices = match self.series {
            Series::B => BigUint::one() << nonzero,
            // flipping a zero coordinate is free, so with a zero present all
            // sign patterns on the nonzero entries occur
            Series::D if has_zero => BigUint::one() << nonzero,
            Series::D => BigUint::one() << (nonzero - 1),
        };
        Ok(arrangements * sign_choices)
    }

    /// Full Weyl orbit of a dominant weight: all signed permutations of the
    /// coordinates, with only even sign patterns in type D (modulo flips
    /// absorbed by zero coordinates).
    pub fn weyl_orbit(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        self.assert_dominant(lambda)?;
        let abs: Vec<i64> = lambda.coords2().iter().map(|c| c.abs()).collect();
        let neg_parity = lambda.coords2().iter().filter(|&&c| c < 0).count() % 2;
        let mut orbit = Vec::new();
        for_each_arrangement(&abs, &mut |arrangement| {
            let nonzero: Vec<usize> = (0..arrangement.len())
                .filter(|&i| arrangement[i] != 0)
                .collect();
            let has_zero = nonzero.len() < arrangement.len();
            for mask in 0u32..(1 << nonzero.len()) {
                if self.series == Series::D
                    && !has_zero
                    && (mask.count_ones() as usize) % 2 != neg_parity
                {
                    continue;
                }
                let mut coords2 = arrangement.to_vec();
                for (bit, &idx) in nonzero.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        coords2[idx] = -coords2[idx];
                    }
                }
                orbit.push(Weight { coords2 });
            }
        });
        Ok(orbit)
    }

    /// Weyl dimension formula: `dim V_mu = prod_{a in R+} (mu+rho, a) / (rho, a)`.
    /// The rational product always clears to a positive integer.
    pub fn weyl_dimension(&self, mu: &Weight) -> Result<BigUint> {
        self.assert_dominant(mu)?;
        let shifted = mu.add(&self.rho);
        let mut numer = BigUint::one();
        let mut denom = BigUint::one();
        for alpha in &self.positive_roots {
            let top = dot2(shifted.coords2(), alpha.coords2());
            let bottom = dot2(self.rho.coords2(), alpha.coords2());
            debug_assert!(top > 0 && bottom > 0);
            numer *= BigUint::from(top as u128);
            denom *= BigUint::from(bottom as u128);
        }
        let (quot, rem) = num_integer::Integer::div_rem(&numer, &denom);
        if !rem.is_zero() {
            return Err(Error::Internal(format!(
                "Weyl dimension product for {mu} did not clear to an integer"
            )));
        }
        Ok(quot)
    }

    /// All dominant weights with `m_0 + ... + m_{r-1} + |m_r| <= max`, of both
    /// parities, where `max2` is the doubled bound. Used for verification
    /// grids.
    pub fn dominant_weights_up_to_sum(&self, max2: i64) -> Vec<Weight> {
        let rank = self.rank();
        let mut out = Vec::new();
        for parity in [0i64, 1] {
            let mut chain = Vec::with_capacity(rank);
            self.chain_rec(parity, max2, &mut chain, &mut out);
        }
        out.sort();
        out
    }

    fn chain_rec(&self, parity: i64, budget2: i64, chain: &mut Vec<i64>, out: &mut Vec<Weight>) {
        let rank = self.rank();
        if chain.len() == rank {
            out.push(Weight { coords2: chain.clone() });
            if self.series == Series::D && *chain.last().unwrap() > 0 {
                let mut reflected = chain.clone();
                let last = reflected.len() - 1;
                reflected[last] = -reflected[last];
                out.push(Weight { coords2: reflected });
            }
            return;
        }
        let prev = chain.last().copied().unwrap_or(i64::MAX);
        let mut v = std::cmp::min(prev, budget2);
        if v.rem_euclid(2) != parity {
            v -= 1;
        }
        while v >= parity {
            chain.push(v);
            self.chain_rec(parity, budget2 - v, chain, out);
            chain.pop();
            v -= 2;
        }
    }
}

/// Calls `f` once for every distinct arrangement of the multiset `values`.
fn for_each_arrangement(values: &[i64], f: &mut impl FnMut(&[i64])) {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for v in values {
        *counts.entry(*v).or_insert(0) += 1;
    }
    let mut current = Vec::with_capacity(values.len());
    arrangement_rec(values.len(), &mut counts, &mut current, f);
}

fn arrangement_rec(
    total: usize,
    counts: &mut BTreeMap<i64, usize>,
    current: &mut Vec<i64>,
    f: &mut impl FnMut(&[i64]),
) {
    if current.len() == total {
        f(current);
        return;
    }
    let choices: Vec<i64> = counts
        .iter()
        .filter(|(_, &c)| c > 0)
        .map(|(&v, _)| v)
        .collect();
    for v in choices {
        *counts.get_mut(&v).unwrap() -= 1;
        current.push(v);
        arrangement_rec(total, counts, current, f);
        current.pop();
        *counts.get_mut(&v).unwrap() += 1;
    }
}

pub(crate) fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).product::<BigUint>().max(BigUint::one())
}
