//! Exact polynomial arithmetic over the rationals.
//!
//! The ground ring is `Q[x_1..x_e]` with sparse representation ([`MPoly`]),
//! standing in for truncated formal power series. On top of it sit monic
//! polynomials in a distinguished variable `y` ([`YPoly`]), order-data
//! extraction ([`MPoly::exp_lex`]), monomial-times-unit factorization
//! ([`MPoly::monomial_unit_split`]) and the `y`-discriminant
//! ([`discriminant_y`]).

mod discriminant;
mod mpoly;
mod ypoly;

pub use discriminant::{discriminant_y, sylvester_matrix};
pub use mpoly::MPoly;
pub use ypoly::YPoly;

use num_bigint::BigUint;
use num_traits::Zero;
use std::cmp::Ordering;
use std::fmt;

/// Exact rational scalar; arbitrary-precision, always canonical.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;

/// Convenience constructor for small rationals.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Convenience constructor for small fractions. Panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Exponent vector of a monomial in `x_1..x_e`.
///
/// Components are nonnegative and arbitrary-precision. The derived `Ord` is
/// plain lexicographic on the component vector and is used only as a stable
/// map key order; the monomial orders that carry meaning are
/// [`MultiIndex::cmp_grlex`] and the `exp` order of [`MPoly::exp_lex`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<BigUint>);

impl MultiIndex {
    pub fn new(components: Vec<BigUint>) -> Self {
        assert!(!components.is_empty(), "ambient variable count must be >= 1");
        MultiIndex(components)
    }

    /// Zero vector of length `e`.
    pub fn zero(e: usize) -> Self {
        Self::new(vec![BigUint::zero(); e])
    }

    /// Unit vector `x_i` (zero-based `i`).
    pub fn unit(e: usize, i: usize) -> Self {
        let mut v = vec![BigUint::zero(); e];
        v[i] = BigUint::from(1u32);
        Self::new(v)
    }

    pub fn from_u64s(components: &[u64]) -> Self {
        Self::new(components.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[BigUint] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn total_degree(&self) -> BigUint {
        self.0.iter().sum()
    }

    /// Componentwise sum (product of monomials).
    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self::new(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; `None` when any component would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.len(), other.len());
        let mut v = Vec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            v.push(a - b);
        }
        Some(Self::new(v))
    }

    /// Componentwise minimum.
    pub fn min_with(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self::new(self.0.iter().zip(&other.0).map(|(a, b)| a.min(b).clone()).collect())
    }

    pub fn scale(&self, k: u64) -> Self {
        let k = BigUint::from(k);
        Self::new(self.0.iter().map(|c| c * &k).collect())
    }

    /// Lexicographic comparison with `x_1` highest priority.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.len(), other.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Graded-lexicographic comparison: total degree first, then lex.
    pub fn cmp_grlex(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.cmp_lex(other))
    }

    /// Comparison for the `exp` order, arranged so that the *maximum* under
    /// it is the `exp` monomial: lower total degree beats higher, and within
    /// a degree the lexicographically greater exponent wins.
    pub fn cmp_exp_order(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .reverse()
            .then_with(|| self.cmp_lex(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Initial-monomial data of a nonzero polynomial: the `exp` exponent and the
/// `inco` coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderData {
    pub exponent: MultiIndex,
    pub coefficient: Rational,
}
