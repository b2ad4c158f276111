//! Sparse multivariate polynomials over the rationals.

use super::{MultiIndex, OrderData, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A finitely supported map from exponent vectors to nonzero rationals.
///
/// Every key has length `vars`; zero coefficients are never stored, so the
/// zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    terms: BTreeMap<MultiIndex, Rational>,
    vars: usize,
}

impl MPoly {
    pub fn zero(vars: usize) -> Self {
        assert!(vars >= 1);
        MPoly { terms: BTreeMap::new(), vars }
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(MultiIndex::zero(vars), c);
        }
        p
    }

    /// The monomial `c * x^m`.
    pub fn monomial(vars: usize, m: MultiIndex, c: Rational) -> Self {
        assert_eq!(m.len(), vars);
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable `x_i` (zero-based).
    pub fn var(vars: usize, i: usize) -> Self {
        Self::monomial(vars, MultiIndex::unit(vars, i), Rational::one())
    }

    /// Build from `(exponents, coefficient)` pairs; repeated exponents add.
    pub fn from_terms(vars: usize, terms: &[(&[u64], i64)]) -> Self {
        let mut p = Self::zero(vars);
        for (exps, c) in terms {
            p.add_term(MultiIndex::from_u64s(exps), super::rat(*c));
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &MultiIndex) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&MultiIndex::zero(self.vars))
    }

    /// `true` when the polynomial is the constant `c`.
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_zero())
    }

    pub(crate) fn add_term(&mut self, m: MultiIndex, c: Rational) {
        assert_eq!(m.len(), self.vars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, found: other.vars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.vars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.add(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        let mut out = Self::zero(self.vars);
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * c);
        }
        out
    }

    /// Multiply by the monomial `x^m`.
    pub fn mul_monomial(&self, m: &MultiIndex) -> Self {
        let mut out = Self::zero(self.vars);
        for (k, c) in &self.terms {
            out.terms.insert(k.add(m), c.clone());
        }
        out
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.vars);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Initial-monomial data: among the homogeneous component of minimal
    /// total degree, the lexicographically greatest exponent (priority
    /// `x_1 > x_2 > ...`) and its coefficient.
    pub fn exp_lex(&self) -> Result<OrderData> {
        let best = self
            .terms
            .keys()
            .max_by(|a, b| a.cmp_exp_order(b))
            .ok_or(Error::ZeroPolynomial)?;
        Ok(OrderData { exponent: best.clone(), coefficient: self.terms[best].clone() })
    }

    /// The `t`-order: minimal total degree over the support.
    pub fn order(&self) -> Result<num_bigint::BigUint> {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .min()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Factor as `x^N * u`. Returns `Some((N, u))` with `u(0) != 0` when the
    /// residual after pulling out the componentwise-minimal exponent is a
    /// unit, `None` otherwise.
    pub fn monomial_unit_split(&self) -> Result<Option<(MultiIndex, MPoly)>> {
        let mut support = self.terms.keys();
        let first = support.next().ok_or(Error::ZeroPolynomial)?;
        let n = support.fold(first.clone(), |acc, m| acc.min_with(m));
        let mut u = Self::zero(self.vars);
        for (m, c) in &self.terms {
            let shifted = m.checked_sub(&n).expect("componentwise minimum divides support");
            u.terms.insert(shifted, c.clone());
        }
        if u.constant_term().is_zero() {
            Ok(None)
        } else {
            Ok(Some((n, u)))
        }
    }

    /// Leading term under graded-lex (used by exact division).
    fn leading_term_grlex(&self) -> Option<(&MultiIndex, &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| a.cmp_grlex(b))
    }

    /// Exact division; `None` when `self` is not a multiple of `divisor`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        self.check_vars(divisor)?;
        if divisor.is_zero() {
            return Err(Error::Contract("division by the zero polynomial".into()));
        }
        let (dm, dc) = divisor.leading_term_grlex().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Self::zero(self.vars);
        while !rem.is_zero() {
            let (rm, rc) = rem.leading_term_grlex().expect("nonzero remainder");
            let Some(qm) = rm.checked_sub(dm) else {
                return Ok(None);
            };
            let qc = rc / dc;
            let qterm = Self::monomial(self.vars, qm, qc);
            rem = rem.sub(&qterm.mul(divisor)?)?;
            quot = quot.add(&qterm)?;
        }
        Ok(Some(quot))
    }

    /// Maximum total degree over the support; `None` for the zero polynomial.
    pub fn max_total_degree(&self) -> Option<num_bigint::BigUint> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Discard every term of total degree strictly above `bound`.
    pub fn truncate_total_degree(&self, bound: u64) -> Self {
        let bound = num_bigint::BigUint::from(bound);
        let mut out = Self::zero(self.vars);
        for (m, c) in &self.terms {
            if m.total_degree() <= bound {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Substitute `x_i -> x_i^k` for all `i`.
    pub fn stretch_exponents(&self, k: u64) -> Self {
        let mut out = Self::zero(self.vars);
        for (m, c) in &self.terms {
            out.terms.insert(m.scale(k), c.clone());
        }
        out
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}
