//! Dense univariate polynomials over the rationals, used by the oracle's
//! cyclotomic arithmetic and Hensel lifting. Deliberately separate from the
//! main polynomial stack so the oracle stays an independent check.

use crate::polyring::Rational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly(Vec<Rational>);

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| crate::polyring::rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.0.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn leading(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Division with remainder; panics on a zero divisor.
    pub fn divmod(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dlead = divisor.leading();
        let dd = divisor.degree();
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        while rem.0.len() >= divisor.0.len() {
            let k = rem.degree() - dd;
            let c = rem.leading() / &dlead;
            quot[k] = c.clone();
            let t = divisor.mul(&Self::monomial(k, c));
            rem = rem.sub(&t);
        }
        (Self::new(quot), rem)
    }

    /// Exact division; panics when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.divmod(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g` and
    /// `g` monic (or zero).
    pub fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Self::one();
        let mut s1 = Self::zero();
        let mut t0 = Self::zero();
        let mut t1 = Self::one();
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead = r0.leading();
        let inv = Rational::one() / lead;
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Compose with a shift: `p(z + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        let lin = Self::new(vec![c.clone(), Rational::one()]);
        let mut acc = Self::zero();
        for a in self.0.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(a.clone()));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divmod_roundtrip() {
        let a = UPoly::from_i64s(&[1, 0, -3, 7, 2]);
        let b = UPoly::from_i64s(&[2, 1, 1]);
        let (q, r) = a.divmod(&b);
        assert_eq!(b.mul(&q).add(&r), a);
        assert!(r.degree() < b.degree() || r.is_zero());
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = UPoly::from_i64s(&[-1, 1]).mul(&UPoly::from_i64s(&[1, 1])); // (z-1)(z+1)
        let b = UPoly::from_i64s(&[-1, 1]).mul(&UPoly::from_i64s(&[2, 1])); // (z-1)(z+2)
        let (g, s, t) = a.extended_gcd(&b);
        assert_eq!(g, UPoly::from_i64s(&[-1, 1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn shift_binomial() {
        // (z+1)^2 = z^2 + 2z + 1
        let p = UPoly::from_i64s(&[0, 0, 1]);
        assert_eq!(p.shift(&crate::polyring::rat(1)), UPoly::from_i64s(&[1, 2, 1]));
    }
}
