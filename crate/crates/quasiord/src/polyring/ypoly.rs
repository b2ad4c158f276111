//! Polynomials in `y` with [`MPoly`] coefficients.

use super::{MPoly, MultiIndex, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;

/// A polynomial in `y` over `Q[x_1..x_e]`, stored dense in the `y`-power.
///
/// `coeffs[i]` is the coefficient of `y^i`; the top entry is nonzero except
/// for the zero polynomial, which has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct YPoly {
    coeffs: Vec<MPoly>,
    vars: usize,
}

impl YPoly {
    pub fn zero(vars: usize) -> Self {
        YPoly { coeffs: Vec::new(), vars }
    }

    pub fn constant(vars: usize, c: MPoly) -> Self {
        assert_eq!(c.vars(), vars);
        Self::from_coeffs_asc(vars, vec![c])
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, MPoly::one(vars))
    }

    /// The monomial `y^k`.
    pub fn y_power(vars: usize, k: usize) -> Self {
        let mut coeffs = vec![MPoly::zero(vars); k + 1];
        coeffs[k] = MPoly::one(vars);
        Self::from_coeffs_asc(vars, coeffs)
    }

    /// Build from coefficients of ascending `y`-power; trailing zeros trimmed.
    pub fn from_coeffs_asc(vars: usize, mut coeffs: Vec<MPoly>) -> Self {
        for c in &coeffs {
            assert_eq!(c.vars(), vars, "coefficient in a different ring");
        }
        while coeffs.last().is_some_and(MPoly::is_zero) {
            coeffs.pop();
        }
        YPoly { coeffs, vars }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `y`; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coefficient(&self) -> MPoly {
        self.coeffs.last().cloned().unwrap_or_else(|| MPoly::zero(self.vars))
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading_coefficient() == MPoly::one(self.vars)
    }

    /// Coefficient of `y^k`.
    pub fn coefficient(&self, k: usize) -> MPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(|| MPoly::zero(self.vars))
    }

    /// The expansion coefficient `a_k`, i.e. the coefficient of `y^(n-k)`.
    pub fn a_coeff(&self, k: usize) -> MPoly {
        assert!(k <= self.degree());
        self.coefficient(self.degree() - k)
    }

    pub fn coeffs_asc(&self) -> &[MPoly] {
        &self.coeffs
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, found: other.vars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coefficient(i).add(&other.coefficient(i))?);
        }
        Ok(Self::from_coeffs_asc(self.vars, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        YPoly { coeffs: self.coeffs.iter().map(MPoly::neg).collect(), vars: self.vars }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.vars));
        }
        let mut coeffs = vec![MPoly::zero(self.vars); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b)?)?;
            }
        }
        Ok(Self::from_coeffs_asc(self.vars, coeffs))
    }

    pub fn mul_mpoly(&self, c: &MPoly) -> Result<Self> {
        if c.vars() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, found: c.vars() });
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.mul(c)?);
        }
        Ok(Self::from_coeffs_asc(self.vars, coeffs))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs_asc(self.vars, self.coeffs.iter().map(|a| a.scale(c)).collect())
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

    /// Exact division with remainder by a monic divisor of positive degree:
    /// `self = g*q + r` with `deg_y r < deg_y g`.
    pub fn divmod(&self, g: &Self) -> Result<(Self, Self)> {
        self.check_vars(g)?;
        if g.is_zero() || g.degree() == 0 || !g.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let dg = g.degree();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.vars);
        while !rem.is_zero() && rem.degree() >= dg {
            let k = rem.degree() - dg;
            let c = rem.leading_coefficient();
            let mut term_coeffs = vec![MPoly::zero(self.vars); k + 1];
            term_coeffs[k] = c;
            let term = Self::from_coeffs_asc(self.vars, term_coeffs);
            rem = rem.sub(&term.mul(g)?)?;
            quot = quot.add(&term)?;
        }
        Ok((quot, rem))
    }

    pub fn derivative_y(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.vars);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&super::rat(i as i64)))
            .collect();
        Self::from_coeffs_asc(self.vars, coeffs)
    }

    /// Substitute `y -> y + s` and expand (Horner in the shifted variable).
    pub fn shift_y(&self, s: &MPoly) -> Result<Self> {
        if s.vars() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, found: s.vars() });
        }
        let shifted_var = Self::from_coeffs_asc(self.vars, vec![s.clone(), MPoly::one(self.vars)]);
        let mut acc = Self::zero(self.vars);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&shifted_var)?.add(&Self::constant(self.vars, c.clone()))?;
        }
        Ok(acc)
    }

    /// Substitute `x_i -> x_i^k` in every coefficient.
    pub fn stretch_exponents(&self, k: u64) -> Self {
        Self::from_coeffs_asc(
            self.vars,
            self.coeffs.iter().map(|c| c.stretch_exponents(k)).collect(),
        )
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YPoly({self})")
    }
}

// ---- canonical text form (grammar-compatible, see the CLI parser) ----

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &MultiIndex, c: &Rational) -> fmt::Result {
    let mut wrote = false;
    if !c.abs().is_one() || m.is_zero() {
        write!(f, "{}", c.abs())?;
        wrote = true;
    }
    for (i, p) in m.components().iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        if wrote {
            write!(f, "*")?;
        }
        write!(f, "x{}", i + 1)?;
        if !p.is_one() {
            write!(f, "^{p}")?;
        }
        wrote = true;
    }
    Ok(())
}

/// Terms in print order: ascending total degree, then lex-greatest first.
fn sorted_terms(p: &MPoly) -> Vec<(&MultiIndex, &Rational)> {
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|(a, _), (b, _)| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| b.cmp_lex(a))
    });
    terms
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in sorted_terms(self).into_iter().enumerate() {
            if i == 0 {
                if c < &Rational::zero() {
                    write!(f, "-")?;
                }
            } else if c < &Rational::zero() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_monomial(f, m, c)?;
        }
        Ok(())
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            if k == 0 || c.num_terms() == 1 {
                // inline, pulling the sign of each term out front
                for (m, q) in sorted_terms(c) {
                    if first {
                        if q < &Rational::zero() {
                            write!(f, "-")?;
                        }
                        first = false;
                    } else if q < &Rational::zero() {
                        write!(f, " - ")?;
                    } else {
                        write!(f, " + ")?;
                    }
                    let coef_is_bare_one = q.abs().is_one() && m.is_zero();
                    if !(coef_is_bare_one && k > 0) {
                        write_monomial(f, m, q)?;
                        if k > 0 {
                            write!(f, "*")?;
                        }
                    }
                    if k > 0 {
                        write!(f, "y")?;
                        if k > 1 {
                            write!(f, "^{k}")?;
                        }
                    }
                }
            } else {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "({c})*y")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    /// Example fixture: y^8 - 2 x1 x2 y^4 + x1^2 x2^2 - x1^3 x2^2.
    pub(crate) fn sample_octic() -> YPoly {
        let mut coeffs = vec![MPoly::zero(2); 9];
        coeffs[8] = MPoly::one(2);
        coeffs[4] = MPoly::from_terms(2, &[(&[1, 1], -2)]);
        coeffs[0] = MPoly::from_terms(2, &[(&[2, 2], 1), (&[3, 2], -1)]);
        YPoly::from_coeffs_asc(2, coeffs)
    }

    #[test]
    fn divmod_identity() {
        let f = sample_octic();
        let (q, r) = f.divmod(&f).unwrap();
        assert_eq!(q, YPoly::one(2));
        assert!(r.is_zero());
    }

    #[test]
    fn divmod_square_decomposition() {
        // f = (y^4 - x1 x2)^2 - x1^3 x2^2 divided by g = y^4 - x1 x2
        let f = sample_octic();
        let g = YPoly::from_coeffs_asc(
            2,
            vec![
                MPoly::from_terms(2, &[(&[1, 1], -1)]),
                MPoly::zero(2),
                MPoly::zero(2),
                MPoly::zero(2),
                MPoly::one(2),
            ],
        );
        let (q, r) = f.divmod(&g).unwrap();
        assert_eq!(q, g);
        assert_eq!(r, YPoly::constant(2, MPoly::from_terms(2, &[(&[3, 2], -1)])));
    }

    #[test]
    fn divmod_linear_divisor() {
        // y^2 = (y + x1)(y - x1) + x1^2
        let f = YPoly::y_power(2, 2);
        let g = YPoly::from_coeffs_asc(2, vec![MPoly::var(2, 0), MPoly::one(2)]);
        let (q, r) = f.divmod(&g).unwrap();
        let want_q = YPoly::from_coeffs_asc(2, vec![MPoly::var(2, 0).neg(), MPoly::one(2)]);
        assert_eq!(q, want_q);
        assert_eq!(r, YPoly::constant(2, MPoly::from_terms(2, &[(&[2, 0], 1)])));
    }

    #[test]
    fn divmod_rejects_nonmonic() {
        let f = YPoly::y_power(2, 2);
        let g = f.scale(&rat(2));
        assert!(matches!(f.divmod(&g), Err(Error::NonMonicDivisor)));
    }

    #[test]
    fn divmod_roundtrip() {
        let f = sample_octic();
        let g = YPoly::from_coeffs_asc(2, vec![MPoly::var(2, 1), MPoly::var(2, 0), MPoly::one(2)]);
        let (q, r) = f.divmod(&g).unwrap();
        assert!(r.is_zero() || r.degree() < g.degree());
        assert_eq!(g.mul(&q).unwrap().add(&r).unwrap(), f);
    }

    #[test]
    fn shift_y_perfect_cube() {
        // (y + x2)^3 shifted by -x2 gives y^3
        let x2 = MPoly::var(2, 1);
        let lin = YPoly::from_coeffs_asc(2, vec![x2.clone(), MPoly::one(2)]);
        let cube = lin.pow(3);
        assert_eq!(cube.shift_y(&x2.neg()).unwrap(), YPoly::y_power(2, 3));
    }

    #[test]
    fn display_sample() {
        assert_eq!(
            sample_octic().to_string(),
            "y^8 - 2*x1*x2*y^4 + x1^2*x2^2 - x1^3*x2^2"
        );
        assert_eq!(YPoly::y_power(1, 1).to_string(), "y");
        assert_eq!(YPoly::zero(1).to_string(), "0");
    }
}
