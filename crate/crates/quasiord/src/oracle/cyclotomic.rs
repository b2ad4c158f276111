//! Exact arithmetic in small cyclotomic fields `Q(zeta_N)`.
//!
//! Conductors are restricted to `N` with `phi(N) <= 4`, which covers every
//! root of unity the branch corpus needs while keeping conjugate products
//! desk-scale.

use super::upoly::UPoly;
use crate::error::{Error, Result};
use crate::polyring::Rational;
use num_traits::{One, Zero};

/// Conductors supported by [`CycElem`].
pub const SUPPORTED_CONDUCTORS: [u64; 8] = [1, 2, 3, 4, 5, 6, 8, 12];

pub fn conductor_supported(n: u64) -> bool {
    SUPPORTED_CONDUCTORS.contains(&n)
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// The `n`-th cyclotomic polynomial, by recursive division of `x^n - 1` by
/// the cyclotomic polynomials of proper divisors.
pub fn cyclotomic_polynomial(n: u64) -> UPoly {
    assert!(n > 0);
    if n == 1 {
        return UPoly::from_i64s(&[-1, 1]);
    }
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    coeffs[0] = -Rational::one();
    coeffs[n as usize] = Rational::one();
    let mut result = UPoly::new(coeffs);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        result = result.exact_div(&cyclotomic_polynomial(d));
    }
    result
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count() as u64
}

/// An element of `Q(zeta_N)`: a polynomial in `zeta_N` reduced modulo the
/// `N`-th cyclotomic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycElem {
    conductor: u64,
    rem: UPoly,
}

impl CycElem {
    pub fn new(conductor: u64, value: UPoly) -> Result<Self> {
        if !conductor_supported(conductor) {
            return Err(Error::UnsupportedConductor(conductor));
        }
        let modulus = cyclotomic_polynomial(conductor);
        let (_, rem) = value.divmod(&modulus);
        Ok(CycElem { conductor, rem })
    }

    pub fn zero(conductor: u64) -> Self {
        CycElem { conductor, rem: UPoly::zero() }
    }

    pub fn one(conductor: u64) -> Self {
        Self::from_rational(conductor, Rational::one())
    }

    pub fn from_rational(conductor: u64, c: Rational) -> Self {
        // constants need no reduction for any supported conductor except 1,
        // where zeta = 1 keeps them constant anyway
        CycElem { conductor, rem: UPoly::constant(c) }
    }

    /// `zeta_N^k`.
    pub fn root_of_unity(conductor: u64, k: u64) -> Result<Self> {
        Self::new(conductor, UPoly::monomial((k % conductor.max(1)) as usize, Rational::one()))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.rem.is_zero()
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.rem.is_zero() {
            return Some(Rational::zero());
        }
        if self.rem.degree() == 0 {
            return Some(self.rem.coeff(0));
        }
        None
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.conductor, other.conductor, "mixed cyclotomic conductors");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        CycElem { conductor: self.conductor, rem: self.rem.add(&other.rem) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        CycElem { conductor: self.conductor, rem: self.rem.sub(&other.rem) }
    }

    pub fn neg(&self) -> Self {
        CycElem { conductor: self.conductor, rem: self.rem.neg() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let modulus = cyclotomic_polynomial(self.conductor);
        let (_, rem) = self.rem.mul(&other.rem).divmod(&modulus);
        CycElem { conductor: self.conductor, rem }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CycElem { conductor: self.conductor, rem: self.rem.scale(c) }
    }

    /// Re-express in `Q(zeta_M)` for a multiple `M` of the conductor:
    /// `zeta_N = zeta_M^(M/N)`.
    pub fn embed(&self, new_conductor: u64) -> Result<Self> {
        if new_conductor == self.conductor {
            return Ok(self.clone());
        }
        if new_conductor % self.conductor != 0 {
            return Err(Error::UnsupportedConductor(new_conductor));
        }
        let step = (new_conductor / self.conductor) as usize;
        let mut value = UPoly::zero();
        for (k, c) in self.rem.coeffs().iter().enumerate() {
            if !c.is_zero() {
                value = value.add(&UPoly::monomial(k * step, c.clone()));
            }
        }
        Self::new(new_conductor, value)
    }
}
