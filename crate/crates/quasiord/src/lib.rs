//! Exact-arithmetic decision procedure for irreducible quasi-ordinary
//! polynomials.
//!
//! A monic polynomial `f` in `y` over `Q[[x_1..x_e]]` is *quasi-ordinary*
//! when its `y`-discriminant is a monomial times a unit. This crate decides
//! whether such an `f` (given with polynomial coefficients) is an
//! irreducible quasi-ordinary polynomial, working entirely from the equation
//! of `f`: it builds approximate roots, the gcd-sequence of lattice indices,
//! the semigroup generators `r_k`, and generalized Newton polygons, and
//! checks the straightness conditions that characterize irreducibility.
//!
//! Module map:
//! - [`polyring`]: exact sparse polynomial arithmetic, order data,
//!   discriminants;
//! - [`gadic`]: `g`-adic / multi-base expansions, Tschirnhausen transform,
//!   approximate roots;
//! - [`charseq`]: lattice indices from gcds of minors, the `r`/`m`
//!   recursion, formal orders;
//! - [`gnp`]: generalized Newton polygons and straightness;
//! - [`criterion`]: the decision loop and its [`criterion::Report`];
//! - [`oracle`]: independent ground truth for testing (branch series,
//!   conjugate products, classical one-variable Newton polygon recursion);
//! - [`cli`]: expression parsing and the command-line front end.

pub mod charseq;
pub mod cli;
pub mod criterion;
pub mod error;
pub mod gadic;
pub mod gnp;
pub mod oracle;
pub mod polyring;

pub use error::{Error, Result};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::polyring::{MPoly, YPoly};

    /// y^8 - 2 x1 x2 y^4 + x1^2 x2^2 - x1^3 x2^2 (irreducible).
    pub fn example1() -> YPoly {
        let mut coeffs = vec![MPoly::zero(2); 9];
        coeffs[8] = MPoly::one(2);
        coeffs[4] = MPoly::from_terms(2, &[(&[1, 1], -2)]);
        coeffs[0] = MPoly::from_terms(2, &[(&[2, 2], 1), (&[3, 2], -1)]);
        YPoly::from_coeffs_asc(2, coeffs)
    }

    /// y^8 - 2 x1 x2 y^4 + x1^2 x2^2 - x1^4 x2^2 - x1^5 x2^3 (not irreducible:
    /// the gcd-sequence stalls).
    pub fn example2() -> YPoly {
        let mut coeffs = vec![MPoly::zero(2); 9];
        coeffs[8] = MPoly::one(2);
        coeffs[4] = MPoly::from_terms(2, &[(&[1, 1], -2)]);
        coeffs[0] =
            MPoly::from_terms(2, &[(&[2, 2], 1), (&[4, 2], -1), (&[5, 3], -1)]);
        YPoly::from_coeffs_asc(2, coeffs)
    }

    /// y^8 - x1 y^5 - 2 x1 x2 y^4 + x1^3 x2^2 (not irreducible: straightness
    /// fails).
    pub fn example3() -> YPoly {
        let mut coeffs = vec![MPoly::zero(2); 9];
        coeffs[8] = MPoly::one(2);
        coeffs[5] = MPoly::from_terms(2, &[(&[1, 0], -1)]);
        coeffs[4] = MPoly::from_terms(2, &[(&[1, 1], -2)]);
        coeffs[0] = MPoly::from_terms(2, &[(&[3, 2], 1)]);
        YPoly::from_coeffs_asc(2, coeffs)
    }

    /// y^4 - x1 x2 (the degree-2 approximate root of example 1, squared base).
    pub fn quartic_root() -> YPoly {
        let mut coeffs = vec![MPoly::zero(2); 5];
        coeffs[4] = MPoly::one(2);
        coeffs[0] = MPoly::from_terms(2, &[(&[1, 1], -1)]);
        YPoly::from_coeffs_asc(2, coeffs)
    }
}
