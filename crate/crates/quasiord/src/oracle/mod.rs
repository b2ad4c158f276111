//! Independent ground-truth machinery for testing the criterion.
//!
//! Nothing here goes through the approximate-root/polygon path: branches are
//! given as explicit truncated series, their minimal polynomials come from
//! conjugate products over small cyclotomic fields, orders are read off
//! substituted series, and the one-variable irreducibility check is the
//! classical Newton polygon recursion.

mod branch;
mod cyclotomic;
mod newton_puiseux;
mod upoly;

pub use branch::{branch_to_poly, order_from_contact, order_of, BranchSeries};
pub use cyclotomic::{
    conductor_supported, cyclotomic_polynomial, euler_phi, CycElem, SUPPORTED_CONDUCTORS,
};
pub use newton_puiseux::newton_puiseux_irreducible_e1;
pub use upoly::UPoly;
