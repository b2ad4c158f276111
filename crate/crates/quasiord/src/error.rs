//! Crate-wide error type.

use std::fmt;

/// Errors raised by contract violations and undefined operations.
///
/// Mathematical "failure" outcomes of the irreducibility test are *not*
/// errors; they are reported through [`crate::criterion::Report`]. Errors mean
/// the caller handed us something outside an operation's domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two polynomials live in rings with a different number of variables.
    DimensionMismatch { expected: usize, found: usize },
    /// Order data (exp/inco) requested of the zero polynomial.
    ZeroPolynomial,
    /// Division or expansion with a non-monic base.
    NonMonicDivisor,
    /// A polynomial that had to be monic is not.
    NotMonic,
    /// Degree divisibility required by an expansion does not hold.
    DegreeNotDivisible { degree: usize, divisor: usize },
    /// A lattice computation needs integer entries but got a proper fraction.
    NonIntegralVector,
    /// Recovering characteristic exponents produced a negative component.
    NegativeExponent { index: usize },
    /// A series computation ran past its stated truncation bound.
    TruncationExceeded { needed: u64, bound: u64 },
    /// A branch's conjugate orbit does not have the promised size.
    OrbitSize { expected: usize, found: usize },
    /// Root-of-unity order outside the supported conductor set.
    UnsupportedConductor(u64),
    /// A conjugate product failed to land back in the rationals.
    NonRationalCoefficient,
    /// Input text failed to parse; `pos` is a byte offset.
    Parse { pos: usize, msg: String },
    /// Miscellaneous precondition violation.
    Contract(String),
    /// An internal consistency check failed; indicates a bug.
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "variable count mismatch: expected {expected}, found {found}")
            }
            Error::ZeroPolynomial => write!(f, "order data is undefined for the zero polynomial"),
            Error::NonMonicDivisor => write!(f, "divisor must be monic of positive degree"),
            Error::NotMonic => write!(f, "polynomial must be monic in y"),
            Error::DegreeNotDivisible { degree, divisor } => {
                write!(f, "degree {degree} is not divisible by {divisor}")
            }
            Error::NonIntegralVector => write!(f, "lattice data requires integer vectors"),
            Error::NegativeExponent { index } => {
                write!(f, "recovered exponent sequence has a negative component at step {index}")
            }
            Error::TruncationExceeded { needed, bound } => {
                write!(f, "series order {needed} is at or beyond the truncation bound {bound}")
            }
            Error::OrbitSize { expected, found } => {
                write!(f, "conjugate orbit has size {found}, expected {expected}")
            }
            Error::UnsupportedConductor(n) => {
                write!(f, "root-of-unity order {n} is outside the supported set")
            }
            Error::NonRationalCoefficient => {
                write!(f, "conjugate product has a coefficient outside the rationals")
            }
            Error::Parse { pos, msg } => write!(f, "parse error at byte {pos}: {msg}"),
            Error::Contract(msg) => write!(f, "contract violation: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
