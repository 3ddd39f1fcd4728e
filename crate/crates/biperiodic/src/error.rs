//! Error type shared across the crate.

use core::fmt;

/// Everything that can go wrong while building parameters, working in the
/// quadratic ring, evaluating closed forms, or expanding series.
///
/// Arithmetic on values with satisfied invariants never fails; these variants
/// surface only at the documented fallible entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// Two quadratic elements from different contexts (different D) were
    /// combined through a checked operation.
    MixedContexts,
    /// Conjugate inversion was requested for an element whose norm
    /// x² − D·y² vanishes. When D is a perfect square the ring has zero
    /// divisors, so this is reachable even for nonzero elements.
    NonInvertible,
    /// The discriminant a²b² + 4ab is zero for the requested parameters.
    ZeroDiscriminant,
    /// A recurrence coefficient that must be nonzero is zero.
    ZeroParameter(&'static str),
    /// Both initial terms are zero, which collapses the whole sequence.
    ZeroInitialPair,
    /// A Binet-form evaluation produced a value with a nonzero sqrt(D) part.
    NonRationalBinet,
    /// A closed-form right-hand side produced a value with a nonzero
    /// sqrt(D) part.
    NonRationalRhs,
    /// A rational function with den(0) = 0 cannot be expanded at the origin.
    PoleAtOrigin,
    /// Reindexing a series by t^(1-s) would create a negative exponent.
    NegativeExponentAfterShift,
    /// An index precondition was violated; the message names it.
    Precondition(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MixedContexts => write!(f, "mixed quadratic contexts"),
            Error::NonInvertible => write!(f, "non-invertible element"),
            Error::ZeroDiscriminant => write!(f, "a^2*b^2 + 4ab = 0"),
            Error::ZeroParameter(name) => write!(f, "{name} = 0"),
            Error::ZeroInitialPair => write!(f, "w0 = w1 = 0"),
            Error::NonRationalBinet => write!(f, "nonrational Binet value"),
            Error::NonRationalRhs => write!(f, "nonrational RHS"),
            Error::PoleAtOrigin => write!(f, "pole at origin"),
            Error::NegativeExponentAfterShift => {
                write!(f, "negative exponent after shift")
            }
            Error::Precondition(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for Error {}
