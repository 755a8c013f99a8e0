use core::fmt;

/// Input and consistency errors. Every fallible operation in this crate
/// reports one of these; mathematical verdicts (membership, verification
/// flags) are ordinary return values, not errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A form or value vector has the wrong length for its declared degree.
    DegreeMismatch { expected: usize, found: usize },
    /// Matrix dimensions do not line up for the requested operation.
    ShapeMismatch { expected: (usize, usize), found: (usize, usize) },
    /// A matrix that must be invertible is singular.
    Singular,
    /// A basis that must be linearly independent is not.
    DependentBasis,
    /// gcd of two zero forms is undefined.
    BothZero,
    /// A parameter is outside its allowed range.
    InvalidParameter(&'static str),
    /// An internal identity failed; signals a formula bug, not bad input.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected length {expected}, found {found}")
            }
            Error::ShapeMismatch { expected, found } => write!(
                f,
                "shape mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::Singular => write!(f, "matrix is singular"),
            Error::DependentBasis => write!(f, "basis vectors are linearly dependent"),
            Error::BothZero => write!(f, "gcd of two zero forms is undefined"),
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::Internal(what) => write!(f, "internal consistency error: {what}"),
        }
    }
}
