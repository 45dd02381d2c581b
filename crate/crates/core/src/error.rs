use std::fmt;

/// The error type for fallible operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// Two objects that must share a dimension do not.
    DimensionMismatch { expected: usize, got: usize },
    /// A degree or derivative order is outside its admissible range.
    DegreeOutOfRange { detail: &'static str },
    /// A multi-index key does not sum to the polynomial's degree.
    DegreeSumMismatch { expected: u32, got: u32 },
    /// The number of arguments differs from the polynomial degree.
    WrongArgumentCount { expected: usize, got: usize },
    /// A square linear system has no unique solution.
    SingularMatrix,
    /// Matrix dimensions are inconsistent with the requested operation.
    MatrixShape { detail: &'static str },
    /// A parameter violated its documented precondition.
    InvalidParameter { detail: &'static str },
}

impl std::error::Error for Error {}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            Self::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Self::DegreeOutOfRange { detail } => {
                write!(f, "degree out of range: {detail}")
            }
            Self::DegreeSumMismatch { expected, got } => {
                write!(
                    f,
                    "multi-index exponents sum to {got}, expected degree {expected}"
                )
            }
            Self::WrongArgumentCount { expected, got } => {
                write!(f, "expected {expected} argument vectors, got {got}")
            }
            Self::SingularMatrix => write!(f, "matrix is singular"),
            Self::MatrixShape { detail } => write!(f, "matrix shape error: {detail}"),
            Self::InvalidParameter { detail } => write!(f, "invalid parameter: {detail}"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
