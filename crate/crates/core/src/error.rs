use thiserror::Error;

/// Errors raised while constructing or combining algebraic values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("vector is not of unit length (squared norm {norm_sq})")]
    NotUnit { norm_sq: String },
    #[error("twisted adjoint produced a non grade-1 element; input is not a versor")]
    NotGradeOne,
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("automorphism `{0}` is not involutive")]
    NonInvolutive(String),
    #[error("Clifford dimension {0} exceeds the supported maximum of {max}", max = crate::clifford::MAX_DIMENSION)]
    DimensionTooLarge(usize),
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("order bound {requested} exceeds the supported maximum {max}")]
    BoundExceeded { requested: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
