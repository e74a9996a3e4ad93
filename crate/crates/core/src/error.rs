use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vectors are linearly dependent")]
    LinearlyDependent,

    #[error("points are affinely dependent: {0:?}")]
    AffinelyDependent(Vec<usize>),

    #[error("degenerate polytope: points span an affine space of dimension {rank}, need {dim}")]
    Degenerate { rank: usize, dim: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("expected a simplex of dimension {expected}, got dimension {got}")]
    WrongSimplexDimension { expected: usize, got: usize },

    #[error("function is not carried on a triangulation")]
    NotSimplicial,

    #[error("incomplete enumeration: {reason} after {found} triangulations")]
    IncompleteEnumeration { reason: String, found: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
