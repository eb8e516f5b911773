use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("variable x[{row},{col}] out of bounds: {context}")]
    VariableOutOfBounds {
        row: usize,
        col: usize,
        context: String,
    },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("monomial ideal is not radical")]
    NotRadical,

    #[error("monomial ideal is not radical Borel-fixed: {0}")]
    NotRadicalBorelFixed(String),

    #[error("monomial cannot be depolarized: {0}")]
    NotDepolarizable(String),

    #[error("exponent bound violated: {0}")]
    BoundViolation(String),

    #[error("generators are not variable-disjoint: {0}")]
    DisjointnessViolation(String),

    #[error("computation exceeded its deadline")]
    Timeout,

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
