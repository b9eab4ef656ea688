use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("not a matroid: {0}")]
    NotAMatroid(String),

    #[error("invalid flat: {0}")]
    InvalidFlat(String),

    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("operand mismatch: {0}")]
    OperandMismatch(String),

    #[error("generic displacement vectors exhausted")]
    GenericVectorExhausted,

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
