use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("size bound exceeded: {what} would exceed {limit}")]
    SizeBound { what: String, limit: usize },
    #[error("needs candidate set: {0}")]
    NeedsCandidates(String),
    #[error("not a biretraction: {0}")]
    NotBiretraction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
