use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("alignment error: {0}")]
    Alignment(String),
    #[error("flag members are not nested at position {0}")]
    Nesting(usize),
    #[error("flag has two members of dimension {0}")]
    DuplicateDimension(usize),
    #[error("invalid flag type: {0}")]
    InvalidType(String),
    #[error("flag type mismatch: {0}")]
    TypeMismatch(String),
    #[error("level {level} too small for descriptor {descriptor}")]
    LevelTooSmall { level: usize, descriptor: String },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("could not draw a nondegenerate sample after {0} attempts")]
    DegenerateSample(usize),
    #[error("embedding failed: {0}")]
    Embedding(String),
}

pub type Result<T> = std::result::Result<T, Error>;
