use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable '{name}' at position {pos} (expected x, y or z)")]
    UnknownVariable { pos: usize, name: char },
    #[error("empty generator list")]
    EmptyIdeal,
    #[error("ideal is not m-primary inside m^2: {0}")]
    NotArtinian(String),
    #[error("dim_k R = {dim} exceeds the configured cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("{n} generators exceed the Taylor complex cap {cap}")]
    TaylorCap { n: usize, cap: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("ideal is not generic")]
    NonGeneric,
    #[error("characteristic 2 is not supported")]
    Characteristic2,
    #[error("no Bass series for class {0}")]
    UnsupportedClass(String),
    #[error("family constraint violated: {0}")]
    FamilyConstraint(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("sampling budget exhausted after {0} attempts")]
    SamplingBudget(usize),
    #[error("corpus line {line}: {message}")]
    Corpus { line: usize, message: String },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
