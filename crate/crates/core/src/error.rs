use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: &'static str, reason: String },

    #[error("malformed animal: {0}")]
    MalformedAnimal(String),

    #[error("oracle refused: predicted output {predicted:.3e} exceeds cap {cap}")]
    OracleCap { predicted: f64, cap: u64 },

    #[error("inconsistent Eden code at bit {index}: {reason}")]
    Decode { index: usize, reason: String },

    #[error("bound is vacuous: {0}")]
    Vacuous(String),

    #[error("formula inapplicable: {0}")]
    Inapplicable(String),

    #[error("unknown expansion `{name}` (known: {known})")]
    UnknownExpansion { name: String, known: String },

    #[error("box too large: {cells} cells exceeds the cap of {cap}")]
    BoxTooLarge { cells: u128, cap: u64 },

    #[error("cache error: {0}")]
    Cache(String),

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidArgument {
        name,
        reason: reason.into(),
    }
}
