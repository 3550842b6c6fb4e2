use thiserror::Error;

/// Errors produced by parsing, linear algebra and analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("singular matrix (rank {rank})")]
    Singular { rank: usize },

    #[error("schema error at {path}: {msg}")]
    Schema { path: String, msg: String },

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("problem too large: n = {n} exceeds the supported limit {max}")]
    TooLarge { n: usize, max: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
