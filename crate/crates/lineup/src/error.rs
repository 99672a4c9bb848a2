use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("mismatched parameters: {0}")]
    MismatchedParams(String),
    #[error("lineup length r={r} exceeds the configuration count D={d_total}")]
    LineupTooLong { r: u32, d_total: u128 },
    #[error("expected a fermionic configuration, got {0}")]
    NotFermionic(String),
    #[error("invalid configuration string `{0}`: {1}")]
    BadConfiguration(String, String),
    #[error("invalid weight vector: {0}")]
    BadWeights(String),
    #[error("stability lift out of range: {0}")]
    LiftOutOfRange(String),
    #[error("oracle size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("spectrum rejected: {0}")]
    BadSpectrum(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
