use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("unsupported dimension {0}; only 2 and 3 are supported")]
    UnsupportedDimension(usize),

    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },

    #[error("non-finite value encountered")]
    NonFinite,

    #[error("zero vector has no defined polarization")]
    ZeroVector,

    #[error("target matrix is zero")]
    ZeroTarget,

    #[error("degenerate dyad parameters: {0}")]
    DegenerateParams(&'static str),

    #[error("m = {m} is not on the ladder of s = {s}")]
    InvalidLadder { s: f64, m: f64 },

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("hbar must be positive and finite, got {0}")]
    InvalidHbar(f64),

    #[error("plane wave needs k > 0 and w > 0 (got k = {k}, w = {w})")]
    InvalidPlaneWave { k: f64, w: f64 },

    #[error("sweep grid is empty: {0}")]
    EmptyGrid(String),

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },
}
