use thiserror::Error;

/// Error type shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported rank: {0}")]
    UnsupportedRank(String),

    #[error("coordinate list has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    /// Weight coordinates must be all integers or all half-integers.
    #[error("mixed coordinate parity: a weight must have all integer or all half-integer entries")]
    MixedParity,

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("graded profiles have different parities; direct sums must be purely even or purely odd")]
    ParityMismatch,

    /// s(W) requires a nonzero signed Euler characteristic.
    #[error("signed Euler characteristic is zero; s(W) is undefined")]
    ZeroEuler,

    #[error("projected orbit count {projected} exceeds ceiling {ceiling}; use the harmonic route for weights of shape (m)")]
    OrbitCeiling { projected: String, ceiling: u64 },

    #[error("limit exceeded: {0}")]
    LimitExceeded(String),

    /// A mathematical identity the implementation relies on failed to hold.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
