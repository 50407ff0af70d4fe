use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("tau entries must be nonzero (t_{index} = 0)")]
    ZeroTau { index: usize },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("insufficient data: need {needed} terms, have {available}")]
    InsufficientData { needed: usize, available: usize },

    #[error("Hankel determinant Delta_{0} vanishes; the sequence is not quasi-definite")]
    QuasiDefiniteFailure(usize),

    #[error("not in the positive case: t_{0} <= 0")]
    NotPositiveCase(usize),

    #[error("alpha_n(x) has a pole: x = s_{0}")]
    PoleAt(usize),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("support theorem hypotheses fail: {}", .failed.join("; "))]
    HypothesisFailure { failed: Vec<String> },

    #[error("weight is not integrable: endpoint exponent {0} <= -1")]
    NonIntegrable(f64),

    #[error("g is negative on the interval (g({at}) = {value})")]
    GNegative { at: f64, value: f64 },

    #[error("index pattern too short: need at least 3 indices, got {0}")]
    TooShort(usize),

    #[error("order {order} exceeds the enumeration cap {cap}")]
    OrderTooLarge { order: usize, cap: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
