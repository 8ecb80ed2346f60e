use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational literal {0:?}")]
    MalformedRational(String),

    #[error("zero denominator in rational literal {0:?}")]
    ZeroDenominator(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A Pochhammer factor or other denominator vanishes at the requested parameters.
    #[error("resonant parameters: {0}")]
    Resonant(String),

    #[error("cannot evaluate a negative power of x at 0")]
    EvalAtZero,

    #[error("operators act with different q ({0} vs {1})")]
    MismatchedQ(String, String),

    #[error("singular transformation: {0}")]
    Singular(String),

    #[error("degenerate bilinear form: weight w_{0} vanishes")]
    ZeroWeight(usize),

    #[error("degenerate data: {0}")]
    Degenerate(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
