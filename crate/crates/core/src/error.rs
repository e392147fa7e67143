use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition `{0}`: parts must be weakly decreasing non-negative integers")]
    InvalidPartition(String),

    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("partition {partition} has length {len}, which exceeds n = {n}")]
    LengthExceeds { partition: String, len: usize, n: usize },

    #[error("the number of variables n must be at least 1")]
    ZeroVariables,

    #[error("power sum degree k must be at least 1")]
    ZeroPowerSum,

    #[error("skew shape {0} is empty")]
    EmptyShape(String),

    #[error("skew shape {0} is not connected")]
    Disconnected(String),

    #[error("invalid binary tableau: {0}")]
    InvalidTableau(String),

    #[error("polynomial arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial division is not exact")]
    NotDivisible,

    #[error("beta rescaling by degree {degree} leaves a negative beta exponent")]
    NegativeBetaExponent { degree: i64 },

    #[error("matrix is not square ({rows} rows, row of length {cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("coefficient {0} does not fit in a 64-bit integer")]
    CoefficientOverflow(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
