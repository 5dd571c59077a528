use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot mirror the zero polynomial")]
    MirrorOfZero,

    #[error("expected an even-length sequence, got length {0}")]
    OddLength(usize),

    #[error("sequence must not be empty")]
    EmptySequence,

    #[error("sequence too short: need at least {min} terms, got {got}")]
    TooShort { min: usize, got: usize },

    #[error("sequence too long: at most {max} terms supported, got {got}")]
    TooLong { max: usize, got: usize },

    #[error("coefficient {value} out of range: {reason}")]
    BadCoefficient { value: i64, reason: &'static str },

    #[error("rational {0} is not greater than 1")]
    NotGreaterThanOne(String),

    #[error("invalid rational: {0}")]
    InvalidRational(String),

    #[error("invalid vertex {vertex} for a polygon with {n} vertices: {reason}")]
    InvalidVertex {
        vertex: usize,
        n: usize,
        reason: &'static str,
    },

    #[error("degenerate annulus: {0}")]
    DegenerateAnnulus(String),

    #[error("operation requires a {expected} annulus")]
    WrongAnnulusKind { expected: &'static str },

    #[error("model violation: {0}")]
    ModelViolation(String),

    #[error("matrix dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("matrix is not square")]
    NotSquare,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
