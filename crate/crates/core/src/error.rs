use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("algebra dimension {0} outside supported range 1..=16")]
    DimensionOutOfRange(usize),

    #[error("context mismatch: Cl_{left} vs Cl_{right}")]
    ContextMismatch { left: usize, right: usize },

    #[error("blade index {blade:#b} does not fit in Cl_{dim}")]
    BladeOutOfRange { blade: u32, dim: usize },

    #[error("expected a grade-1 element")]
    NotAVector,

    #[error("zero vector has no inverse")]
    ZeroVector,

    #[error("operation requires {0}")]
    Unsupported(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("singular point: {0}")]
    Singular(String),

    #[error("point {0} is too close to a pole of the transformation")]
    Pole(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("kernel ansatz has no solution for n={n}, k={k}")]
    UnsolvableAnsatz { n: usize, k: usize },

    #[error("quadrature rule does not match: {0}")]
    RuleMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
