use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot adjoin the square root of zero")]
    DegenerateExtension,

    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("position {position} out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("permutation {0} is not in the subgroup generated by the t_i")]
    NotInSubgroup(String),

    #[error("operation not supported in this mode: {0}")]
    UnsupportedMode(&'static str),

    #[error("invalid word {0:?}: letters must be 1 or 2")]
    InvalidWord(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid scalar literal {literal:?}: {reason}")]
    InvalidLiteral { literal: String, reason: String },

    #[error("braiding is not of diagonal type (b^2 != ae)")]
    NotDiagonal,

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),
}
