use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a signed permutation: {0}")]
    InvalidPerm(String),

    #[error("flip size {k} out of range for a stack of {n} pancakes")]
    FlipOutOfRange { k: usize, n: usize },

    #[error("size mismatch: {left} vs {right} pancakes")]
    SizeMismatch { left: usize, right: usize },

    #[error("stack size must be at least {min}, got {n}")]
    SizeTooSmall { n: usize, min: usize },

    #[error("rotation offset {k} out of range for a sequence of length {len}")]
    RotationOutOfRange { k: usize, len: usize },

    #[error("stack {0} is not a checkpoint (stack of 2-clans or patchwork)")]
    NotFortuitousShape(String),

    #[error("extraction stuck in phase {phase}: greedy halted at {stack}")]
    ExtractionStuck { phase: usize, stack: String },

    #[error("extracted sequence has length {len}, expected {expected}")]
    WrongLength { len: usize, expected: usize },

    #[error("extracted sequence does not sort -I_{0}")]
    DoesNotSort(usize),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("no pattern family covers n = {0}")]
    UnsupportedN(usize),

    #[error("oracle supports 1 <= n <= {max}, got {n}")]
    OracleRange { n: usize, max: usize },

    #[error("search not applicable: {0}")]
    SearchPrecondition(String),

    #[error("unknown hint preset '{0}'")]
    UnknownPreset(String),

    #[error("parse error: {0}")]
    Parse(String),
}
