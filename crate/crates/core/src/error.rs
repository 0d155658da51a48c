use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operator index {index} out of range for {n} variables (expected 1..={max})", max = n.saturating_sub(1))]
    IndexOutOfRange { index: usize, n: usize },

    #[error("division by x_{i} - x_{next} left a nonzero remainder", next = i + 1)]
    NonzeroRemainder { i: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("part {part} exceeds grid size {n}")]
    PartTooLarge { part: u32, n: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("move {mv} is not legal on {vector:?}")]
    IllegalMove { mv: String, vector: Vec<u32> },

    #[error("invalid move indices i={i}, j={j} for length {n}")]
    InvalidMoveIndices { i: usize, j: usize, n: usize },

    #[error("filling already has weight alpha")]
    AlreadyAtAlpha,

    #[error("not a partition: {0:?}")]
    NotPartition(Vec<u32>),

    #[error("sums differ: {left} vs {right}")]
    SumMismatch { left: u64, right: u64 },

    #[error("invalid permutation: {0:?}")]
    InvalidPermutation(Vec<u32>),

    #[error("{u:?} is not below {v:?} in the Bruhat order")]
    NotBruhatBelow { u: Vec<u32>, v: Vec<u32> },

    #[error("empty generator set")]
    EmptyPolytope,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
