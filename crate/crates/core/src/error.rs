use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid objective matrix: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("input contains duplicate solutions {first} and {second}; deduplicate first")]
    Duplicates { first: usize, second: usize },

    #[error("inconsistent data: {0}")]
    Consistency(String),

    #[error("index {index} out of range for capacity {capacity}")]
    Index { index: usize, capacity: usize },

    #[error("invalid bitset capacity 0")]
    InvalidCapacity,

    #[error("dominance sets need {required} bytes, above the cap of {cap} bytes")]
    Capacity { required: u64, cap: u64 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid generator spec: {0}")]
    Spec(String),

    #[error("unknown algorithm {0:?} (expected ro, rs, ens-ss, ens-bs or naive)")]
    UnknownAlgorithm(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
