use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("field order {order} exceeds the table limit {limit}")]
    OrderTooLarge { order: u64, limit: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("{what} needs {count} items, above the limit {limit}")]
    TooLarge {
        what: &'static str,
        count: u128,
        limit: u64,
    },
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("{b} does not divide {m}")]
    NotDivisible { b: usize, m: usize },
    #[error("subspace of dimension {dim} does not fit a thick column of width {b}")]
    DimensionTooLarge { dim: usize, b: usize },
    #[error("block {0} appears more than once")]
    DuplicateBlock(usize),
    #[error("blocks have mixed dimensions ({0} and {1})")]
    MixedDimensions(usize, usize),
    #[error("generator has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("no recovery set exists for {0}")]
    NoRecovery(String),
    #[error("input is not consistent with any codeword: {0}")]
    Inconsistent(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
