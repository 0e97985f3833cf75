use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is {nrows}x{ncols}, expected a square matrix")]
    NotSquare { nrows: usize, ncols: usize },

    #[error("length {len} exceeds the supported maximum of {max}")]
    TooLong { len: usize, max: usize },

    #[error("generator matrix has rank {rank} but {rows} rows")]
    NotFullRank { rows: usize, rank: usize },

    #[error("code has dimension 0 and no nonzero codeword")]
    ZeroCode,

    #[error("no two identical columns outside the information set")]
    NoIdenticalColumnPair,

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
