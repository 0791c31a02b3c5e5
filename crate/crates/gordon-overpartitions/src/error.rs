use thiserror::Error;

/// Errors raised by constructors, bijections and series routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid object: {0}")]
    InvalidObject(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("successive rank {rank} of column {column} lies outside [{lo}, {hi}]")]
    RankOutOfRange { column: usize, rank: i64, lo: i64, hi: i64 },
    #[error("series error: {0}")]
    Series(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
