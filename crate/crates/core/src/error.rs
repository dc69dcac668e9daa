use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration of 2^{log2_size} words exceeds the cap of 2^{cap}")]
    CapExceeded { log2_size: u64, cap: u32 },

    #[error("minimum distance of the zero-dimensional code is undefined")]
    EmptyCode,

    #[error("MacWilliams transform produced a non-integral or negative coefficient: {0}")]
    NonIntegerResult(String),

    #[error("invalid Reed-Muller order: r={r}, m={m}")]
    InvalidOrder { r: i64, m: i64 },

    #[error("mismatched block lengths: {left} vs {right}")]
    MismatchedLength { left: usize, right: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("RM({r},{m}) does not contain its dual RM({dual_r},{m})")]
    NotSelfDualNested { r: u32, m: u32, dual_r: i64 },

    #[error("word {word} is not in the code space")]
    NotInCodespace { word: String },

    #[error("generator matrix is not full row rank (rank {rank} < {rows} rows)")]
    RankDeficient { rank: usize, rows: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
