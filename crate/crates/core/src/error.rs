use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid symbol {0:?}: words use a-z for generators and A-Z for inverses")]
    BadSymbol(char),
    #[error("symbol {symbol:?} is outside rank {rank}")]
    SymbolOutsideRank { symbol: char, rank: u32 },
    #[error("generator {generator} is outside rank {rank}")]
    GeneratorOutOfRange { generator: u32, rank: u32 },
    #[error("rank must be between 1 and 26, got {0}")]
    InvalidRank(u32),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u32, u32),
    #[error("empty word")]
    EmptyWord,
    #[error("word {0:?} is not cyclically reduced")]
    NotCyclicallyReduced(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("exponent {exponent} does not exceed the move threshold {threshold}")]
    BelowThreshold { exponent: usize, threshold: String },
    #[error("factorization does not describe the word it is applied to")]
    StaleFactorization,
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("witness identity failed: expected {expected:?}, got {actual:?}")]
    WitnessMismatch { expected: String, actual: String },
    #[error("the identity has no axis")]
    IdentityAxis,
    #[error("invalid mapping: {0}")]
    BadMapping(String),
    #[error("limit word does not exist: {0}")]
    NoLimit(String),
    #[error("{0} out of domain: {1}")]
    OutOfDomain(&'static str, f64),
    #[error("malformed record: {0}")]
    BadRecord(String),
}
