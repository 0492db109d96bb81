use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent scale factor must be nonzero")]
    ZeroExponentScale,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial division is not exact")]
    NotExactDivision,

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition {
        parts: Vec<i64>,
        reason: &'static str,
    },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("word content is not a partition: letter {letter} occurs more often than {prev}")]
    NonPartitionContent { letter: u32, prev: u32 },

    #[error("series must have nonnegative exponents, found {0}")]
    NegativeExponent(i64),

    #[error("unsupported Weyl type {family}{rank}")]
    UnsupportedWeylType { family: String, rank: usize },

    #[error("group enumeration exceeded the budget of {budget} elements")]
    EnumerationBudget { budget: usize },

    #[error("no character value supplied for class {0}")]
    MissingCharacter(String),

    #[error("class average does not clear to integers (is the character valid?)")]
    NonIntegralAverage,
}
