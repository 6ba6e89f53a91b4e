use thiserror::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("series division requires a nonzero constant term in the divisor")]
    SeriesDivisor,
    #[error("pole at n = {0}")]
    Pole(u64),
    #[error("degenerate distribution: zero variance")]
    DegenerateDistribution,
    #[error("no rational function of total degree <= {max_total_degree} matches the data")]
    NoFit { max_total_degree: usize },
    #[error("need at least {needed} data points, got {got}")]
    DegenerateData { needed: usize, got: usize },
    #[error(
        "enumerating n = {n} would visit {matchings} matchings; \
         call enumerate_matchings_unguarded to override"
    )]
    EnumerationGuarded { n: u32, matchings: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
