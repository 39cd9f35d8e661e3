use thiserror::Error;

use crate::cli::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("words must be nonempty")]
    EmptyWord,
    #[error("sums must have at least one summand")]
    EmptySum,
    #[error("generator indices start at 1")]
    ZeroGenerator,
    #[error("exponent must be at least 1 (the algebra has no unit)")]
    ZeroExponent,
    #[error("weights must be positive integers")]
    NonPositiveWeight,
    #[error("generator x{0} has no assigned weight")]
    UnassignedGenerator(u32),
    #[error("{0} is not a permutation of 1..n")]
    NotPermutation(String),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("degree must be at least {0}")]
    DegreeTooSmall(usize),
    #[error("product x^{0} x^{1} is not a scalar multiple of x^{2}")]
    NotScalarMultiple(usize, usize, usize),
    #[error(
        "evaluation inconclusive: no witness with weights <= {max_weight} for component {component}; raise --max-weight"
    )]
    InconclusiveEvaluation { component: usize, max_weight: u64 },
    #[error("structural and evaluation verdicts disagree")]
    VerdictMismatch,
    #[error(transparent)]
    Parse(#[from] ParseError),
}
