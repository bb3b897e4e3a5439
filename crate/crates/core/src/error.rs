//! Error type shared by the numeric modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sample must contain at least one value")]
    EmptySample,
    #[error("value {0} lies outside [0, 1]; rescale the data first")]
    OutOfUnitInterval(f64),
    #[error("vectors have mismatched lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("{name} = {value} is outside the required range {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("sample size {n} is too small; need at least {min}")]
    SampleTooSmall { n: usize, min: usize },
    #[error("values are not sorted ascending at position {0}")]
    NotSorted(usize),
    #[error("iteration did not converge within {max_iter} steps (tolerance {tol})")]
    NoConvergence { max_iter: usize, tol: f64 },
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
