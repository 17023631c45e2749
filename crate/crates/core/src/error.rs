use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coefficient domain mismatch: {left} vs {right}")]
    DomainMismatch {
        left: &'static str,
        right: &'static str,
    },
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series is not invertible: constant term {0} is not a unit")]
    SingularSeries(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("n = {n} exceeds the enumeration cap {cap}; use the generating-function engine instead")]
    CapExceeded { n: usize, cap: usize },
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("truncation tail too large at order {order}; need N >= {required}")]
    TailBound { order: usize, required: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
