use thiserror::Error;

use crate::exactalg::Var;

/// Errors raised by the algebra, combinatorics and SNF layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("undefined gcd")]
    UndefinedGcd,
    #[error("zero polynomial has no monic form")]
    ZeroPolynomial,
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(Var, Var),
    #[error("t below length: t = {t}, length = {len}")]
    TBelowLength { t: usize, len: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("malformed index set: {0}")]
    MalformedIndexSet(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("minor gcd chain violated at k = {0}")]
    MinorChainViolated(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("inner shape {inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },
}

pub type Result<T> = std::result::Result<T, Error>;
