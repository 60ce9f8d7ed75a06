use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable lists differ")]
    VariableMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("not exactly divisible")]
    NotDivisible,
    #[error("the zero polynomial has no denominator vector")]
    ZeroPolynomial,
    #[error("interpolation failed: {0}")]
    Interpolation(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("vertex {0} is not a sink")]
    NotSink(u32),
    #[error("vertex {0} is neither a sink nor a source")]
    NotSinkOrSource(u32),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parameter {0} lies on an exceptional tube")]
    ExceptionalParameter(String),
    #[error("no rigid witness found for {0:?}")]
    NoWitness(Vec<i64>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
