use thiserror::Error;

/// Errors raised by the library. Check failures are report content, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
