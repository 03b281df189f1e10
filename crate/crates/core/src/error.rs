use thiserror::Error;

/// Errors raised by the solvers and spectroscopy routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("convergence failure: {0}")]
    Convergence(String),
    #[error("root resolution failure: {0}")]
    Resolution(String),
    #[error("configuration error: {0}")]
    Configuration(String),
    #[error("state is not bound: eigenvalue {energy:e} J lies above the dissociation threshold {threshold:e} J")]
    NotBound { energy: f64, threshold: f64 },
    #[error("selection rule violated: {0}")]
    SelectionRule(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("invalid molecule description: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
