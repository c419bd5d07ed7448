use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("zeta function pole at s = 1")]
    Pole,

    #[error("overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("series truncation exceeded {terms} terms")]
    SeriesLimit { terms: usize },

    #[error("eigenvalue search did not converge, bracket [{lo}, {hi}]")]
    NoConvergence { lo: f64, hi: f64 },

    #[error("non-finite function value near x = {0}")]
    NonFinite(f64),

    #[error("expression is singular: {0}")]
    Singular(&'static str),
}

impl Error {
    /// True for failures of an iterative or truncated procedure, as opposed
    /// to rejected input.
    pub fn is_convergence(&self) -> bool {
        matches!(
            self,
            Error::SeriesLimit { .. } | Error::NoConvergence { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
