use thiserror::Error;

/// Failure modes shared by every numerical routine in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The requested series or sum does not converge at this argument.
    #[error("divergent: {0}")]
    Divergence(String),
    /// A convergent sum did not reach the requested tolerance within budget.
    #[error("no convergence after {terms} terms: error bound {bound:e} exceeds tolerance {tol:e}")]
    Convergence { terms: usize, bound: f64, tol: f64 },
    /// A function evaluation produced NaN or an infinity.
    #[error("non-finite value: {0}")]
    NonFinite(String),
    /// A gas state whose regime and fugacity disagree.
    #[error("inconsistent state: {0}")]
    State(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn divergence(msg: impl Into<String>) -> Self {
        Error::Divergence(msg.into())
    }

    /// True for convergence and divergence failures, as opposed to bad input.
    pub fn is_summation_failure(&self) -> bool {
        matches!(self, Error::Divergence(_) | Error::Convergence { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
