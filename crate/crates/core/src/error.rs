//! Error type shared by every module.

use alloc::string::String;

/// Failure modes of the numerical routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{op}: invalid argument: {msg}")]
    Domain { op: &'static str, msg: String },
    /// The point lies on the cut `[0, inf)`.
    #[error("{op}: z = {re} + {im}i lies on the cut [0, inf)")]
    Branch { op: &'static str, re: f64, im: f64 },
    /// An iterative or adaptive method did not reach its tolerance.
    #[error("{op}: no convergence (achieved error estimate {estimate:e})")]
    NonConvergence { op: &'static str, estimate: f64 },
    /// A denominator vanished.
    #[error("{op}: pole or vanishing denominator: {msg}")]
    Pole { op: &'static str, msg: String },
    /// The requested representation does not exist for these parameters.
    #[error("{op}: degenerate case: {msg}")]
    Degenerate { op: &'static str, msg: String },
    /// Recurrence coefficients incompatible with a positive measure.
    #[error("{op}: measure consistency violated at n = {n}: gamma = {value:e}")]
    Positivity { op: &'static str, n: usize, value: f64 },
    /// Polynomial degree exceeds what the routine supports.
    #[error("{op}: degree {degree} exceeds the limit {limit}")]
    DegreeOverflow {
        op: &'static str,
        degree: usize,
        limit: usize,
    },
}

impl Error {
    pub(crate) fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain {
            op,
            msg: msg.into(),
        }
    }

    pub(crate) fn pole(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Pole {
            op,
            msg: msg.into(),
        }
    }

    pub(crate) fn degenerate(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Degenerate {
            op,
            msg: msg.into(),
        }
    }

    /// True for errors caused by the caller's arguments rather than by the numerics.
    pub fn is_invalid_input(&self) -> bool {
        matches!(
            self,
            Error::Domain { .. } | Error::Branch { .. } | Error::DegreeOverflow { .. }
        )
    }

    /// Name of the operation that failed.
    pub fn operation(&self) -> &'static str {
        match self {
            Error::Domain { op, .. }
            | Error::Branch { op, .. }
            | Error::NonConvergence { op, .. }
            | Error::Pole { op, .. }
            | Error::Degenerate { op, .. }
            | Error::Positivity { op, .. }
            | Error::DegreeOverflow { op, .. } => op,
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
