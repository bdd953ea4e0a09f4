//! Error types shared by the evaluation layers.

use thiserror::Error;

/// Errors surfaced by kernel and special-function evaluations.
///
/// `NaN` is never returned as a value; every failure path is one of these
/// variants so callers can distinguish domain problems from accuracy loss.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum EvalError {
    /// Argument within `tol` of a pole of the evaluated function.
    #[error("argument {arg} within {tol:e} of a pole of {what}")]
    PoleAtArgument { what: &'static str, arg: String, tol: f64 },

    /// The quadrature/series tail at the configured cutoff exceeds the
    /// requested relative error.
    #[error("{what}: tail estimate {tail:e} exceeds target {target:e}")]
    NonConvergence { what: &'static str, tail: f64, target: f64 },

    /// Input outside the admissible domain of the operation.
    #[error("domain error in {what}: {detail}")]
    Domain { what: &'static str, detail: String },

    /// The evaluation branch needed for these inputs is not available
    /// (e.g. pure-series kernel branch beyond its convergence zone).
    #[error("branch unavailable in {what}: {detail}")]
    BranchUnavailable { what: &'static str, detail: String },

    /// Grid too coarse for the certified finite-difference order.
    #[error("grid too coarse for {what}: {detail}")]
    GridTooCoarse { what: &'static str, detail: String },

    /// Spectral parameter inside an exclusion zone of the construction.
    #[error("spectral parameter {lambda} within {radius} of excluded point {point}")]
    ExclusionZone { lambda: String, point: String, radius: f64 },

    /// Singular linear system; for `1 + K` solves this is the
    /// near-resonance detection signal.
    #[error("singular matrix in {what}")]
    SingularMatrix { what: &'static str },
}

impl EvalError {
    pub(crate) fn domain(what: &'static str, detail: impl Into<String>) -> Self {
        EvalError::Domain { what, detail: detail.into() }
    }
}
