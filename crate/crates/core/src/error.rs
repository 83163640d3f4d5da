//! Error type shared across the crate.
//!
//! Every fallible operation reports which input violated which constraint;
//! the command-line layer forwards these messages verbatim, so they are
//! written to be meaningful to an end user, not just to a developer.

use thiserror::Error;

/// Errors produced by parameter validation and numeric evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter failed its validity constraint. `field` names the
    /// offending input and `constraint` states the rule it broke.
    #[error("invalid `{field}`: {constraint}")]
    InvalidParameter {
        field: &'static str,
        constraint: String,
    },

    /// A mathematically undefined evaluation was requested (negative
    /// argument under a square root, Lambert W outside its branch domain).
    #[error("domain error in {context}: {message}")]
    Domain {
        context: &'static str,
        message: String,
    },

    /// Two vectors that must have equal length do not.
    #[error("dimension mismatch: left vector has {left} components, right vector has {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A mesh was requested with fewer than 2 vertices per side.
    #[error("mesh size must be at least 2 vertices per side, got m = {m}")]
    MeshTooSmall { m: usize },

    /// A mesh without cells cannot support adjacency counting.
    #[error("degenerate mesh: {message}")]
    DegenerateMesh { message: String },

    /// A sampling range that cannot produce a strictly increasing grid.
    #[error("degenerate range: {message}")]
    DegenerateRange { message: String },

    /// An iterative solver failed to converge. Unreachable on the documented
    /// input domains; reported rather than panicking so callers can surface
    /// the context.
    #[error("{context} did not converge within {iterations} iterations")]
    NoConvergence {
        context: &'static str,
        iterations: usize,
    },
}

impl Error {
    /// Shorthand for an [`Error::InvalidParameter`]. Public so layers that
    /// compose these models (scenario files, command-line overrides) can
    /// report their own input violations in the same shape.
    pub fn invalid(field: &'static str, constraint: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field,
            constraint: constraint.into(),
        }
    }

    /// Shorthand for an [`Error::Domain`].
    pub(crate) fn domain(context: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            context,
            message: message.into(),
        }
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
