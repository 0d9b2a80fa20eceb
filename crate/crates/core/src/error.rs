use thiserror::Error;

/// Errors produced by the coloring, structure and search operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid pair {{{x},{y}}} on {n} vertices")]
    InvalidPair { x: usize, y: usize, n: usize },

    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("dimension mismatch: {left} vs {right} vertices")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{what} needs at least {min} vertices, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("invalid vertex subset: {0}")]
    InvalidSubset(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),

    #[error("invalid length: {0}")]
    InvalidLength(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("search budget exceeded: {0}")]
    Budget(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
