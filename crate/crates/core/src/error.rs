use std::fmt;

use thiserror::Error;

/// Which structural axiom of a graph with boundary was violated.
///
/// Variants are listed in the order `validate` checks them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ValidationKind {
    SelfLoop,
    AsymmetricWeight,
    NegativeWeight,
    NonpositiveMeasure,
    EmptyBoundary,
    BoundaryEdge,
    IsolatedBoundaryVertex,
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{kind:?}: {detail}")]
pub struct GraphValidationError {
    pub kind: ValidationKind,
    /// Offending vertex indices (one vertex, or the two endpoints of an edge).
    pub vertices: Vec<usize>,
    pub detail: String,
}

impl GraphValidationError {
    pub(crate) fn new(kind: ValidationKind, vertices: Vec<usize>, detail: impl fmt::Display) -> Self {
        Self { kind, vertices, detail: detail.to_string() }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    Validation(#[from] GraphValidationError),

    #[error("malformed graph file: {0}")]
    Format(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("vertex {0} is a boundary vertex; an interior vertex is required")]
    NotInterior(usize),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("graph is not unit-weight: {0}")]
    NotUnitWeight(String),

    #[error("graph is not normalized: {0}")]
    NotNormalized(String),

    #[error("Γ is identically zero around vertex {0}")]
    DegenerateGamma(usize),

    #[error("{0} is not an edge")]
    NotAnEdge(EdgeLabel),

    #[error("linear program is {0}")]
    Lp(&'static str),

    #[error("equality pattern not characterized: strict inequality at indices {0:?}")]
    EqualityPatternUnsupported(Vec<usize>),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeLabel(pub usize, pub usize);

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.0, self.1)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
