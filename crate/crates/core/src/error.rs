use thiserror::Error;

use crate::recognition::Witness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}: only simple graphs are supported")]
    Loop(usize),

    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("graph is not in the class: contains an induced {}", .0.kind)]
    NotInClass(Witness),

    #[error("graph has a matching of size four: {0:?}")]
    MatchingTooLarge(Vec<(usize, usize)>),

    #[error("structure violation during {stage}: {detail} (vertices {vertices:?})")]
    StructureViolation {
        stage: &'static str,
        detail: String,
        vertices: Vec<usize>,
    },

    #[error("exact solver exceeded its budget of {budget} search nodes")]
    BudgetExceeded { budget: u64 },

    #[error("oracle size guard exceeded: {what} is {actual}, limit {limit}")]
    SizeGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
}

impl Error {
    pub(crate) fn violation(stage: &'static str, detail: impl Into<String>, vertices: Vec<usize>) -> Self {
        Error::StructureViolation {
            stage,
            detail: detail.into(),
            vertices,
        }
    }

    /// True for errors caused by the caller's input rather than by a resource
    /// limit or an internal inconsistency.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::VertexOutOfRange { .. }
                | Error::Loop(_)
                | Error::OverlappingSets(_)
                | Error::Parse { .. }
                | Error::Precondition(_)
                | Error::MatchingTooLarge(_)
                | Error::SizeGuard { .. }
        )
    }
}
