use clawcolor::{Error, Witness};
use thiserror::Error;

/// A failed command, carrying its exit code.
#[derive(Debug, Error)]
pub enum Failure {
    #[error("not in the class: induced {} on vertices {:?}", .0.kind, .0.vertices)]
    NotInClass(Witness),
    #[error("outside the supported class: {0}")]
    Unsupported(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Resource(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::NotInClass(_) | Failure::Unsupported(_) => 1,
            Failure::Input(_) => 2,
            Failure::Resource(_) => 3,
            Failure::Internal(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInClass(w) => Failure::NotInClass(w),
            Error::MatchingTooLarge(_) => Failure::Unsupported(e.to_string()),
            Error::BudgetExceeded { .. } | Error::SizeGuard { .. } => Failure::Resource(e.to_string()),
            Error::StructureViolation { .. } => Failure::Internal(e.to_string()),
            other if other.is_input_error() => Failure::Input(other.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}
