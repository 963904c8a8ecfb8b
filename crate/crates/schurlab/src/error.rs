use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchurError {
    #[error("validation error: {0}")]
    Validation(String),
    #[error("scale exceeded: {0}")]
    ScaleExceeded(String),
    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("composition mismatch: {0}")]
    CompositionMismatch(String),
    #[error("triangularity failure: {0}")]
    TriangularityFailure(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("not in the Chevalley image: {0}")]
    NotInChevalleyImage(String),
    #[error("monomial unavailable: {0}")]
    MonomialUnavailable(String),
    #[error("representative dependence: {0}")]
    RepresentativeDependence(String),
    #[error("symmetry violation: {0}")]
    SymmetryViolation(String),
    #[error("non-integer value: {0}")]
    NonInteger(String),
    #[error("not stabilized: {0}")]
    NotStabilized(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
}

impl SchurError {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            SchurError::Validation(_)
            | SchurError::CompositionMismatch(_)
            | SchurError::NonInteger(_)
            | SchurError::NotInChevalleyImage(_) => 2,
            SchurError::ScaleExceeded(_) => 3,
            _ => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, SchurError>;
