use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("rank mismatch: expected n = {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("element is not in W_A: {0}")]
    NotInWA(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("the long-root multiplicity k must be nonzero")]
    ZeroMultiplicity,

    #[error("algebra contexts differ")]
    ContextMismatch,

    #[error("element is not in the type-D subalgebra")]
    NotInHD,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("module shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("character is not in the orbit of the module's character")]
    NotInOrbit,

    #[error("module relations violated: {0}")]
    RelationViolated(String),

    #[error("hypotheses not satisfied: {0}")]
    Hypothesis(String),

    #[error("inexact division by a linear form")]
    InexactDivision,

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

pub type Result<T, E = HeckeError> = std::result::Result<T, E>;
