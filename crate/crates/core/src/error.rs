use thiserror::Error;

/// Errors surfaced by the exact toolkit.
///
/// Domain preconditions (wrong dimension, imprimitive input where a
/// primitive structure is required, ...) are reported as typed variants so
/// the CLI can map them onto exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("duplicate point at index {0}")]
    DuplicatePoint(usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("incompatible ambient ranks: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("face has dimension {0}, expected an edge of dimension 1")]
    NotAnEdge(usize),

    #[error("invalid Cayley structure: {0}")]
    InvalidStructure(String),

    #[error("imprimitive Cayley structure where a primitive one is required")]
    Imprimitive,

    #[error("operation requires degree {expected}, structure has degree {got}")]
    WrongDegree { expected: i64, got: i64 },

    #[error("operation requires length > 1; length-1 stabilizer is the one-dimensional torus")]
    LengthOne,

    #[error("permutation is not a stabilizer candidate")]
    NotAStabilizer,

    #[error("binary forms must be linear with pairwise distinct roots")]
    DegenerateForms,

    #[error("parametrization is not birational (map degree {0})")]
    NotBirational(usize),

    #[error("degenerate parameter persisted after {0} retries")]
    DegenerateParameter(usize),

    #[error("oracle limit exceeded: {0}")]
    OracleLimit(String),

    #[error("projection must kill exactly the lineality space")]
    BadProjection,

    #[error("object is not two-dimensional after projection")]
    NotPlanar,

    #[error("{0}")]
    Internal(String),
}
