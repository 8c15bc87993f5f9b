use thiserror::Error;

/// Errors produced by the library.
///
/// Violations found by validators are *data*, not errors; this type covers
/// genuine failures: malformed input, broken preconditions and the named
/// semantic failures of the path calculus.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed model or path input (parsing, dangling references, ...).
    #[error("parse error: {0}")]
    Parse(String),

    /// A structural precondition on an argument does not hold.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Face index outside `1..=dim`.
    #[error("face index out of range: {0}")]
    IndexOutOfRange(String),

    /// The path is not tame, so no tame presentation exists.
    #[error("path is not tame: {0}")]
    NotTame(String),

    /// Track extraction requires a non-constant path.
    #[error("constant path has no track")]
    ConstantPath,

    /// The presentation does not present the given track.
    #[error("not a presentation of the track: {0}")]
    NotATrackPresentation(String),

    /// The progress function violates the feasibility condition.
    #[error("infeasible progress function: {0}")]
    InfeasibleProgressFunction(String),

    /// Tamification requires a path of positive integer length.
    #[error("wrong length for tamification: {0}")]
    WrongLength(String),

    /// The operation requires a natural tame presentation.
    #[error("not a natural tame presentation: {0}")]
    NotNaturalTame(String),

    /// Equivalence testing requires two presentations of one path.
    #[error("presentations describe different paths: {0}")]
    DifferentPaths(String),

    /// A chain face requires a two-block partition of the stage axes.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Composition requires the target of one morphism to be the source
    /// of the other.
    #[error("source/target mismatch: {0}")]
    SourceTargetMismatch(String),

    /// Path assembly got a stage map that does not fit its cube.
    #[error("stage mismatch: {0}")]
    StageMismatch(String),

    /// The category has a non-identity endomorphism, so its nerve is not
    /// a finite complex of the expected shape.
    #[error("non-identity endomorphism detected: {0}")]
    EndomorphismDetected(String),

    /// A chain complex failed the boundary-squared check.
    #[error("boundary check failed: {0}")]
    BoundaryCheckFailed(String),

    /// I/O failure while reading or writing files.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
