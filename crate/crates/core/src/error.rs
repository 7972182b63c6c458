use thiserror::Error;

/// Failure modes shared by every module of the crate.
///
/// Geometric degeneracies are values, not panics: callers such as the
/// explorer inspect them to decide whether to resample.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no projective class")]
    ZeroVector,
    #[error("cannot join a point with itself")]
    IdenticalPoints,
    #[error("cannot meet a line with itself")]
    IdenticalLines,
    #[error("projective map is singular")]
    SingularMap,
    #[error("triangle vertices are collinear")]
    DegenerateTriangle,

    #[error("points are not collinear")]
    NotCollinear,
    #[error("point at infinity where a finite point is required")]
    PointAtInfinity,
    #[error("ratio denominator vanishes")]
    DenominatorVanishes,
    #[error("point does not lie on the required side line or sits on a vertex")]
    SideMembershipViolated,
    #[error("general position violated: {0}")]
    GeneralPositionViolation(String),

    #[error("corresponding vertices coincide")]
    CoincidentVertexPair,
    #[error("corresponding sides lie on the same line")]
    CoincidentSidePair,
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
    #[error("degenerate construction: {0}")]
    DegenerateConstruction(String),

    #[error("point lies on a side line of the reference triangle")]
    OnSideLine,
    #[error("no valid sample after {0} attempts")]
    ExhaustedRetries(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
