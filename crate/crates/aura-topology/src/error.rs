use thiserror::Error;

/// Failures surfaced by fallible operations.
///
/// Structural defects found by the validators (`Topology::validate`,
/// `validate_scope`, `SpaceMap::validate`) are *data*, not errors; they are
/// reported through violation lists and only turn into
/// [`AuraError::InvalidSpace`] when a caller insists on constructing a
/// validated value from defective parts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuraError {
    #[error("universe must contain at least one point")]
    EmptyUniverse,

    #[error("universe of {n} points exceeds the {max}-point limit for {operation}")]
    UniverseTooLarge {
        n: usize,
        max: usize,
        operation: &'static str,
    },

    #[error("scope assigns {got} auras to a universe of {expected} points")]
    ScopeLengthMismatch { expected: usize, got: usize },

    #[error("invalid aura space: {0} violation(s); first: {1}")]
    InvalidSpace(usize, String),

    #[error("map is not totally defined over consistent universes")]
    InvalidMap,

    #[error("composition requires the inner map's target to equal the outer map's source")]
    SpaceMismatch,

    #[error("both spaces must share one topology")]
    TopologyMismatch,

    #[error("aura of point {point} is not contained in the aura it refines")]
    NotARefinement { point: usize },

    #[error("cannot quarantine point {point}: its singleton is not open")]
    QuarantineNotOpen { point: usize },

    #[error("unknown open-set class `{0}`")]
    UnknownClass(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("fixture `{0}` is a {1}, not a {2}")]
    FixtureKindMismatch(String, &'static str, &'static str),

    #[error("family closure exceeded {cap} open sets")]
    FamilyCapExceeded { cap: usize },

    #[error("deployment produces no grid points")]
    EmptyGrid,

    #[error("deployment contains a non-finite coordinate")]
    NonFiniteCoordinate,

    #[error("invalid deployment: {0}")]
    InvalidDeployment(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}
