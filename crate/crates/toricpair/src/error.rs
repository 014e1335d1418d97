//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ToricError {
    #[error("zero vector has no primitive representative")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cone is not strongly convex")]
    NotStronglyConvex,
    #[error("cone is not full-dimensional")]
    NotFullDimensional,
    #[error("point outside cone")]
    PointOutsideCone,
    #[error("point outside fan support")]
    PointOutsideFanSupport,
    #[error("point is not primitive")]
    NotPrimitive,
    #[error("fan supports differ")]
    SupportMismatch,
    #[error("fan support is not convex")]
    NonConvexSupport,
    #[error("not a valid fan: {0}")]
    InvalidFan(String),
    #[error("ideal has no exponents")]
    EmptyIdeal,
    #[error("exponent not in dual cone")]
    ExponentNotInDualCone,
    #[error("unit ideal: an exponent is the zero vector")]
    UnitIdeal,
    #[error("singular locus not contained in Z (offending face rays: {face})")]
    SingularLocusNotInZ { face: String },
    #[error("variety is not Q-Gorenstein")]
    NotQGorenstein,
    #[error("mld convention requires dim >= 2")]
    MldDimension,
    #[error("mld is finite; use the finite-mld check")]
    MldIsFinite,
    #[error("mld is -infinity; use check_negative_lognash")]
    MldIsMinusInfinity,
    #[error("ray not in resolution fan")]
    NotAFanRay,
    #[error("resolution budget exceeded")]
    ResolutionBudgetExceeded,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, ToricError>;
