use thiserror::Error;

/// Errors raised by grid construction, envelope transforms, checks and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("grid dimension {0} is outside 1..=3")]
    BadDimension(usize),
    #[error("invalid grid axis {axis}: {reason}")]
    BadAxis { axis: usize, reason: String },
    #[error("expected {expected} values, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("NaN is not an extended real value")]
    NotANumber,
    #[error("-inf present but the function does not allow -inf")]
    NegInfNotAllowed,
    #[error("point set is empty")]
    EmptySet,
    #[error("point set lives on a different grid")]
    GridMismatch,
    #[error("fast transforms do not accept functions taking -inf")]
    NegInfUnsupported,
    #[error("function is identically +inf")]
    NonProper,
    #[error("kernel parameter k must be positive and finite, got {0}")]
    BadParameter(f64),
    #[error("no finite witness at index {0}")]
    NoWitness(usize),
    #[error("function has no finite values")]
    NoFiniteValues,
    #[error("function is not midpoint convex (violation {0:e})")]
    NotConvex(f64),
    #[error("lipschitz check needs finite values; index {0} is infinite")]
    InfiniteValue(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("samples violate the Lipschitz bound at pair ({0}, {1})")]
    LipschitzViolated(usize, usize),
    #[error("sample {0} does not lie on the grid")]
    SamplesOffGrid(usize),
    #[error("subdivision count {0} must be even and at least 4")]
    OddSubdivision(usize),
    #[error("set has zero diameter")]
    DegenerateDiameter,
    #[error("no grid point lies in the ball")]
    BallOffGrid,
    #[error("grid does not contain the origin as a node")]
    ZeroNotOnGrid,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
