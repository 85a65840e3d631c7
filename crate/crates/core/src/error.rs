use thiserror::Error;

/// Geometric and precondition failures raised by the model.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate homogeneous coordinates")]
    DegenerateCoordinates,
    #[error("join of equal points")]
    JoinOfEqualPoints,
    #[error("meet of equal lines")]
    MeetOfEqualLines,
    #[error("cotransitivity requires apart alternatives")]
    CotransitivityNotApart,
    #[error("axiom C7 hypothesis violated: {0}")]
    C7Hypothesis(&'static str),
    #[error("base points must be apart")]
    BasePointsEqual,
    #[error("invalid base data: C is not on AB")]
    BaseNotCollinear,
    #[error("C must be apart from base points")]
    CAtBasePoint,
    #[error("invalid auxiliary selection: {}", .0.join(", "))]
    InvalidSelection(Vec<String>),
    #[error("cross ratio requires collinear points")]
    NotCollinear,
    #[error("cross ratio undefined: {0}")]
    CrossRatioUndefined(&'static str),
    #[error("degenerate quadrangle: {0}")]
    DegenerateQuadrangle(&'static str),
    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(&'static str),
    #[error("triangles are not distinct")]
    TrianglesNotDistinct,
    #[error("triangles are not perspective from {0}")]
    NotPerspective(&'static str),
    #[error("invalid trial configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("generator gave up after {0} attempts: {1}")]
    GeneratorExhausted(usize, &'static str),
    #[error("invalid rational: {0:?}")]
    InvalidRational(String),
    #[error("invalid homogeneous triple: {0:?}")]
    InvalidTriple(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
