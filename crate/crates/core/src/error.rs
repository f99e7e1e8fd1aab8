use thiserror::Error;

/// Failures raised anywhere along the polar pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation requires a non-empty point set")]
    Empty,

    #[error("polytope is lower-dimensional")]
    LowerDimensional,

    #[error("convex hull is not full-dimensional")]
    NotFullDimensional,

    #[error("origin is not an interior point of the convex hull")]
    OriginNotInterior,

    #[error("facet with normal {normal:?} is parallel to the x_n-axis")]
    VerticalFacet { normal: Vec<String> },

    #[error(
        "facet with normal {normal:?} and offset {offset} has non-integral graph coefficients"
    )]
    NonIntegerCoefficient { normal: Vec<String>, offset: String },

    #[error("realized lattice set is not convex (saturation adds points)")]
    NotConvex,

    #[error("halfspace system does not bound a polytope")]
    Unbounded,

    #[error("function domain is empty")]
    EmptyDomain,

    #[error("no vertex/conjugate pair has a positive inner product")]
    LambdaUndefined,

    #[error("not a member of the C-class: {0}")]
    NotCClass(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("random generation exhausted after {attempts} attempts")]
    GenerationExhausted { attempts: usize },
}

impl Error {
    /// Stable identifier for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::Empty => "Empty",
            Error::LowerDimensional => "LowerDimensional",
            Error::NotFullDimensional => "NotFullDimensional",
            Error::OriginNotInterior => "OriginNotInterior",
            Error::VerticalFacet { .. } => "VerticalFacet",
            Error::NonIntegerCoefficient { .. } => "NonIntegerCoefficient",
            Error::NotConvex => "NotConvex",
            Error::Unbounded => "Unbounded",
            Error::EmptyDomain => "EmptyDomain",
            Error::LambdaUndefined => "LambdaUndefined",
            Error::NotCClass(_) => "NotCClass",
            Error::InvalidConfig(_) => "InvalidConfig",
            Error::GenerationExhausted { .. } => "GenerationExhausted",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
