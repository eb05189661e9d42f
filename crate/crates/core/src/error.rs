use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("bilinear form is not symmetric")]
    NotSymmetric,
    #[error("operation requires dimension 4")]
    DimNot4,
    #[error("matrix is singular")]
    Singular,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("endomorphism is not tangent to the fiber")]
    NotTangent,
    #[error("point is not on the hyperboloid")]
    NotOnHyperboloid,
    #[error("2-form is degenerate")]
    DegenerateOmega,
    #[error("endomorphism is not a product structure")]
    NotProductStructure,
    #[error("metric does not have neutral signature")]
    BadSignature,
    #[error("structure is not compatible with the generalized metric")]
    NotCompatible,
    #[error("pair is not a pair of compatible paracomplex structures")]
    InvalidPair,
    #[error("metric is not given in a null frame")]
    WrongMetricFrame,
    #[error("vertical data does not anticommute with the structure")]
    NotVertical,
    #[error("metric is degenerate")]
    DegenerateMetric,
    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
