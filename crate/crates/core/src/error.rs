use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("basis matrices are linearly dependent")]
    DependentBasis,

    #[error("bracket of basis elements {0} and {1} leaves the span")]
    NotClosed(usize, usize),

    #[error("matrix does not lie in the algebra")]
    NotInAlgebra,

    #[error("invalid flag: {0}")]
    InvalidFlag(String),

    #[error("flag ending at {dim} is not isotropic in dimension {q} (need at most {max})")]
    NonIsotropicFlag { dim: usize, q: usize, max: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("stabilizer is not commutative")]
    NonCommutative,

    #[error("sampling failed: {0}")]
    SamplingDegenerate(String),

    #[error("trace form is degenerate on the given subspace")]
    DegenerateTraceForm,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
