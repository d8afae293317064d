use thiserror::Error;

/// Errors produced anywhere in the construction pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdoError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("kernel of the first map is not contained in the kernel of the second")]
    KernelNotContained,

    #[error("not nilpotent: {0}")]
    NotNilpotent(String),

    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("ideal is zero")]
    ZeroIdeal,

    #[error("linear map is not a Lie homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("{what} has dimension {dim}, above the budget of {budget}")]
    BudgetExceeded {
        what: String,
        dim: usize,
        budget: usize,
    },

    #[error("no kernel-distinguishing tensor power found up to k = {max_power} (space budget {budget})")]
    TensorBudgetExceeded { max_power: usize, budget: usize },

    #[error("representations are defined on different algebras")]
    AlgebraMismatch,

    #[error("element is not central: {0}")]
    NotCentral(String),

    #[error("cocycle has a nonzero kernel")]
    DegenerateCocycle,

    #[error("map does not satisfy the cocycle identity on basis pair ({0}, {1})")]
    NotACocycle(usize, usize),

    #[error("invalid grading: {0}")]
    InvalidGrading(String),

    #[error("elements are not linearly independent")]
    NotLinearlyIndependent,

    #[error("separator returned a representation vanishing on the requested element")]
    SeparatorFailed,

    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown example `{0}`")]
    UnknownExample(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

impl AdoError {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            AdoError::DimensionMismatch(_) => "DimensionMismatch",
            AdoError::KernelNotContained => "KernelNotContained",
            AdoError::NotNilpotent(_) => "NotNilpotent",
            AdoError::NotAnIdeal(_) => "NotAnIdeal",
            AdoError::ZeroIdeal => "ZeroIdeal",
            AdoError::NotAHomomorphism(_) => "NotAHomomorphism",
            AdoError::BudgetExceeded { .. } => "BudgetExceeded",
            AdoError::TensorBudgetExceeded { .. } => "TensorBudgetExceeded",
            AdoError::AlgebraMismatch => "AlgebraMismatch",
            AdoError::NotCentral(_) => "NotCentral",
            AdoError::DegenerateCocycle => "DegenerateCocycle",
            AdoError::NotACocycle(..) => "NotACocycle",
            AdoError::InvalidGrading(_) => "InvalidGrading",
            AdoError::NotLinearlyIndependent => "NotLinearlyIndependent",
            AdoError::SeparatorFailed => "SeparatorFailed",
            AdoError::InvalidAlgebra(_) => "InvalidAlgebra",
            AdoError::Parse(_) => "ParseError",
            AdoError::UnknownExample(_) => "UnknownExample",
            AdoError::VerificationFailed(_) => "VerificationFailed",
        }
    }
}

pub type Result<T> = std::result::Result<T, AdoError>;
