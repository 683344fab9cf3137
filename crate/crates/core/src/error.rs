use thiserror::Error;

/// Errors raised by the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sign of zero undefined")]
    SignOfZero,

    #[error("{0} is undefined for zero")]
    ZeroArgument(&'static str),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("place {place} is not a real embedding of a degree {degree} field")]
    InvalidPlace { place: usize, degree: usize },

    #[error("d = {0} must be a squarefree integer >= 2")]
    NotSquarefree(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),

    #[error("isotropic reflection vector")]
    IsotropicVector,

    #[error("matrix does not preserve the quadratic form")]
    NotIsometry,

    #[error("determinant is -1, expected a special isometry")]
    NotSpecial,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("form is not admissible")]
    NotAdmissible,

    #[error("Θ-data available only for Q and Q(sqrt 5)")]
    ThetaDataUnavailable,

    #[error("insufficient precision: rounding residual {0}")]
    InsufficientPrecision(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that signal a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_) | Error::InsufficientPrecision(_))
    }

    pub(crate) fn parse(what: &'static str, input: &str) -> Self {
        Error::Parse {
            what,
            input: input.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
