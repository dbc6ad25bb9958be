use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible conductors: {from} does not divide {to}")]
    IncompatibleConductors { from: u32, to: u32 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("zero matrix has no projective class")]
    ZeroMatrix,

    #[error("matrix is singular")]
    Singular,

    #[error("division by zero")]
    DivisionByZero,

    #[error("digit {digit} out of range for factor {factor} of dimension {dim}")]
    DigitOutOfRange { factor: usize, digit: usize, dim: usize },

    #[error("zero vector does not represent a state")]
    ZeroState,

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("gates do not commute projectively")]
    NotProjectivelyCommuting,

    #[error("not a root of unity: {0}")]
    NotRootOfUnity(String),

    #[error("operator relation failed: {0}")]
    RelationFailure(String),

    #[error("Hilbert function not polynomial in window starting at t = {start}")]
    HilbertNotPolynomial { start: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable snake_case name of the variant, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::IncompatibleConductors { .. } => "incompatible_conductors",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::ZeroMatrix => "zero_matrix",
            Error::Singular => "singular",
            Error::DivisionByZero => "division_by_zero",
            Error::DigitOutOfRange { .. } => "digit_out_of_range",
            Error::ZeroState => "zero_state",
            Error::InvalidBipartition(_) => "invalid_bipartition",
            Error::NotProjectivelyCommuting => "not_projectively_commuting",
            Error::NotRootOfUnity(_) => "not_root_of_unity",
            Error::RelationFailure(_) => "relation_failure",
            Error::HilbertNotPolynomial { .. } => "hilbert_not_polynomial",
            Error::Precondition(_) => "precondition",
            Error::Parse(_) => "parse",
        }
    }
}
