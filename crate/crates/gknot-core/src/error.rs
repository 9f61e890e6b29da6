use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

/// Every failure the library reports.
///
/// Domain failures (bad parameters, invalid data, exhausted budgets) and
/// internal consistency failures share one type; [`Error::kind`] gives a stable
/// identifier for machine-readable reports.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed group: {0}")]
    BadGroup(String),
    #[error("action does not have order m")]
    NotOrderM,
    #[error("action is not invertible")]
    NotInvertible,
    #[error("action minus identity is not invertible")]
    FixedPoints,
    #[error("elements or data belong to different groups")]
    GroupMismatch,
    #[error("malformed surface data: {0}")]
    BadShape(String),
    #[error("det(M - M^T) = {0}, expected 1")]
    NotSeifert(i64),
    #[error("the two forms of the colouring equation disagree")]
    InternalInconsistency,
    #[error("search needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("data does not end in a stabilised pair")]
    PatternMismatch,
    #[error("form is not unimodular and alternating")]
    NotSymplecticable,
    #[error("basis does not generate the group")]
    NonGenerating,
    #[error("lifted vector is not divisible by the factor order")]
    DivisibilityFailure,
    #[error("no integer lift of the action has order m modulo n^2")]
    LiftFailure,
    #[error("surface data is not a valid colouring")]
    InvalidData,
    #[error("unsupported m = {0}")]
    UnsupportedM(u32),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("group is not A4")]
    NotA4,
    #[error("integer overflow")]
    Overflow,
    #[error("malformed diagram: {0}")]
    BadDiagram(String),
}

impl Error {
    /// Stable identifier used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::BadGroup(_) => "BadGroup",
            Error::NotOrderM => "NotOrderM",
            Error::NotInvertible => "NotInvertible",
            Error::FixedPoints => "FixedPoints",
            Error::GroupMismatch => "GroupMismatch",
            Error::BadShape(_) => "BadShape",
            Error::NotSeifert(_) => "NotSeifert",
            Error::InternalInconsistency => "InternalInconsistency",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::NotUnimodular => "NotUnimodular",
            Error::PatternMismatch => "PatternMismatch",
            Error::NotSymplecticable => "NotSymplecticable",
            Error::NonGenerating => "NonGenerating",
            Error::DivisibilityFailure => "DivisibilityFailure",
            Error::LiftFailure => "LiftFailure",
            Error::InvalidData => "InvalidData",
            Error::UnsupportedM(_) => "UnsupportedM",
            Error::BadParameters(_) => "BadParameters",
            Error::NotA4 => "NotA4",
            Error::Overflow => "Overflow",
            Error::BadDiagram(_) => "BadDiagram",
        }
    }
}
