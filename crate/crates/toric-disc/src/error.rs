//! Error type shared across the workbench.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("configuration not 2-dimensional")]
    NotTwoDimensional,

    #[error("defective lattice span")]
    DefectiveLatticeSpan,

    #[error("point is not a vertex of the configuration")]
    NotAVertex,

    #[error("empty configuration")]
    EmptyConfiguration,

    #[error("duplicate point in configuration: ({0}, {1})")]
    DuplicatePoint(i64, i64),

    #[error("non-exact division, remainder leading term {0}")]
    InexactDivision(String),

    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("missing symbol in assignment: {0}")]
    MissingSymbol(String),

    #[error("no variable to eliminate")]
    NoVariableToEliminate,

    #[error("inputs not eta-homogeneous for a common eta")]
    NotEtaHomogeneous,

    #[error("lifting not generic, reseed")]
    NonGenericLifting,

    #[error("resultant extraction failed")]
    ResultantExtractionFailed,

    #[error("mm-form inconsistency: {0}")]
    MmFormInconsistency(String),

    #[error("boundary factorization violated")]
    FactorizationViolated,

    #[error("monomial input has no discriminant")]
    MonomialInput,

    #[error("support not translated to minimal exponent 0")]
    SupportNotNormalized,

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
