use thiserror::Error;

/// Errors surfaced by the library.
///
/// Structural validation of algebras, modules and crossed modules does not
/// go through this type; validators return a report value instead, so a
/// failing axiom can be inspected rather than caught.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("linear system has no solution")]
    NoSolution,

    #[error("denominator subspace is not contained in the numerator")]
    NotContained,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("the given span is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("cochain is not a cocycle (d·c ≠ 0)")]
    NotACocycle,

    #[error("section is invalid: {0}")]
    SectionInvalid(String),

    #[error("linear map is not a module map")]
    NotModuleMap,

    #[error("linear map is not a Lie algebra homomorphism")]
    NotAHomomorphism,

    #[error("no η with ^α(x) d = δ(η(x)): the class is not g/h-fixed")]
    EtaUnsolvable,

    #[error("no γ with δ¹γ = f|_(h∧h): the class is not in H²(g,M)₁")]
    GammaUnsolvable,

    #[error("no F with δF = the derivation defect: the input is not a derivation class")]
    FUnsolvable,

    #[error("validation failed: {0}")]
    ValidationFailed(String),

    #[error("parse error at line {line}, column {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, col: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line,
            col,
            message: message.into(),
        }
    }
}
