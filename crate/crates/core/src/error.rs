use thiserror::Error;

use crate::multilinear::MapError;
use crate::scalars::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("object has no dual: {0}")]
    NoDual(String),
    #[error("not quasitriangular: {0}")]
    NotQuasitriangular(String),
    #[error("antipode is not bijective")]
    AntipodeNotBijective,
    #[error("variant mismatch: {0}")]
    VariantMismatch(String),
    #[error("transparency violated: {0}")]
    TransparencyViolated(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("not a matched pair: {0}")]
    NotMatched(String),
    #[error("bad family parameters: {0}")]
    BadFamilyParams(String),
    #[error("no valid s: {0}")]
    BadS(String),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
}

impl Error {
    /// True for errors that mean "the hypothesis of the statement fails" rather than misuse.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::TransparencyViolated(_)
                | Error::PreconditionViolated(_)
                | Error::NotQuasitriangular(_)
                | Error::AntipodeNotBijective
                | Error::NotMatched(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
