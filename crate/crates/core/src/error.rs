use thiserror::Error;

use crate::linalg::LinalgError;
use crate::report::AxiomReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("mismatched inputs: {0}")]
    Mismatch(String),
    #[error("{0} is not invertible")]
    NotInvertible(&'static str),
    #[error("{0} is not injective")]
    NotInjective(&'static str),
    /// An input failed the axioms a construction requires.
    #[error("{what} failed its axioms:\n{report}")]
    Invalid { what: &'static str, report: AxiomReport },
    #[error("{0}")]
    Unsupported(String),
    /// A postcondition that the theory guarantees did not hold. Always a bug.
    #[error("internal defect: {0}")]
    Defect(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
