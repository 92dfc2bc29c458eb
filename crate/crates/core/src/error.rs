//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange { index: usize, min: usize, max: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid group spec {0:?}")]
    InvalidGroupSpec(String),
    #[error("terms carry mixed residues mod {modulus}")]
    MixedResidues { modulus: u32 },
    #[error("non-homogeneous input: {0}")]
    NonHomogeneous(String),
    #[error("multiplicity violation: kernel of dimension {dim} at degree {degree} ({context})")]
    MultiplicityViolation { dim: usize, degree: usize, context: String },
    #[error("no lowest-weight line found at degree {degree} ({context})")]
    BranchMissing { degree: usize, context: String },
    #[error("not an eigenvector: {0}")]
    NotEigenvector(String),
    #[error("non-simple joint spectrum: {0}")]
    NonSimpleSpectrum(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
