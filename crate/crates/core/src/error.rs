use thiserror::Error;

use crate::ga_core::Signature;
use crate::logarithm::NonExistence;

/// Errors raised by the algebra kernel and the function layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MvError {
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("operation `{op}` is not available in {sig}")]
    UnsupportedSignature { op: &'static str, sig: Signature },

    #[error("multivector is not invertible (determinant {det:e})")]
    NonInvertible { det: f64 },

    #[error("arctan(x, y) is undefined at x = y = 0")]
    UndefinedArctan,

    #[error("logarithm does not exist: {0}")]
    NonExistent(NonExistence),

    #[error("result is not representable: {0}")]
    NonRepresentable(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, MvError>;
