use crate::field::FieldSpec;

/// Errors shared across the crate. Axiom failures are never errors; they are
/// reported as data in a [`crate::report::CheckReport`]; errors mean the input
/// was not even well-shaped, or a requested inverse does not exist.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("no convolution inverse exists")]
    NotConvolutionInvertible,
    #[error("cannot parse `{text}` as a scalar over {field}")]
    BadScalar { text: String, field: FieldSpec },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{0}")]
    Invalid(String),
}
