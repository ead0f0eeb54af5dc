use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring variant mismatch: {0}")]
    VariantMismatch(String),
    #[error("element is not invertible")]
    NotInvertible,
    /// Elimination or biorthogonalization found no invertible pivot at this order.
    #[error("matrix is not generic: no invertible pivot at order {order}")]
    NonGeneric { order: usize },
    #[error("index {index} out of bounds (limit {bound})")]
    IndexOutOfBounds { index: usize, bound: usize },
    #[error("duplicate index {0}")]
    DuplicateIndex(usize),
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),
    #[error("gram matrix is not positive definite (failed at order {order})")]
    NotPositiveDefinite { order: usize },
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
