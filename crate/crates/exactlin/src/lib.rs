//! Exact dense linear algebra over a prime field F_p.
//!
//! Vectors are plain `Vec<u64>` with entries in `[0, p)`. Subspaces keep a
//! reduced row echelon basis so that equality is a direct comparison.

pub mod field;
mod matrix;
mod subspace;

pub use matrix::{ExactMatrix, Rref};
pub use subspace::{axpy, Quotient, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinError {
    #[error("dimension mismatch: {left:?} against {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("subspace is not contained in the ambient subspace")]
    NotContained,
}
