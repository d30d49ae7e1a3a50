//! Φ-Green algebras of a finite admissible Φ, their block-diagonal
//! ideals and quotients.

mod build;
mod ideal;
mod modules;

pub use build::{build_green, build_green_unchecked, free_shift_category, GreenAlgebra, Token};
pub use ideal::{build_ideal, quotient_algebra, IdealBasis, IdealKind};
pub use modules::{idempotent_columns, corner_module_check, LlxReport};

use greenforge_approx::ApproxError;
use greenforge_catcore::CatError;
use greenforge_phiorbit::PhiError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GreenError {
    #[error(transparent)]
    Phi(#[from] PhiError),
    #[error(transparent)]
    Cat(#[from] CatError),
    #[error(transparent)]
    Approx(#[from] ApproxError),
    #[error("not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("ideal not closed: {0}")]
    IdealNotClosed(String),
    #[error("{0}")]
    Invalid(String),
}
