//! Triangles from approximations, tilting sets over Green categories,
//! endomorphism algebras, Morita fingerprints and the end-to-end check.

mod corpus;
mod example5;
mod fingerprint;
mod presentation;
mod theorem;
mod tilting;
mod triangle;

use greenforge_approx::ApproxError;
use greenforge_catcore::CatError;
use greenforge_green::GreenError;
use greenforge_phiorbit::PhiError;
use greenforge_quivalg::QuivError;

pub use corpus::Corpus;
pub use example5::{example5, example5_corpus, lambda, lambda_with, Example5Report, LambdaSide};
pub use fingerprint::{fingerprint, primitive_idempotents, radical, Fingerprint};
pub use presentation::{build_presented, lambda_spec, lambda_spec_reduced, presentation_check, GeneratorImages, PresentationResult};
pub use theorem::{
    tag_margin, verify_equivalence, verify_with_triangle, GateReport, GreenReport, Status, TheoremInput, TheoremReport,
    TiltingReport, TriangleReport,
};
pub use tilting::{build_t, endo_in_quotient, GreenCategory, OrthEntry, TiltingSet};
pub use triangle::{build_triangle_from_approx, NAangleData, COCONE};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TiltError {
    #[error(transparent)]
    Cat(#[from] CatError),
    #[error(transparent)]
    Approx(#[from] ApproxError),
    #[error(transparent)]
    Green(#[from] GreenError),
    #[error(transparent)]
    Quiv(#[from] QuivError),
    #[error(transparent)]
    Phi(#[from] PhiError),
    #[error("prime {prime} is too small, need a prime above {needed}")]
    PrimeTooSmall { prime: u64, needed: usize },
    #[error("a corner algebra of dimension {corner_dim} does not split over the prime field")]
    NotSplitOverField { corner_dim: usize },
    #[error("self-orthogonality fails: dim Hom(T{i}, T{j}[{shift}]) = {dim}")]
    SelfOrthFailed { i: i64, j: i64, shift: i64, dim: usize },
    #[error("{0}")]
    Invalid(String),
}
