//! Approximations by `add(M)` and its Φ-orbit, ghost and coghost ideals, their
//! factorizable parts, and a cohomology criterion for ghosts over
//! self-injective algebras.

mod cohomology;
mod context;
mod hypotheses;

pub use cohomology::{cohomology_ghost_oracle, Linearity};
pub use context::{ApproxContext, Approximation};
pub use hypotheses::{check_vanishing_hypotheses, fg_comparison_check, FgReport, VanishingReport};

use greenforge_catcore::CatError;
use greenforge_phiorbit::PhiError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ApproxError {
    #[error(transparent)]
    Phi(#[from] PhiError),
    #[error(transparent)]
    Cat(#[from] CatError),
    #[error("linear algebra: {0}")]
    Linear(String),
    #[error("hypotheses failed: {}", .0.join("; "))]
    HypothesesFailed(Vec<String>),
}
