//! Additive categories given by hom dimensions and composition tensors,
//! bounded complexes over them and their homotopy classes.
//!
//! Composition is diagrammatic throughout: `f` followed by `g`.

mod category;
mod complex;
mod homotopy;

pub use category::{ComputedCategory, IdealFamily, ProjCategory, QuotientCategory, ShiftTags};
pub use complex::{compose_mor, identity_mor, mapping_cone, shift_complex, CatComplex, MorLayout};
pub use homotopy::{compose_chain, cone_maps, hom_complexes, identity_chain, ChainMapSpace, GradedLayout, HomotopyCategory};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatError {
    #[error("unknown object {0}")]
    UnknownObject(String),
    #[error("category law fails: {0}")]
    LawFailed(String),
    #[error("ideal not closed: {0}")]
    IdealNotClosed(String),
    #[error("linear algebra: {0}")]
    Linear(String),
    #[error("element is not in the corner e_{0} A e_{1}")]
    NotInCorner(usize, usize),
    #[error("bad complex: {0}")]
    BadComplex(String),
    #[error("morphism is not a chain map")]
    NotChainMap,
}
