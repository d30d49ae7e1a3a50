//! Finite-dimensional algebras from quivers with relations.
//!
//! Paths compose left to right, so `a*b` means `a` then `b`. Projective left
//! modules are `A e_v`, and `Hom_A(A e_i, A e_j) ≅ e_i A e_j` via `φ ↦ φ(e_i)`;
//! a map `u` followed by a map `w` corresponds to the product `u·w`.

mod algebra;
mod build;
mod quiver;
mod selfinj;

pub use algebra::{Algebra, Witness};
pub use build::{build_algebra, evaluate_path};
pub use quiver::{Arrow, Path, PathBoundSpec, Quiver, Relation};
pub use selfinj::{check_self_injective, SelfInjectivity};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuivError {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("invalid vertex reference `{0}`")]
    InvalidVertex(String),
    #[error("empty path in relation")]
    EmptyPath,
    #[error("path `{0}` is not composable")]
    NotComposable(String),
    #[error("relation `{0}` is not uniform (terms have different endpoints)")]
    NotUniform(String),
    #[error("length bound {bound} is below {needed}")]
    BoundTooSmall { bound: usize, needed: usize },
    #[error("path `{path}` of length {bound} is not in the relation ideal; raise length_bound")]
    NotNilpotentAtBound { bound: usize, path: String },
    #[error("{0} is not an accepted prime")]
    BadPrime(u64),
    #[error("subspace is not a two-sided ideal (row {ideal_row} against `{basis}`)")]
    IdealNotClosed { ideal_row: usize, basis: String },
    #[error("linear algebra: {0}")]
    Linear(String),
}

/// `k[x,y]/(x^n − y^s, xy, yx)` on one vertex with loops `x`, `y`.
pub fn local_xy_spec(n: usize, s: usize) -> PathBoundSpec {
    let xn = vec!["x"; n].join("*");
    let ys = vec!["y"; s].join("*");
    PathBoundSpec {
        quiver: Quiver::new(&["1"], &[("x", "1", "1"), ("y", "1", "1")]).expect("valid quiver"),
        relations: vec![
            Relation::new(&[(1, &xn), (-1, &ys)]),
            Relation::new(&[(1, "x*y")]),
            Relation::new(&[(1, "y*x")]),
        ],
        length_bound: n.max(s) + 1,
    }
}
