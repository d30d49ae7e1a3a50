use greenforge_exactlin::{field, Subspace};
use greenforge_quivalg::{build_algebra, evaluate_path, Algebra, PathBoundSpec, Quiver, Relation};
use serde::Serialize;

use crate::TiltError;

/// Images of the vertices and arrows of a quiver, in quiver order.
#[derive(Debug, Clone)]
pub struct GeneratorImages {
    pub vertices: Vec<Vec<u64>>,
    pub arrows: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationResult {
    pub holds: bool,
    pub presented_dim: Option<usize>,
    pub witness: Option<String>,
}

impl PresentationResult {
    fn fail(presented_dim: Option<usize>, witness: String) -> Self {
        PresentationResult { holds: false, presented_dim, witness: Some(witness) }
    }
}

/// Quiver of the three-object endomorphism algebra: vertex 1 is the shifted
/// stalk, 2 the two-term complex, 3 the stalk; loops `a1`, `a2`.
pub fn lambda_spec(n: usize, s: usize, length_bound: usize) -> PathBoundSpec {
    let rep = |w: &str, k: usize| vec![w; k].join("*");
    let b13 = rep("b1*b3", s);
    let b42 = rep("b4*b2", s);
    let b31 = rep("b3*b1", s);
    let b24 = rep("b2*b4", s);
    PathBoundSpec {
        quiver: Quiver::new(
            &["1", "2", "3"],
            &[
                ("a1", "1", "1"),
                ("a2", "3", "3"),
                ("b1", "1", "2"),
                ("b2", "2", "3"),
                ("b3", "2", "1"),
                ("b4", "3", "2"),
            ],
        )
        .expect("valid quiver"),
        relations: vec![
            Relation::new(&[(1, "a1*b1")]),
            Relation::new(&[(1, "b3*a1")]),
            Relation::new(&[(1, "a2*b4")]),
            Relation::new(&[(1, "b1*b2")]),
            Relation::new(&[(1, "b4*b3")]),
            Relation::new(&[(1, "b2*a2")]),
            Relation::new(&[(1, &rep("a1", n)), (-1, &b13)]),
            Relation::new(&[(1, &rep("a2", n)), (-1, &b42)]),
            Relation::new(&[(1, &b31), (1, &b24)]),
        ],
        length_bound,
    }
}

/// [`lambda_spec`] plus `(b2 b4)^s = 0`, which kills the ghost class in the
/// endomorphism ring of the two-term complex.
pub fn lambda_spec_reduced(n: usize, s: usize, length_bound: usize) -> PathBoundSpec {
    let mut spec = lambda_spec(n, s, length_bound);
    spec.relations.push(Relation::new(&[(1, &vec!["b2*b4"; s].join("*"))]));
    spec
}

/// Smallest length bound at which the presented algebra is finite-dimensional
/// with that bound, and the algebra itself.
pub fn build_presented(n: usize, s: usize, p: u64, reduced: bool) -> Result<(Algebra, usize), TiltError> {
    let start = n.max(2 * s) + 1;
    let mut last = None;
    for bound in start..start + 4 * (n + 2 * s) {
        let spec = if reduced { lambda_spec_reduced(n, s, bound) } else { lambda_spec(n, s, bound) };
        match build_algebra(&spec, p) {
            Ok(a) => return Ok((a, bound)),
            Err(e) => last = Some(e),
        }
    }
    Err(TiltError::Quiv(last.expect("at least one bound tried")))
}

/// Certifies `a ≅ kQ/I` for the images: relations vanish, vertex images are a
/// complete set of orthogonal idempotents, the images generate `a`, and the
/// presented algebra has the same dimension.
pub fn presentation_check(a: &Algebra, spec: &PathBoundSpec, images: &GeneratorImages) -> PresentationResult {
    let p = a.prime();
    let q = &spec.quiver;
    let presented_dim = build_algebra(spec, p).ok().map(|b| b.dim());
    for rel in &spec.relations {
        let terms = match rel.resolve(q) {
            Ok(t) => t,
            Err(e) => return PresentationResult::fail(presented_dim, e.to_string()),
        };
        let mut sum = a.zero();
        for (c, path) in &terms {
            let v = evaluate_path(a, path, &images.vertices, &images.arrows);
            let c = field::from_i64(*c, p);
            for (o, x) in sum.iter_mut().zip(v) {
                *o = field::add(*o, field::mul(c, x, p), p);
            }
        }
        if sum.iter().any(|&c| c != 0) {
            return PresentationResult::fail(presented_dim, format!("relation {} is nonzero", rel.describe()));
        }
    }
    let mut total = a.zero();
    for (i, e) in images.vertices.iter().enumerate() {
        for (j, f) in images.vertices.iter().enumerate() {
            let ef = a.multiply(e, f);
            let want = if i == j { e.clone() } else { a.zero() };
            if ef != want {
                return PresentationResult::fail(presented_dim, format!("vertex images {i}, {j} are not orthogonal idempotents"));
            }
        }
        for (o, &x) in total.iter_mut().zip(e) {
            *o = field::add(*o, x, p);
        }
    }
    if total != a.unit() {
        return PresentationResult::fail(presented_dim, "vertex images do not sum to 1".into());
    }
    for (k, arrow) in q.arrows.iter().enumerate() {
        let v = &images.arrows[k];
        let (s, t) = (&images.vertices[arrow.source], &images.vertices[arrow.target]);
        if &a.multiply(&a.multiply(s, v), t) != v {
            return PresentationResult::fail(presented_dim, format!("arrow {} is not in its corner", arrow.label));
        }
    }
    let paths = q.paths_up_to(spec.length_bound);
    let vs: Vec<Vec<u64>> = paths.iter().map(|path| evaluate_path(a, path, &images.vertices, &images.arrows)).collect();
    if Subspace::from_vectors(p, a.dim(), &vs).dim() != a.dim() {
        return PresentationResult::fail(presented_dim, "images do not generate the algebra".into());
    }
    match presented_dim {
        Some(d) if d == a.dim() => PresentationResult { holds: true, presented_dim, witness: None },
        Some(d) => PresentationResult::fail(presented_dim, format!("presented algebra has dim {d}, target has dim {}", a.dim())),
        None => PresentationResult::fail(None, "presented algebra could not be built at this length bound".into()),
    }
}
