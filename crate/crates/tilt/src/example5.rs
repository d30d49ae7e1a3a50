use greenforge_approx::ApproxContext;
use greenforge_catcore::{CatComplex, IdealFamily, ProjCategory};
use greenforge_phiorbit::AdmissibleSet;
use greenforge_quivalg::{build_algebra, local_xy_spec, Algebra};
use serde::Serialize;

use crate::{
    build_presented, fingerprint, lambda_spec, lambda_spec_reduced, presentation_check, verify_equivalence, Corpus, Fingerprint, GeneratorImages,
    PresentationResult, TheoremInput, TheoremReport, TiltError, COCONE,
};

/// Which two-term complex sits in the middle: `A·x→A` or `A·y→A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaSide {
    X,
    Y,
}

impl LambdaSide {
    fn complex(self) -> &'static str {
        match self {
            LambdaSide::X => "X",
            LambdaSide::Y => "Y",
        }
    }

    /// Differential letter and the other letter.
    fn letters(self) -> (&'static str, &'static str) {
        match self {
            LambdaSide::X => ("x", "y"),
            LambdaSide::Y => ("y", "x"),
        }
    }
}

fn elem(a: &Algebra, label: &str) -> Result<Vec<u64>, TiltError> {
    a.labels()
        .iter()
        .position(|l| l == label)
        .map(|i| a.basis_vec(i))
        .ok_or_else(|| TiltError::Invalid(format!("no basis element {label}")))
}

/// `A = k[x,y]/(xⁿ−yˢ, xy)` with complexes `X = (A·x→A)`, `Y = (A·y→A)` and
/// the stalk `A`, all in degrees 0 and 1, shifted by every tag in `tags`.
pub fn example5_corpus(n: usize, s: usize, p: u64, tags: std::ops::RangeInclusive<i64>) -> Result<Corpus, TiltError> {
    let alg = build_algebra(&local_xy_spec(n, s), p)?;
    let pc = ProjCategory::new(&alg, &["1".to_string()]);
    let two_term = |z: &[u64]| -> Result<CatComplex, TiltError> {
        let mut c = CatComplex::new();
        c.set_term(0, vec![0]);
        c.set_term(1, vec![0]);
        c.set_diff(0, pc.mor(&[0], &[0], &[z.to_vec()])?);
        Ok(c)
    };
    let x = two_term(&elem(&alg, "x")?)?;
    let y = two_term(&elem(&alg, "y")?)?;
    Corpus::new(
        pc,
        vec![("X".into(), x), ("Y".into(), y), ("A".into(), CatComplex::stalk(0, 0))],
        tags,
    )
}

/// `End(Σ^{-1}A ⊕ C ⊕ A)` modulo maps killed by `Hom(A ⊕ Σ^{-1}A, −)`, for `C`
/// the complex of `side`, with the images of the quiver generators of
/// [`lambda_spec`].
pub fn lambda(corpus: &Corpus, side: LambdaSide) -> Result<(Algebra, GeneratorImages), TiltError> {
    lambda_with(corpus, side, true)
}

/// As [`lambda`], optionally without passing to the ghost quotient.
pub fn lambda_with(corpus: &Corpus, side: LambdaSide, modulo_ghosts: bool) -> Result<(Algebra, GeneratorImages), TiltError> {
    let ca = corpus.complex("A")?;
    let cc = corpus.complex(side.complex())?;
    let objs = [corpus.obj(ca, -1)?, corpus.obj(cc, 0)?, corpus.obj(ca, 0)?];
    let m = vec![corpus.obj(ca, 0)?, corpus.obj(ca, -1)?];
    let ctx = ApproxContext::new(&corpus.cat, m, AdmissibleSet::zero(), 1);
    let mut ghosts = Vec::new();
    for &a in &objs {
        for &b in &objs {
            ghosts.push(if modulo_ghosts {
                ctx.ghost(a, b, 0)?
            } else {
                greenforge_exactlin::Subspace::zero(corpus.cat.prime(), corpus.cat.dim(a, b))
            });
        }
    }
    let sub = corpus.cat.full_subcategory(&objs);
    let ideal = IdealFamily::from_fn(&sub, |a, b| ghosts[a * 3 + b].clone());
    let q = sub.quotient(&ideal)?;
    let alg = q.cat.endomorphism_algebra(&[0, 1, 2]);

    let pc = &corpus.pc;
    let (u, v) = side.letters();
    let u = pc.hom_coords(0, 0, &elem(&pc.alg, u)?)?;
    let v = pc.hom_coords(0, 0, &elem(&pc.alg, v)?)?;
    let one = pc.hom_coords(0, 0, &pc.alg.unit())?;
    // every generator has a single nonzero degreewise component A → A
    let image = |a: usize, b: usize, comp: &[u64]| -> Result<Vec<u64>, TiltError> {
        let coords = corpus.class_of(objs[a], objs[b], comp)?;
        let cls = q.class(a, b, &coords);
        let mut out = alg.zero();
        let mut off = 0;
        for x in 0..3 {
            for y in 0..3 {
                if (x, y) == (a, b) {
                    out[off..off + cls.len()].copy_from_slice(&cls);
                }
                off += q.cat.dim(x, y);
            }
        }
        Ok(out)
    };
    let arrows = vec![
        image(0, 0, &u)?,
        image(2, 2, &u)?,
        image(0, 1, &one)?,
        image(1, 2, &one)?,
        image(1, 0, &v)?,
        image(2, 1, &v)?,
    ];
    let vertices = alg.idempotents().to_vec();
    Ok((alg, GeneratorImages { vertices, arrows }))
}

#[derive(Debug, Clone, Serialize)]
pub struct Example5Report {
    pub n: usize,
    pub s: usize,
    pub prime: u64,
    pub presented_dim: usize,
    pub presented_length_bound: usize,
    pub lambda_x_dim: usize,
    pub lambda_y_dim: usize,
    pub presentation_check: bool,
    pub presentation: PresentationResult,
    pub presentation_y: PresentationResult,
    /// The same presentation against the endomorphism ring before the ghost quotient.
    pub presentation_unquotiented: PresentationResult,
    /// The presentation with `(b2 b4)^s = 0` added, against the ghost quotient.
    pub presentation_reduced: PresentationResult,
    pub fingerprint_x: Fingerprint,
    pub fingerprint_y: Fingerprint,
    pub fingerprints_equal: bool,
    /// The cocone of the approximation of `X` has the hom profile of `Y`
    /// against all stalk shifts in range.
    pub cocone_matches_y: bool,
    pub theorem: TheoremReport,
    pub passed: bool,
}

pub fn example5(n: usize, s: usize, p: u64, orth_bound: i64) -> Result<Example5Report, TiltError> {
    let (presented, bound) = build_presented(n, s, p, false)?;
    let spec = lambda_spec(n, s, bound);
    let (_, rbound) = build_presented(n, s, p, true)?;
    let rspec = lambda_spec_reduced(n, s, rbound);
    let margin = orth_bound.max(2) + 1;
    let corpus = example5_corpus(n, s, p, -margin..=margin)?;
    let (lx, ix) = lambda(&corpus, LambdaSide::X)?;
    let (ly, iy) = lambda(&corpus, LambdaSide::Y)?;
    let presentation = presentation_check(&lx, &spec, &ix);
    let presentation_y = presentation_check(&ly, &spec, &iy);
    let (kx, ikx) = lambda_with(&corpus, LambdaSide::X, false)?;
    let presentation_unquotiented = presentation_check(&kx, &spec, &ikx);
    let presentation_reduced = presentation_check(&lx, &rspec, &ix);
    let fingerprint_x = fingerprint(&lx)?;
    let fingerprint_y = fingerprint(&ly)?;

    let ca = corpus.complex("A")?;
    let cx = corpus.complex("X")?;
    let input = TheoremInput {
        corpus: &corpus,
        y: corpus.obj(cx, 0)?,
        m: vec![corpus.obj(ca, 0)?, corpus.obj(ca, -1)?],
        phi: AdmissibleSet::zero(),
        d: 1,
        orth_bound,
    };
    let theorem = verify_equivalence(&input)?;
    let cocone_matches_y = cocone_profile(&input)?;

    let fingerprints_equal = fingerprint_x == fingerprint_y;
    let passed = presentation.holds
        && presented.dim() == lx.dim()
        && fingerprints_equal
        && cocone_matches_y
        && theorem.status == crate::Status::Pass;
    Ok(Example5Report {
        n,
        s,
        prime: p,
        presented_dim: presented.dim(),
        presented_length_bound: bound,
        lambda_x_dim: lx.dim(),
        lambda_y_dim: ly.dim(),
        presentation_check: presentation.holds,
        presentation,
        presentation_y,
        presentation_unquotiented,
        presentation_reduced,
        fingerprint_x,
        fingerprint_y,
        fingerprints_equal,
        cocone_matches_y,
        theorem,
        passed,
    })
}

fn cocone_profile(input: &TheoremInput) -> Result<bool, TiltError> {
    let data = crate::build_triangle_from_approx(input.corpus, &input.m, &input.phi, input.d, input.y)?;
    let c = &data.corpus;
    let (cc, cy, ca) = (c.complex(COCONE)?, c.complex("Y")?, c.complex("A")?);
    let (x0, y0) = (c.obj(cc, 0)?, c.obj(cy, 0)?);
    let mut same = c.cat.dim(x0, x0) == c.cat.dim(y0, y0) && c.cat.dim(x0, y0) == c.cat.dim(y0, y0);
    for t in c.tags.clone() {
        let a = c.obj(ca, t)?;
        same &= c.cat.dim(a, x0) == c.cat.dim(a, y0) && c.cat.dim(x0, a) == c.cat.dim(y0, a);
    }
    Ok(same)
}
