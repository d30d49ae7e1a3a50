use greenforge_approx::{check_vanishing_hypotheses, fg_comparison_check, ApproxContext, ApproxError};
use greenforge_green::{build_green, build_ideal, quotient_algebra, IdealKind};
use greenforge_phiorbit::AdmissibleSet;
use serde::Serialize;

use crate::{build_t, build_triangle_from_approx, endo_in_quotient, fingerprint, Corpus, Fingerprint, NAangleData, OrthEntry, TiltError};

/// Inputs of the verification: the third vertex `y` of the triangle and `M`,
/// as objects of `corpus`.
pub struct TheoremInput<'a> {
    pub corpus: &'a Corpus,
    pub y: usize,
    pub m: Vec<usize>,
    pub phi: AdmissibleSet,
    pub d: i64,
    pub orth_bound: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    HypothesesFailed,
}

#[derive(Debug, Clone, Serialize)]
pub struct TriangleReport {
    pub middle: Vec<String>,
    pub composites_vanish: bool,
    /// `(degree, number of indecomposable terms)` of the first vertex.
    pub first_vertex_terms: Vec<(i64, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GateReport {
    pub right_approximation: bool,
    pub left_approximation: bool,
    /// `(i, dim Hom(M, F^i X))`.
    pub m_to_x: Vec<(i64, usize)>,
    /// `(i, dim Hom(Y, F^i M))`.
    pub y_to_m: Vec<(i64, usize)>,
    pub fg_equal: Option<bool>,
    pub passed: bool,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GreenReport {
    pub dim: usize,
    pub ideal_dim: usize,
    pub quotient_dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct TiltingReport {
    pub orth_bound: i64,
    pub self_orthogonal: bool,
    pub orth: Vec<OrthEntry>,
    pub category_ideal_dim: usize,
    pub endo_dim: usize,
    pub block_dims: Vec<(i64, i64, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub phi: String,
    pub d: i64,
    pub prime: u64,
    pub status: Status,
    pub triangle: TriangleReport,
    pub gate: GateReport,
    pub green_u: Option<GreenReport>,
    pub green_v: Option<GreenReport>,
    pub tilting: Option<TiltingReport>,
    pub fingerprint_endo: Option<Fingerprint>,
    pub fingerprint_green_v: Option<Fingerprint>,
    pub failure: Option<String>,
}

/// Tag margin needed around `M` and 0 for all shifts the pipeline touches.
pub fn tag_margin(phi: &AdmissibleSet, d: i64) -> i64 {
    let max = phi.elements().iter().map(|i| i.abs()).max().unwrap_or(0);
    2 * d.abs() * max + 2
}

pub fn verify_equivalence(input: &TheoremInput) -> Result<TheoremReport, TiltError> {
    let data = build_triangle_from_approx(input.corpus, &input.m, &input.phi, input.d, input.y)?;
    verify_with_triangle(input, &data)
}

/// Steps 2–7 on a triangle already built from `input`.
pub fn verify_with_triangle(input: &TheoremInput, data: &NAangleData) -> Result<TheoremReport, TiltError> {
    let cat = &data.corpus.cat;
    let names = cat.objects();
    let cx = data.corpus.objs[data.x].0;
    let xc = &data.corpus.h.complexes[cx];
    let triangle = TriangleReport {
        middle: data.middle.iter().map(|&k| names[k].clone()).collect(),
        composites_vanish: data.composites_vanish()?,
        first_vertex_terms: xc.degrees().into_iter().map(|i| (i, xc.term(i).len())).collect(),
    };
    let ctx = ApproxContext::new(cat, input.m.clone(), input.phi.clone(), input.d);
    let right = ctx.is_right_approx(data.y, &data.right_approximation())?;
    let left = ctx.is_left_approx(data.x, &data.left_approximation())?;
    let van = check_vanishing_hypotheses(&ctx, &[data.x], &[data.y])?;
    let mut v: Vec<usize> = input.m.clone();
    v.push(data.y);
    let mut gate = GateReport {
        right_approximation: right,
        left_approximation: left,
        m_to_x: van.m_to_x.clone(),
        y_to_m: van.y_to_m.clone(),
        fg_equal: None,
        passed: false,
        witnesses: Vec::new(),
    };
    if !left {
        gate.witnesses.push("f is not a left approximation".into());
    }
    match fg_comparison_check(&ctx, &v, &[data.x], &[data.y], right) {
        Ok(r) => {
            gate.fg_equal = Some(r.equal);
            if !r.equal {
                gate.witnesses.push("orbit-level Fgh differs from Fgh_M on M ⊕ Y".into());
            }
        }
        Err(ApproxError::HypothesesFailed(w)) => gate.witnesses.extend(w),
        Err(e) => return Err(e.into()),
    }
    gate.passed = gate.witnesses.is_empty();
    let mut report = TheoremReport {
        phi: input.phi.to_string(),
        d: input.d,
        prime: cat.prime(),
        status: Status::HypothesesFailed,
        triangle,
        gate,
        green_u: None,
        green_v: None,
        tilting: None,
        fingerprint_endo: None,
        fingerprint_green_v: None,
        failure: None,
    };
    if !report.gate.passed {
        return Ok(report);
    }
    let plain = ApproxContext::new(cat, input.m.clone(), AdmissibleSet::zero(), input.d);
    let mut u: Vec<usize> = input.m.clone();
    u.push(data.x);
    let gu = build_green(cat, &u, &input.phi, input.d)?;
    let i_ideal = match build_ideal(&gu, &plain, IdealKind::Fcogh) {
        Ok(i) => i,
        Err(e) => return Ok(failed(report, format!("ideal I: {e}"))),
    };
    let qu = quotient_algebra(&gu.algebra, &i_ideal)?;
    report.green_u = Some(GreenReport { dim: gu.dim(), ideal_dim: i_ideal.space.dim(), quotient_dim: qu.dim() });
    let gv = build_green(cat, &v, &input.phi, input.d)?;
    let j_ideal = match build_ideal(&gv, &plain, IdealKind::Fgh) {
        Ok(j) => j,
        Err(e) => return Ok(failed(report, format!("ideal J: {e}"))),
    };
    let qv = quotient_algebra(&gv.algebra, &j_ideal)?;
    report.green_v = Some(GreenReport { dim: gv.dim(), ideal_dim: j_ideal.space.dim(), quotient_dim: qv.dim() });
    let ts = match build_t(data, &input.m, &input.phi, input.d, input.orth_bound) {
        Ok(ts) => ts,
        Err(e @ TiltError::SelfOrthFailed { .. }) => return Ok(failed(report, e.to_string())),
        Err(TiltError::Cat(e)) => return Ok(failed(report, format!("tilting set: {e}"))),
        Err(e) => return Err(e),
    };
    let (endo, blocks) = endo_in_quotient(&ts)?;
    report.tilting = Some(TiltingReport {
        orth_bound: input.orth_bound,
        self_orthogonal: true,
        orth: ts.orth.clone(),
        category_ideal_dim: ts.ideal_dim,
        endo_dim: endo.dim(),
        block_dims: blocks,
    });
    let fe = fingerprint(&endo)?;
    let fv = fingerprint(&qv)?;
    let equal = fe == fv;
    report.fingerprint_endo = Some(fe);
    report.fingerprint_green_v = Some(fv);
    if equal {
        report.status = Status::Pass;
        Ok(report)
    } else {
        Ok(failed(report, "fingerprints differ".into()))
    }
}

fn failed(mut report: TheoremReport, why: String) -> TheoremReport {
    report.status = Status::Fail;
    report.failure = Some(why);
    report
}
