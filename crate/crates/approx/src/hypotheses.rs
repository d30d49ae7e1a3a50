use greenforge_phiorbit::AdmissibleSet;

use crate::context::ApproxContext;
use crate::ApproxError;

/// Dimensions of `Hom(M, F^i x)` and `Hom(y, F^i M)` for `0 ≠ i ∈ Φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    pub holds: bool,
    pub m_to_x: Vec<(i64, usize)>,
    pub y_to_m: Vec<(i64, usize)>,
}

impl VanishingReport {
    /// Offending `(i, dim)` pairs, labelled by side.
    pub fn witnesses(&self) -> Vec<String> {
        let mut out = Vec::new();
        for &(i, d) in &self.m_to_x {
            if d != 0 {
                out.push(format!("dim Hom(M, F^{i} X) = {d}"));
            }
        }
        for &(i, d) in &self.y_to_m {
            if d != 0 {
                out.push(format!("dim Hom(Y, F^{i} M) = {d}"));
            }
        }
        out
    }
}

/// `x` and `y` are lists of summands.
pub fn check_vanishing_hypotheses(ctx: &ApproxContext, x: &[usize], y: &[usize]) -> Result<VanishingReport, ApproxError> {
    let mut m_to_x = Vec::new();
    let mut y_to_m = Vec::new();
    for &i in ctx.phi.elements().iter().filter(|&&i| i != 0) {
        let mut a = 0;
        for &s in &ctx.m {
            for &u in x {
                a += ctx.cat.dim(s, ctx.fpow(u, i)?);
            }
        }
        let mut b = 0;
        for &u in y {
            for &s in &ctx.m {
                b += ctx.cat.dim(u, ctx.fpow(s, i)?);
            }
        }
        m_to_x.push((i, a));
        y_to_m.push((i, b));
    }
    let holds = m_to_x.iter().chain(&y_to_m).all(|&(_, d)| d == 0);
    Ok(VanishingReport { holds, m_to_x, y_to_m })
}

/// Both sides of the comparison, per summand pair and orbit degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgReport {
    pub equal: bool,
    /// `(a, b, i, dim orbit-level Fgh, dim plain Fgh placed in degree 0)`.
    pub dims: Vec<(usize, usize, i64, usize, usize)>,
}

/// Orbit-level factorizable ghosts on `End(⊕ v)` against the plain `Fgh_M(v)`
/// placed in degree 0. Hypotheses are checked first: `approx_ok` records the
/// approximation test of the triangle, `x` and `y` are the theorem's outer terms.
pub fn fg_comparison_check(
    ctx: &ApproxContext,
    v: &[usize],
    x: &[usize],
    y: &[usize],
    approx_ok: bool,
) -> Result<FgReport, ApproxError> {
    let van = check_vanishing_hypotheses(ctx, x, y)?;
    let mut witnesses = van.witnesses();
    if !approx_ok {
        witnesses.push("g is not a right approximation".into());
    }
    if !witnesses.is_empty() {
        return Err(ApproxError::HypothesesFailed(witnesses));
    }
    let plain = ApproxContext::new(ctx.cat, ctx.m.clone(), AdmissibleSet::zero(), ctx.d);
    let mut dims = Vec::new();
    let mut equal = true;
    for &a in v {
        for &b in v {
            for &i in ctx.phi.elements() {
                let orbit = ctx.fgh(a, b, i)?;
                let flat = if i == 0 { Some(plain.fgh(a, b, 0)?) } else { None };
                let fd = flat.as_ref().map_or(0, |s| s.dim());
                let same = match &flat {
                    Some(s) => s == &orbit,
                    None => orbit.is_zero(),
                };
                equal &= same;
                dims.push((a, b, i, orbit.dim(), fd));
            }
        }
    }
    Ok(FgReport { equal, dims })
}
