use greenforge_approx::ApproxContext;
use greenforge_exactlin::Subspace;
use greenforge_quivalg::Algebra;

use crate::{GreenAlgebra, GreenError};

/// Which factorizable ideal of `End(X)` fills the diagonal blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealKind {
    /// `Fcogh_M(X)`, the ideal `I` on the `M ⊕ X` side.
    Fcogh,
    /// `Fgh_M(Y)`, the ideal `J` on the `M ⊕ Y` side.
    Fgh,
}

/// A two-sided ideal of a Green algebra, closure verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    pub space: Subspace,
    pub block_diagonal: bool,
}

/// Block-diagonal ideal with the degree-0 `kind` ideal of `ctx` in every
/// diagonal block; closure under both multiplications is checked on basis elements.
pub fn build_ideal(g: &GreenAlgebra, ctx: &ApproxContext, kind: IdealKind) -> Result<IdealBasis, GreenError> {
    let n = g.dim();
    let mut gens = Vec::new();
    for (a, &x) in g.objects.iter().enumerate() {
        for (b, &y) in g.objects.iter().enumerate() {
            let sub = match kind {
                IdealKind::Fcogh => ctx.fcogh(x, y, 0)?,
                IdealKind::Fgh => ctx.fgh(x, y, 0)?,
            };
            for &i in &g.phi {
                let r = g.sub_block(i, i, a, b);
                for v in sub.basis_vectors() {
                    let mut e = vec![0u64; n];
                    e[r.clone()].copy_from_slice(&v);
                    gens.push(e);
                }
            }
        }
    }
    let space = Subspace::from_vectors(g.algebra.prime(), n, &gens);
    if let Some((r, k)) = g.algebra.ideal_violation(&space) {
        return Err(GreenError::IdealNotClosed(format!(
            "basis row {r} times {} leaves the ideal",
            g.algebra.labels()[k]
        )));
    }
    Ok(IdealBasis {
        space,
        block_diagonal: true,
    })
}

/// `a / ideal` on canonical complement representatives, associativity re-checked.
pub fn quotient_algebra(a: &Algebra, ideal: &IdealBasis) -> Result<Algebra, GreenError> {
    let q = a.quotient(&ideal.space).map_err(|e| GreenError::IdealNotClosed(e.to_string()))?;
    if let Err((x, y, z)) = q.check_associative() {
        let l = q.labels();
        return Err(GreenError::NotAssociative(l[x].clone(), l[y].clone(), l[z].clone()));
    }
    Ok(q)
}
