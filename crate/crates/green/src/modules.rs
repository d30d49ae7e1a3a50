use greenforge_exactlin::Subspace;
use greenforge_quivalg::Algebra;

use crate::{GreenAlgebra, GreenError};

/// `dim 𝒢·e_i` for each `i ∈ Φ`; errors unless the columns partition `𝒢`.
pub fn idempotent_columns(g: &GreenAlgebra) -> Result<Vec<(i64, usize)>, GreenError> {
    let cols: Vec<(i64, usize)> = g.phi.iter().map(|&i| (i, left_ideal(&g.algebra, &g.idempotent(i)).dim())).collect();
    let total: usize = cols.iter().map(|c| c.1).sum();
    if total != g.dim() {
        return Err(GreenError::Invalid(format!("columns sum to {total}, algebra has dim {}", g.dim())));
    }
    Ok(cols)
}

fn left_ideal(a: &Algebra, e: &[u64]) -> Subspace {
    let vs: Vec<Vec<u64>> = (0..a.dim()).map(|k| a.multiply(&a.basis_vec(k), e)).collect();
    Subspace::from_vectors(a.prime(), a.dim(), &vs)
}

/// Outcome of comparing `Hom_𝒢(𝒢e_{i,X1}, 𝒢e_{j,X2})` with `E^{i−j}(X1, X2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LlxReport {
    pub module_homs: usize,
    pub e_dim: usize,
    /// Right multiplication by each block token is a module map.
    pub mu_in_homs: bool,
    /// `μ(x·y) = μ(x)μ(y)` for `y` in the blocks `(j, k)` on `X2`.
    pub multiplicative: bool,
}

impl LlxReport {
    pub fn holds(&self) -> bool {
        self.module_homs == self.e_dim && self.mu_in_homs && self.multiplicative
    }
}

/// Sum of the identities of the summands `xs` (positions in `g.objects`) in block `(i, i)`.
fn partial_idempotent(g: &GreenAlgebra, i: i64, xs: &[usize]) -> Vec<u64> {
    let mut e = vec![0u64; g.dim()];
    let full = g.idempotent(i);
    for &a in xs {
        for k in g.sub_block(i, i, a, a) {
            e[k] = full[k];
        }
    }
    e
}

/// Block tokens of `(i, j)` restricted to `X1 → X2`, as algebra elements.
fn block_elements(g: &GreenAlgebra, i: i64, j: i64, x1: &[usize], x2: &[usize]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for &a in x1 {
        for &b in x2 {
            for k in g.sub_block(i, j, a, b) {
                out.push(g.algebra.basis_vec(k));
            }
        }
    }
    out
}

/// Module homs between projective columns by solving the 𝒢-linearity system
/// directly; `x1`, `x2` are summand positions, `i, j ∈ Φ`.
pub fn corner_module_check(g: &GreenAlgebra, x1: &[usize], x2: &[usize], i: i64, j: i64) -> LlxReport {
    let a = &g.algebra;
    let p = a.prime();
    let pm = left_ideal(a, &partial_idempotent(g, i, x1));
    let qm = left_ideal(a, &partial_idempotent(g, j, x2));
    let (r, s) = (pm.dim(), qm.dim());
    let pb = pm.basis_vectors();
    let qb = qm.basis_vectors();
    // unknown φ[l][k] at column l * r + k: φ(p_k) = Σ_l φ[l][k] q_l
    let mut system = Subspace::zero(p, r * s);
    for b in 0..a.dim() {
        let be = a.basis_vec(b);
        let w: Vec<Vec<u64>> = qb.iter().map(|q| qm.coordinates(&a.multiply(&be, q)).expect("left ideal")).collect();
        let mut rows = Vec::new();
        for (k, pk) in pb.iter().enumerate() {
            let c = pm.coordinates(&a.multiply(&be, pk)).expect("left ideal");
            for m in 0..s {
                let mut row = vec![0u64; r * s];
                for (k2, &ck) in c.iter().enumerate() {
                    row[m * r + k2] = (row[m * r + k2] + ck) % p;
                }
                for (l, wl) in w.iter().enumerate() {
                    row[l * r + k] = (row[l * r + k] + p - wl[m]) % p;
                }
                rows.push(row);
            }
        }
        system = system.sum(&Subspace::from_vectors(p, r * s, &rows)).expect("same ambient");
    }
    let homs = if system.is_zero() {
        Subspace::full(p, r * s)
    } else {
        system.basis().kernel()
    };
    let e_dim = if g.phi.contains(&(i - j)) {
        block_elements(g, i, j, x1, x2).len()
    } else {
        0
    };
    let mu = |x: &[u64]| -> Vec<u64> {
        let mut v = vec![0u64; r * s];
        for (k, pk) in pb.iter().enumerate() {
            let c = qm.coordinates(&a.multiply(pk, x)).expect("lands in the target column");
            for (l, cl) in c.into_iter().enumerate() {
                v[l * r + k] = cl;
            }
        }
        v
    };
    let xs = if e_dim > 0 { block_elements(g, i, j, x1, x2) } else { Vec::new() };
    let mu_in_homs = xs.iter().all(|x| homs.contains(&mu(x)));
    let mut multiplicative = true;
    for &k in g.phi.iter().filter(|&&k| g.phi.contains(&(j - k)) && g.phi.contains(&(i - k))) {
        let qk = left_ideal(a, &partial_idempotent(g, k, x2));
        for x in &xs {
            for y in block_elements(g, j, k, x2, x2) {
                let xy = a.multiply(x, &y);
                for pk in &pb {
                    let lhs = a.multiply(pk, &xy);
                    let rhs = a.multiply(&a.multiply(pk, x), &y);
                    multiplicative &= lhs == rhs && qk.contains(&lhs);
                }
            }
        }
    }
    LlxReport {
        module_homs: homs.dim(),
        e_dim,
        mu_in_homs,
        multiplicative,
    }
}
