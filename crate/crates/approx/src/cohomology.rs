use greenforge_catcore::{CatComplex, ChainMapSpace, ProjCategory};
use greenforge_exactlin::{ExactMatrix, Subspace};

use crate::ApproxError;

/// How cycles are tested: against a k-basis of `Z^i`, or only against A-module
/// generators of `Z^i` (a complement of `rad(A)·Z^i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Linearity {
    KLinear,
    ALinear,
}

/// Underlying vector space of `⊕_a A e_{v_a}` inside `A^{#summands}`.
fn module_space(pc: &ProjCategory, objs: &[usize]) -> Subspace {
    let a = &pc.alg;
    let n = a.dim();
    let mut vs = Vec::new();
    for (k, &v) in objs.iter().enumerate() {
        let e = &a.idempotents()[v];
        for b in 0..n {
            let m = a.multiply(&a.basis_vec(b), e);
            let mut big = vec![0u64; n * objs.len()];
            big[k * n..(k + 1) * n].copy_from_slice(&m);
            vs.push(big);
        }
    }
    Subspace::from_vectors(a.prime(), n * objs.len(), &vs)
}

/// Linear map `⊕ A e_{src} → ⊕ A e_{tgt}` of a block morphism given in hom
/// coordinates, acting by right multiplication.
fn block_matrix(pc: &ProjCategory, src: &[usize], tgt: &[usize], coords: &[u64]) -> ExactMatrix {
    let a = &pc.alg;
    let n = a.dim();
    let mut m = ExactMatrix::zeros(a.prime(), n * tgt.len(), n * src.len());
    let mut off = 0;
    for (i, &u) in src.iter().enumerate() {
        for (j, &v) in tgt.iter().enumerate() {
            let len = pc.cat.dim(u, v);
            let phi = pc.element(u, v, &coords[off..off + len]);
            off += len;
            let r = a.right_mult_matrix(&phi);
            for row in 0..n {
                for col in 0..n {
                    let c = r.get(row, col);
                    if c != 0 {
                        m.set(j * n + row, i * n + col, c);
                    }
                }
            }
        }
    }
    m
}

fn cycles(pc: &ProjCategory, x: &CatComplex, deg: i64) -> Subspace {
    let space = module_space(pc, x.term(deg));
    if x.term(deg + 1).is_empty() {
        return space;
    }
    let d = block_matrix(pc, x.term(deg), x.term(deg + 1), &x.diff(&pc.cat, deg));
    d.kernel().intersect(&space).expect("same ambient")
}

fn boundaries(pc: &ProjCategory, y: &CatComplex, deg: i64) -> Subspace {
    let n = pc.alg.dim() * y.term(deg).len();
    if y.term(deg - 1).is_empty() {
        return Subspace::zero(pc.alg.prime(), n);
    }
    let d = block_matrix(pc, y.term(deg - 1), y.term(deg), &y.diff(&pc.cat, deg - 1));
    module_space(pc, y.term(deg - 1)).map(&d).expect("same ambient")
}

/// Complement of `rad(A)·Z` in `Z`: A-module generators of `Z`.
fn generators(pc: &ProjCategory, objs: &[usize], z: &Subspace) -> Vec<Vec<u64>> {
    let a = &pc.alg;
    let n = a.dim();
    let mut jz = Vec::new();
    for v in z.basis_vectors() {
        for r in (0..n).filter(|&b| a.grading()[b] > 0) {
            let rv = a.basis_vec(r);
            let mut out = vec![0u64; v.len()];
            for k in 0..objs.len() {
                out[k * n..(k + 1) * n].copy_from_slice(&a.multiply(&rv, &v[k * n..(k + 1) * n]));
            }
            jz.push(out);
        }
    }
    let jz = Subspace::from_vectors(a.prime(), z.ambient_dim(), &jz);
    greenforge_exactlin::Quotient::new(z, &jz)
        .expect("rad·Z ⊆ Z")
        .complement()
        .basis_vectors()
}

/// Homotopy classes `α: x[t1] → y[t2]` with `H^i(α) = 0` for `0 ≤ i ≤ n`,
/// as a subspace of the quotient coordinates of `hom` (layout of `x → y[t2−t1]`).
pub fn cohomology_ghost_oracle(
    pc: &ProjCategory,
    x: (&CatComplex, i64),
    y: (&CatComplex, i64),
    hom: &ChainMapSpace,
    n: i64,
    mode: Linearity,
) -> Result<Subspace, ApproxError> {
    let (x, t1) = x;
    let (y, t2) = y;
    let p = pc.alg.prime();
    let s = t2 - t1;
    if hom.shift != s {
        return Err(ApproxError::Linear("hom space does not match the shifts".into()));
    }
    let layout = &hom.layout;
    let cols = layout.len();
    let mut all_rows: Vec<Vec<u64>> = Vec::new();
    for i in 0..=n {
        let k = i + t1;
        let Some(range) = layout.range(k) else {
            continue;
        };
        let z = cycles(pc, x, k);
        let tests = match mode {
            Linearity::KLinear => z.basis_vectors(),
            Linearity::ALinear => generators(pc, x.term(k), &z),
        };
        let ann = boundaries(pc, y, k + s).annihilator();
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for t in 0..range.len() {
            let mut comp = vec![0u64; range.len()];
            comp[t] = 1;
            let m = block_matrix(pc, x.term(k), y.term(k + s), &comp);
            let mut col = Vec::new();
            for zv in &tests {
                col.extend(ann.mul_vec(&m.mul_vec(zv)));
            }
            if rows.is_empty() {
                rows = vec![vec![0u64; cols]; col.len()];
            }
            for (r, c) in col.into_iter().enumerate() {
                rows[r][range.start + t] = c;
            }
        }
        all_rows.extend(rows);
    }
    let vanishing = if all_rows.is_empty() {
        Subspace::full(p, cols)
    } else {
        ExactMatrix::from_rows(p, cols, &all_rows).kernel()
    };
    let inside = vanishing
        .intersect(&hom.chain)
        .map_err(|e| ApproxError::Linear(e.to_string()))?;
    hom.quot.project(&inside).map_err(|e| ApproxError::Linear(e.to_string()))
}
