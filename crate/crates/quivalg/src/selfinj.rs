use greenforge_exactlin::{field, ExactMatrix, Subspace};

use crate::algebra::Algebra;

/// Result of [`check_self_injective`]: `ext_dims[v] = dim Ext¹(S_v, A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfInjectivity {
    pub self_injective: bool,
    pub ext_dims: Vec<usize>,
}

/// Decides `Ext¹(S, A) = 0` for every simple `S = top(A e_v)` of a graded path algebra.
///
/// With `Ω = rad(A e_v)` (positive-length part of `A e_v`), `Ext¹(S, A)` is the
/// cokernel of restriction `Hom(A e_v, A) → Hom(Ω, A)`.
pub fn check_self_injective(alg: &Algebra) -> SelfInjectivity {
    let ext_dims: Vec<usize> = (0..alg.idempotents().len())
        .map(|v| ext1_simple(alg, v))
        .collect();
    SelfInjectivity {
        self_injective: ext_dims.iter().all(|&d| d == 0),
        ext_dims,
    }
}

fn ext1_simple(alg: &Algebra, v: usize) -> usize {
    let p = alg.prime();
    let n = alg.dim();
    let ev = &alg.idempotents()[v];
    let rad_vecs: Vec<Vec<u64>> = (0..n)
        .filter(|&b| alg.grading()[b] > 0)
        .map(|b| alg.multiply(&alg.basis_vec(b), ev))
        .collect();
    let omega = Subspace::from_vectors(p, n, &rad_vecs);
    let m = omega.dim();
    if m == 0 {
        return 0;
    }
    let obasis = omega.basis_vectors();
    // Unknowns: φ(ω_k) ∈ A, laid out as m blocks of n coordinates.
    let unknowns = m * n;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for a in 0..n {
        let av = alg.basis_vec(a);
        let la = alg.left_mult_matrix(&av);
        for (k, w) in obasis.iter().enumerate() {
            let coords = omega.coordinates(&alg.multiply(&av, w)).expect("rad(Ae_v) is a submodule");
            // Σ_l coords[l]·φ_l − a·φ_k = 0, one equation per coordinate of A.
            for i in 0..n {
                let mut row = vec![0u64; unknowns];
                for (l, &c) in coords.iter().enumerate() {
                    row[l * n + i] = field::add(row[l * n + i], c, p);
                }
                for j in 0..n {
                    let x = la.get(i, j);
                    row[k * n + j] = field::sub(row[k * n + j], x, p);
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let hom_dim = if rows.is_empty() {
        unknowns
    } else {
        ExactMatrix::from_rows(p, unknowns, &rows).kernel().dim()
    };
    let restricted: Vec<Vec<u64>> = (0..n)
        .map(|b| {
            let u = alg.multiply(ev, &alg.basis_vec(b));
            obasis.iter().flat_map(|w| alg.multiply(w, &u)).collect()
        })
        .collect();
    let image = Subspace::from_vectors(p, unknowns, &restricted).dim();
    hom_dim - image
}
