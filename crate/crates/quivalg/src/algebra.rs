use greenforge_exactlin::{field, ExactMatrix, Quotient, Subspace};

use crate::QuivError;

/// Finite-dimensional associative algebra given by structure constants.
///
/// `basis[a]·basis[b] = Σ_k c_k basis[k]` where `(k, c_k)` are the sparse
/// entries of `table[a * dim + b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    p: u64,
    dim: usize,
    labels: Vec<String>,
    table: Vec<Vec<(usize, u64)>>,
    idempotents: Vec<Vec<u64>>,
    grading: Vec<usize>,
}

/// A triple of basis indices on which a law fails.
pub type Witness = (usize, usize, usize);

impl Algebra {
    /// Assembles an algebra from a dense product function on basis pairs.
    pub fn from_products<F>(
        p: u64,
        labels: Vec<String>,
        idempotents: Vec<Vec<u64>>,
        grading: Vec<usize>,
        mut product: F,
    ) -> Algebra
    where
        F: FnMut(usize, usize) -> Vec<u64>,
    {
        let dim = labels.len();
        let mut table = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                let v = product(a, b);
                debug_assert_eq!(v.len(), dim);
                table.push(sparse(&v));
            }
        }
        Algebra {
            p,
            dim,
            labels,
            table,
            idempotents,
            grading,
        }
    }

    /// The ground field F_p.
    pub fn ground_field(p: u64) -> Algebra {
        Algebra::from_products(p, vec!["1".into()], vec![vec![1]], vec![0], |_, _| vec![1])
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn grading(&self) -> &[usize] {
        &self.grading
    }

    /// Distinguished idempotents (one per vertex for path algebras).
    pub fn idempotents(&self) -> &[Vec<u64>] {
        &self.idempotents
    }

    pub fn basis_product(&self, a: usize, b: usize) -> &[(usize, u64)] {
        &self.table[a * self.dim + b]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.dim]
    }

    pub fn unit(&self) -> Vec<u64> {
        let mut u = self.zero();
        for e in &self.idempotents {
            for (x, &y) in u.iter_mut().zip(e) {
                *x = field::add(*x, y, self.p);
            }
        }
        u
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0u64; self.dim];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let s = x * y % p;
                for &(k, c) in &self.table[i * self.dim + j] {
                    out[k] = (out[k] + s * c) % p;
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ a·x` acting on column coordinates.
    pub fn left_mult_matrix(&self, a: &[u64]) -> ExactMatrix {
        let cols: Vec<Vec<u64>> = (0..self.dim)
            .map(|j| self.multiply(a, &self.basis_vec(j)))
            .collect();
        ExactMatrix::from_rows(self.p, self.dim, &cols).transpose()
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_mult_matrix(&self, a: &[u64]) -> ExactMatrix {
        let cols: Vec<Vec<u64>> = (0..self.dim)
            .map(|j| self.multiply(&self.basis_vec(j), a))
            .collect();
        ExactMatrix::from_rows(self.p, self.dim, &cols).transpose()
    }

    /// Exhaustive check of `(ab)c = a(bc)` on basis triples.
    pub fn check_associative(&self) -> Result<(), Witness> {
        let n = self.dim;
        let p = self.p;
        let mut lhs = vec![0u64; n];
        let mut rhs = vec![0u64; n];
        for a in 0..n {
            for b in 0..n {
                let ab = &self.table[a * n + b];
                for c in 0..n {
                    lhs.iter_mut().for_each(|x| *x = 0);
                    rhs.iter_mut().for_each(|x| *x = 0);
                    for &(k, u) in ab {
                        for &(l, v) in &self.table[k * n + c] {
                            lhs[l] = (lhs[l] + u * v) % p;
                        }
                    }
                    for &(k, u) in &self.table[b * n + c] {
                        for &(l, v) in &self.table[a * n + k] {
                            rhs[l] = (rhs[l] + u * v) % p;
                        }
                    }
                    if lhs != rhs {
                        return Err((a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks that the idempotents are orthogonal and sum to a two-sided unit.
    pub fn check_unit(&self) -> Result<(), String> {
        for (i, e) in self.idempotents.iter().enumerate() {
            for (j, f) in self.idempotents.iter().enumerate() {
                let ef = self.multiply(e, f);
                let expect = if i == j { e.clone() } else { self.zero() };
                if ef != expect {
                    return Err(format!("idempotents {i} and {j} are not orthogonal idempotents"));
                }
            }
        }
        let u = self.unit();
        for b in 0..self.dim {
            let v = self.basis_vec(b);
            if self.multiply(&u, &v) != v || self.multiply(&v, &u) != v {
                return Err(format!("unit fails on basis element {}", self.labels[b]));
            }
        }
        Ok(())
    }

    /// Canonical basis of `a·A·b` for elements `a`, `b`.
    pub fn sandwich(&self, a: &[u64], b: &[u64]) -> Subspace {
        let vs: Vec<Vec<u64>> = (0..self.dim)
            .map(|k| self.multiply(&self.multiply(a, &self.basis_vec(k)), b))
            .collect();
        Subspace::from_vectors(self.p, self.dim, &vs)
    }

    /// `e_i·A·e_j` for distinguished idempotents.
    pub fn corner(&self, i: usize, j: usize) -> Result<Subspace, QuivError> {
        let n = self.idempotents.len();
        if i >= n || j >= n {
            return Err(QuivError::InvalidVertex(format!("{}", i.max(j))));
        }
        Ok(self.sandwich(&self.idempotents[i], &self.idempotents[j]))
    }

    /// First failure of two-sided closure, as (ideal basis row, algebra basis index).
    pub fn ideal_violation(&self, ideal: &Subspace) -> Option<(usize, usize)> {
        for (r, v) in ideal.basis_vectors().iter().enumerate() {
            for k in 0..self.dim {
                let e = self.basis_vec(k);
                if !ideal.contains(&self.multiply(&e, v)) || !ideal.contains(&self.multiply(v, &e)) {
                    return Some((r, k));
                }
            }
        }
        None
    }

    /// Quotient by a verified two-sided ideal, on canonical complement representatives.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Algebra, QuivError> {
        if let Some((r, k)) = self.ideal_violation(ideal) {
            return Err(QuivError::IdealNotClosed {
                ideal_row: r,
                basis: self.labels[k].clone(),
            });
        }
        let q = Quotient::new(&Subspace::full(self.p, self.dim), ideal)
            .map_err(|e| QuivError::Linear(e.to_string()))?;
        let reps: Vec<Vec<u64>> = (0..q.dim()).map(|i| q.lift(&self.unit_coords(q.dim(), i))).collect();
        let pivots = q.complement().pivots().to_vec();
        let labels = pivots.iter().map(|&c| self.labels[c].clone()).collect();
        let grading = pivots.iter().map(|&c| self.grading[c]).collect();
        let idempotents = self
            .idempotents
            .iter()
            .map(|e| q.coords(e).expect("full space"))
            .collect();
        Ok(Algebra::from_products(self.p, labels, idempotents, grading, |a, b| {
            q.coords(&self.multiply(&reps[a], &reps[b])).expect("full space")
        }))
    }

    fn unit_coords(&self, n: usize, i: usize) -> Vec<u64> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    /// Same algebra in the basis given by the rows of an invertible matrix.
    pub fn change_basis(&self, rows: &ExactMatrix) -> Result<Algebra, QuivError> {
        let n = self.dim;
        if rows.rows() != n || rows.cols() != n || rows.rank() != n {
            return Err(QuivError::Linear("change of basis must be invertible".into()));
        }
        // new coordinates c satisfy c·rows = old coordinates
        let rt = rows.transpose();
        let to_new = |old: &[u64]| -> Vec<u64> {
            let b = ExactMatrix::from_vec(self.p, n, 1, old.to_vec());
            rt.solve(&b).unwrap().expect("invertible").column(0)
        };
        let new_vecs: Vec<Vec<u64>> = rows.row_vecs();
        let labels = (0..n).map(|i| format!("f{i}")).collect();
        let idempotents = self.idempotents.iter().map(|e| to_new(e)).collect();
        Ok(Algebra::from_products(self.p, labels, idempotents, vec![0; n], |a, b| {
            to_new(&self.multiply(&new_vecs[a], &new_vecs[b]))
        }))
    }

    /// Nonzero structure constants as `(a, b, k, c)` in index order.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, u64)> {
        let mut out = Vec::new();
        for a in 0..self.dim {
            for b in 0..self.dim {
                for &(k, c) in &self.table[a * self.dim + b] {
                    out.push((a, b, k, c));
                }
            }
        }
        out
    }
}

pub(crate) fn sparse(v: &[u64]) -> Vec<(usize, u64)> {
    v.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| (k, c))
        .collect()
}
