use std::fmt;

use crate::field;
use crate::subspace::Subspace;
use crate::LinError;

/// Dense row-major matrix over F_p.
///
/// Matrices act on column vectors, so `kernel` is `{x : m·x = 0}` and `image`
/// is the column span.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Output of [`ExactMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl ExactMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Builds from reduced entries; `data.len()` must be `rows * cols`.
    pub fn from_vec(p: u64, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count mismatch");
        let data = data.into_iter().map(|v| v % p).collect();
        ExactMatrix { p, rows, cols, data }
    }

    /// Builds from signed rows, reducing modulo `p`.
    pub fn from_rows_i64(p: u64, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&v| field::from_i64(v, p)));
        }
        ExactMatrix {
            p,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_rows(p: u64, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&v| v % p));
        }
        ExactMatrix {
            p,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinError> {
        if self.cols != other.rows {
            return Err(LinError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let p = self.p;
        let mut out = Self::zeros(p, self.rows, other.cols);
        for r in 0..self.rows {
            let orow = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    *o = (*o + a * b) % p;
                }
            }
        }
        Ok(out)
    }

    /// `m·v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| (acc + a * b) % self.p)
            })
            .collect()
    }

    /// Stacks rows of `self` above rows of `other`.
    pub fn vstack(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinError> {
        if self.cols != other.cols {
            return Err(LinError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(ExactMatrix {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form, pivot columns and rank.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let iv = field::inv(self.data[r * cols + c], p);
            for j in c..cols {
                self.data[r * cols + j] = self.data[r * cols + j] * iv % p;
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c];
                if f == 0 {
                    continue;
                }
                let nf = p - f;
                for j in c..cols {
                    let v = self.data[r * cols + j];
                    if v != 0 {
                        self.data[i * cols + j] = (self.data[i * cols + j] + nf * v) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Solves `a·x = b`. Free coordinates of each solution column are zero.
    pub fn solve(&self, b: &ExactMatrix) -> Result<Option<ExactMatrix>, LinError> {
        if self.rows != b.rows {
            return Err(LinError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (b.rows, b.cols),
            });
        }
        let p = self.p;
        let n = self.cols;
        let k = b.cols;
        let mut aug = Self::zeros(p, self.rows, n + k);
        for r in 0..self.rows {
            aug.data[r * (n + k)..r * (n + k) + n].copy_from_slice(self.row(r));
            aug.data[r * (n + k) + n..(r + 1) * (n + k)].copy_from_slice(b.row(r));
        }
        let pivots = aug.rref_in_place();
        if pivots.iter().any(|&c| c >= n) {
            return Ok(None);
        }
        let mut x = Self::zeros(p, n, k);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..k {
                x.data[c * k + j] = aug.data[r * (n + k) + n + j];
            }
        }
        Ok(Some(x))
    }

    /// `{x : m·x = 0}` in canonical form.
    pub fn kernel(&self) -> Subspace {
        let Rref { matrix, pivots, .. } = self.rref();
        let n = self.cols;
        let p = self.p;
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; n];
            v[free] = 1 % p;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = field::neg(matrix.get(r, free), p);
            }
            basis.push(v);
        }
        Subspace::from_vectors(p, n, &basis)
    }

    /// Column span.
    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(self.p, self.rows, &self.transpose().row_vecs())
    }

    /// `{x : m·x ∈ w}`.
    pub fn preimage(&self, w: &Subspace) -> Result<Subspace, LinError> {
        if w.ambient_dim() != self.rows {
            return Err(LinError::AmbientMismatch(self.rows, w.ambient_dim()));
        }
        // Compose with a projection whose kernel is w.
        let ann = w.annihilator();
        let m = ann.mul(self)?;
        Ok(m.kernel())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} over F_{} [", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}
