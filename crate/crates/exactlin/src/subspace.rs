use crate::field;
use crate::matrix::ExactMatrix;
use crate::LinError;

/// A subspace of F_p^n held as the rows of its reduced row echelon basis.
///
/// Two subspaces are equal exactly when their canonical bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: ExactMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: u64, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: ExactMatrix::zeros(p, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(p: u64, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: ExactMatrix::identity(p, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors.
    pub fn from_vectors(p: u64, ambient: usize, vectors: &[Vec<u64>]) -> Self {
        let m = ExactMatrix::from_rows(p, ambient, vectors);
        Self::row_space(&m)
    }

    pub fn row_space(m: &ExactMatrix) -> Self {
        let r = m.rref();
        let rows: Vec<Vec<u64>> = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        Subspace {
            ambient: m.cols(),
            basis: ExactMatrix::from_rows(m.prime(), m.cols(), &rows),
            pivots: r.pivots,
        }
    }

    pub fn prime(&self) -> u64 {
        self.basis.prime()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u64>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the basis from `v` until every pivot coordinate is zero.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let p = self.prime();
        let mut w = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            let f = w[c];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for (x, &b) in w.iter_mut().zip(self.basis.row(r)) {
                if b != 0 {
                    *x = (*x + nf * b) % p;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of a member with respect to the canonical basis.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c]).collect())
    }

    /// Linear combination of the canonical basis.
    pub fn combine(&self, coords: &[u64]) -> Vec<u64> {
        assert_eq!(coords.len(), self.dim());
        let p = self.prime();
        let mut out = vec![0u64; self.ambient];
        for (r, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.basis.row(r)) {
                *o = (*o + c * b) % p;
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    fn check(&self, other: &Subspace) -> Result<(), LinError> {
        if self.ambient != other.ambient {
            Err(LinError::AmbientMismatch(self.ambient, other.ambient))
        } else {
            Ok(())
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check(other)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)?))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.prime(), self.ambient));
        }
        // (a, b) with a·U + b·V = 0 gives a·U in the intersection.
        let stacked = self.basis.vstack(&other.basis)?;
        let left_kernel = stacked.transpose().kernel();
        let k = self.dim();
        let vectors: Vec<Vec<u64>> = left_kernel
            .basis_vectors()
            .iter()
            .map(|c| self.combine(&c[..k]))
            .collect();
        Ok(Subspace::from_vectors(self.prime(), self.ambient, &vectors))
    }

    /// Matrix whose kernel is exactly this subspace (rows span the orthogonal complement).
    pub fn annihilator(&self) -> ExactMatrix {
        let orth = self.basis.kernel();
        if orth.dim() == 0 {
            return ExactMatrix::zeros(self.prime(), 0, self.ambient);
        }
        orth.basis.clone()
    }

    /// Image of this subspace under `v ↦ m·v`.
    pub fn map(&self, m: &ExactMatrix) -> Result<Subspace, LinError> {
        if m.cols() != self.ambient {
            return Err(LinError::AmbientMismatch(m.cols(), self.ambient));
        }
        let vectors: Vec<Vec<u64>> = (0..self.dim())
            .map(|r| m.mul_vec(self.basis.row(r)))
            .collect();
        Ok(Subspace::from_vectors(self.prime(), m.rows(), &vectors))
    }
}

/// The quotient `big / small` with canonical complement representatives.
///
/// The complement rows are reduced against `small` and then put in RREF, so
/// their pivots avoid the pivots of `small`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    big: Subspace,
    small: Subspace,
    complement: Subspace,
}

impl Quotient {
    pub fn new(big: &Subspace, small: &Subspace) -> Result<Quotient, LinError> {
        big.check(small)?;
        if !small.is_subspace_of(big) {
            return Err(LinError::NotContained);
        }
        let reduced: Vec<Vec<u64>> = big
            .basis_vectors()
            .iter()
            .map(|v| small.reduce(v))
            .collect();
        let complement = Subspace::from_vectors(big.prime(), big.ambient, &reduced);
        debug_assert_eq!(complement.dim() + small.dim(), big.dim());
        Ok(Quotient {
            big: big.clone(),
            small: small.clone(),
            complement,
        })
    }

    pub fn dim(&self) -> usize {
        self.complement.dim()
    }

    pub fn big(&self) -> &Subspace {
        &self.big
    }

    pub fn small(&self) -> &Subspace {
        &self.small
    }

    pub fn complement(&self) -> &Subspace {
        &self.complement
    }

    /// Class coordinates of a vector of `big`.
    pub fn coords(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.big.contains(v) {
            return None;
        }
        let w = self.small.reduce(v);
        Some(self.complement.pivots.iter().map(|&c| w[c]).collect())
    }

    /// Canonical representative of a class.
    pub fn lift(&self, coords: &[u64]) -> Vec<u64> {
        self.complement.combine(coords)
    }

    /// The subspace of class coordinates spanned by the classes of `sub ∩ big`.
    pub fn project(&self, sub: &Subspace) -> Result<Subspace, LinError> {
        let inter = sub.intersect(&self.big)?;
        let vectors: Vec<Vec<u64>> = inter
            .basis_vectors()
            .iter()
            .map(|v| self.coords(v).expect("member of big"))
            .collect();
        Ok(Subspace::from_vectors(self.big.prime(), self.dim(), &vectors))
    }

    /// Preimage in `big` of a subspace of class coordinates (contains `small`).
    pub fn pull_back(&self, sub: &Subspace) -> Subspace {
        let mut vectors: Vec<Vec<u64>> = sub.basis_vectors().iter().map(|c| self.lift(c)).collect();
        vectors.extend(self.small.basis_vectors());
        Subspace::from_vectors(self.big.prime(), self.big.ambient, &vectors)
    }
}

/// Sum of two vectors scaled: `a + c·b`.
pub fn axpy(a: &mut [u64], c: u64, b: &[u64], p: u64) {
    if c == 0 {
        return;
    }
    for (x, &y) in a.iter_mut().zip(b) {
        *x = field::add(*x, field::mul(c, y, p), p);
    }
}
