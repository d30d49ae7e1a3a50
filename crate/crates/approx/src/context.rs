use greenforge_catcore::{ComputedCategory, IdealFamily};
use greenforge_exactlin::{ExactMatrix, Subspace};
use greenforge_phiorbit::{AdmissibleSet, PhiError};

use crate::ApproxError;

/// `add(M)` and its Φ-orbit inside a category whose objects carry shift tags;
/// `F = Σ^d`.
#[derive(Clone, Debug)]
pub struct ApproxContext<'a> {
    pub cat: &'a ComputedCategory,
    pub m: Vec<usize>,
    pub phi: AdmissibleSet,
    pub d: i64,
}

/// A morphism between an object and a list of summands, one hom vector per summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approximation {
    pub summands: Vec<usize>,
    pub maps: Vec<Vec<u64>>,
}

impl Approximation {
    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }
}

fn unit(n: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Kernel of the stacked linear maps (all with `cols` columns).
fn stacked_kernel(p: u64, cols: usize, blocks: Vec<ExactMatrix>) -> Subspace {
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for b in blocks {
        rows.extend(b.row_vecs());
    }
    if rows.is_empty() {
        return Subspace::full(p, cols);
    }
    ExactMatrix::from_rows(p, cols, &rows).kernel()
}

impl<'a> ApproxContext<'a> {
    pub fn new(cat: &'a ComputedCategory, m: Vec<usize>, phi: AdmissibleSet, d: i64) -> Self {
        ApproxContext { cat, m, phi, d }
    }

    fn p(&self) -> u64 {
        self.cat.prime()
    }

    /// `F^i x`.
    pub fn fpow(&self, x: usize, i: i64) -> Result<usize, ApproxError> {
        self.cat.shifted(x, self.d * i).ok_or_else(|| {
            ApproxError::Phi(PhiError::MissingShift {
                object: self.cat.objects()[x].clone(),
                shift: self.d * i,
            })
        })
    }

    /// `F^i M_s` for every `i` in `degrees` and every summand `s`.
    fn orbit(&self, degrees: impl Iterator<Item = i64>) -> Result<Vec<usize>, ApproxError> {
        let mut out = Vec::new();
        for i in degrees {
            for &s in &self.m {
                out.push(self.fpow(s, i)?);
            }
        }
        Ok(out)
    }

    /// Test objects for right approximations and ghosts: `F^{-j} M_s`, `j ∈ Φ`.
    pub fn right_tests(&self) -> Result<Vec<usize>, ApproxError> {
        self.orbit(self.phi.elements().iter().map(|&j| -j))
    }

    /// Test objects for left approximations and coghosts: `F^{j} M_s`, `j ∈ Φ`.
    pub fn left_tests(&self) -> Result<Vec<usize>, ApproxError> {
        self.orbit(self.phi.elements().iter().copied())
    }

    /// Stacked basis of `⊕_{i∈Φ} Hom(F^{-i} M_s, x)`.
    pub fn right_approximation(&self, x: usize) -> Result<Approximation, ApproxError> {
        let mut a = Approximation {
            summands: vec![],
            maps: vec![],
        };
        for t in self.right_tests()? {
            let n = self.cat.dim(t, x);
            for k in 0..n {
                a.summands.push(t);
                a.maps.push(unit(n, k));
            }
        }
        Ok(a)
    }

    /// Stacked basis of `⊕_{i∈Φ} Hom(x, F^{i} M_s)`.
    pub fn left_approximation(&self, x: usize) -> Result<Approximation, ApproxError> {
        let mut a = Approximation {
            summands: vec![],
            maps: vec![],
        };
        for t in self.left_tests()? {
            let n = self.cat.dim(x, t);
            for k in 0..n {
                a.summands.push(t);
                a.maps.push(unit(n, k));
            }
        }
        Ok(a)
    }

    /// Image of `Hom(t, d) → Hom(t, x)` under composition with `g: d → x`.
    fn right_image(&self, t: usize, d: usize, x: usize, g: &[u64]) -> Vec<Vec<u64>> {
        (0..self.cat.dim(t, d))
            .map(|k| self.cat.compose(t, d, x, &unit(self.cat.dim(t, d), k), g))
            .collect()
    }

    /// Image of `Hom(d, t) → Hom(x, t)` under precomposition with `f: x → d`.
    fn left_image(&self, t: usize, d: usize, x: usize, f: &[u64]) -> Vec<Vec<u64>> {
        (0..self.cat.dim(d, t))
            .map(|k| self.cat.compose(x, d, t, f, &unit(self.cat.dim(d, t), k)))
            .collect()
    }

    /// Greedy sub-approximation: keeps a basis map only when it enlarges the
    /// induced image on some test object.
    pub fn right_approximation_pruned(&self, x: usize) -> Result<Approximation, ApproxError> {
        let full = self.right_approximation(x)?;
        let tests = self.right_tests()?;
        let p = self.p();
        let mut spans: Vec<Subspace> = tests.iter().map(|&t| Subspace::zero(p, self.cat.dim(t, x))).collect();
        let mut out = Approximation {
            summands: vec![],
            maps: vec![],
        };
        for (d, g) in full.summands.iter().zip(&full.maps) {
            let mut grew = false;
            let mut next = Vec::with_capacity(tests.len());
            for (k, &t) in tests.iter().enumerate() {
                let img = Subspace::from_vectors(p, self.cat.dim(t, x), &self.right_image(t, *d, x, g));
                let s = spans[k].sum(&img).map_err(|e| ApproxError::Linear(e.to_string()))?;
                grew |= s.dim() > spans[k].dim();
                next.push(s);
            }
            if grew {
                spans = next;
                out.summands.push(*d);
                out.maps.push(g.clone());
            }
        }
        Ok(out)
    }

    pub fn left_approximation_pruned(&self, x: usize) -> Result<Approximation, ApproxError> {
        let full = self.left_approximation(x)?;
        let tests = self.left_tests()?;
        let p = self.p();
        let mut spans: Vec<Subspace> = tests.iter().map(|&t| Subspace::zero(p, self.cat.dim(x, t))).collect();
        let mut out = Approximation {
            summands: vec![],
            maps: vec![],
        };
        for (d, f) in full.summands.iter().zip(&full.maps) {
            let mut grew = false;
            let mut next = Vec::with_capacity(tests.len());
            for (k, &t) in tests.iter().enumerate() {
                let img = Subspace::from_vectors(p, self.cat.dim(x, t), &self.left_image(t, *d, x, f));
                let s = spans[k].sum(&img).map_err(|e| ApproxError::Linear(e.to_string()))?;
                grew |= s.dim() > spans[k].dim();
                next.push(s);
            }
            if grew {
                spans = next;
                out.summands.push(*d);
                out.maps.push(f.clone());
            }
        }
        Ok(out)
    }

    /// Surjectivity of `Hom(F^{-j} M_s, D) → Hom(F^{-j} M_s, x)` for all `j ∈ Φ`.
    pub fn is_right_approx(&self, x: usize, a: &Approximation) -> Result<bool, ApproxError> {
        for t in self.right_tests()? {
            let mut vs = Vec::new();
            for (d, g) in a.summands.iter().zip(&a.maps) {
                vs.extend(self.right_image(t, *d, x, g));
            }
            if Subspace::from_vectors(self.p(), self.cat.dim(t, x), &vs).dim() != self.cat.dim(t, x) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_left_approx(&self, x: usize, a: &Approximation) -> Result<bool, ApproxError> {
        for t in self.left_tests()? {
            let mut vs = Vec::new();
            for (d, f) in a.summands.iter().zip(&a.maps) {
                vs.extend(self.left_image(t, *d, x, f));
            }
            if Subspace::from_vectors(self.p(), self.cat.dim(x, t), &vs).dim() != self.cat.dim(x, t) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ghosts of orbit degree `i` in `Hom(a, F^i b)`: killed by every
    /// `h ∈ Hom(M_s, F^j a)` with `j, i+j ∈ Φ`.
    pub fn ghost(&self, a: usize, b: usize, i: i64) -> Result<Subspace, ApproxError> {
        let fb = self.fpow(b, i)?;
        let cols = self.cat.dim(a, fb);
        let mut blocks = Vec::new();
        for &j in self.phi.elements() {
            if !self.phi.contains(i + j) {
                continue;
            }
            for &s in &self.m {
                let t = self.fpow(s, -j)?;
                for k in 0..self.cat.dim(t, a) {
                    blocks.push(self.cat.after_matrix(t, a, fb, &unit(self.cat.dim(t, a), k)));
                }
            }
        }
        Ok(stacked_kernel(self.p(), cols, blocks))
    }

    /// Coghosts of orbit degree `i`: `g F^i(h) = 0` for every `h ∈ Hom(b, F^j M_s)`
    /// with `j, i+j ∈ Φ`.
    pub fn coghost(&self, a: usize, b: usize, i: i64) -> Result<Subspace, ApproxError> {
        let fb = self.fpow(b, i)?;
        let cols = self.cat.dim(a, fb);
        let mut blocks = Vec::new();
        for &j in self.phi.elements() {
            if !self.phi.contains(i + j) {
                continue;
            }
            for &s in &self.m {
                let t = self.fpow(s, i + j)?;
                for k in 0..self.cat.dim(fb, t) {
                    blocks.push(self.cat.before_matrix(a, fb, t, &unit(self.cat.dim(fb, t), k)));
                }
            }
        }
        Ok(stacked_kernel(self.p(), cols, blocks))
    }

    /// Span of composites `a → F^j M_s → F^i b` with `j, i−j ∈ Φ`.
    pub fn factor(&self, a: usize, b: usize, i: i64) -> Result<Subspace, ApproxError> {
        let fb = self.fpow(b, i)?;
        let mut vs = Vec::new();
        for &j in self.phi.elements() {
            if !self.phi.contains(i - j) {
                continue;
            }
            for &s in &self.m {
                let t = self.fpow(s, j)?;
                let (n1, n2) = (self.cat.dim(a, t), self.cat.dim(t, fb));
                for u in 0..n1 {
                    for v in 0..n2 {
                        vs.push(self.cat.compose(a, t, fb, &unit(n1, u), &unit(n2, v)));
                    }
                }
            }
        }
        Ok(Subspace::from_vectors(self.p(), self.cat.dim(a, fb), &vs))
    }

    pub fn fgh(&self, a: usize, b: usize, i: i64) -> Result<Subspace, ApproxError> {
        self.ghost(a, b, i)?
            .intersect(&self.factor(a, b, i)?)
            .map_err(|e| ApproxError::Linear(e.to_string()))
    }

    pub fn fcogh(&self, a: usize, b: usize, i: i64) -> Result<Subspace, ApproxError> {
        self.coghost(a, b, i)?
            .intersect(&self.factor(a, b, i)?)
            .map_err(|e| ApproxError::Linear(e.to_string()))
    }

    /// Degree-0 ghosts as the kernel of composition with a right approximation of `a`.
    pub fn ghost_via_approx(&self, a: usize, b: usize, approx: &Approximation) -> Subspace {
        let blocks = approx
            .summands
            .iter()
            .zip(&approx.maps)
            .map(|(&d, g)| self.cat.after_matrix(d, a, b, g))
            .collect();
        stacked_kernel(self.p(), self.cat.dim(a, b), blocks)
    }

    /// Degree-0 coghosts as the kernel of composition with a left approximation of `b`.
    pub fn coghost_via_approx(&self, a: usize, b: usize, approx: &Approximation) -> Subspace {
        let blocks = approx
            .summands
            .iter()
            .zip(&approx.maps)
            .map(|(&d, f)| self.cat.before_matrix(a, b, d, f))
            .collect();
        stacked_kernel(self.p(), self.cat.dim(a, b), blocks)
    }

    /// Degree-0 ideal on every pair of objects of the category.
    pub fn family<F>(&self, mut f: F) -> Result<IdealFamily, ApproxError>
    where
        F: FnMut(&Self, usize, usize) -> Result<Subspace, ApproxError>,
    {
        let n = self.cat.len();
        let mut subs = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                subs.push(f(self, a, b)?);
            }
        }
        Ok(IdealFamily::from_fn(self.cat, |a, b| subs[a * n + b].clone()))
    }
}
