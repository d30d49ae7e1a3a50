use std::collections::HashMap;

use greenforge_exactlin::{ExactMatrix, Quotient, Subspace};
use greenforge_quivalg::Algebra;

use crate::CatError;

/// Object shifts carried by categories whose objects are shifted complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftTags {
    /// `(complex index, tag)` of each object; the object is `complex[tag]`.
    pub of: Vec<(usize, i64)>,
    lookup: HashMap<(usize, i64), usize>,
}

impl ShiftTags {
    pub fn new(of: Vec<(usize, i64)>) -> Self {
        let lookup = of.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        ShiftTags { of, lookup }
    }

    pub fn find(&self, complex: usize, tag: i64) -> Option<usize> {
        self.lookup.get(&(complex, tag)).copied()
    }
}

/// An additive category given by finitely many objects, hom dimensions and
/// composition tensors.
///
/// Composition is written in diagrammatic order: `compose(x, y, z, f, g)` is
/// `f: x → y` followed by `g: y → z`.
#[derive(Clone, Debug)]
pub struct ComputedCategory {
    p: u64,
    objects: Vec<String>,
    dims: Vec<usize>,
    tensors: HashMap<(usize, usize, usize), Vec<u64>>,
    identities: Vec<Vec<u64>>,
    shift: Option<ShiftTags>,
}

impl ComputedCategory {
    /// `token(x, y, z, i, j)` returns the coordinates of (token i of hom(x,y))
    /// followed by (token j of hom(y,z)) in hom(x,z).
    pub fn build<F>(
        p: u64,
        objects: Vec<String>,
        dims: Vec<usize>,
        identities: Vec<Vec<u64>>,
        mut token: F,
    ) -> ComputedCategory
    where
        F: FnMut(usize, usize, usize, usize, usize) -> Vec<u64>,
    {
        let n = objects.len();
        assert_eq!(dims.len(), n * n);
        let mut tensors = HashMap::new();
        for x in 0..n {
            for y in 0..n {
                let dxy = dims[x * n + y];
                if dxy == 0 {
                    continue;
                }
                for z in 0..n {
                    let dyz = dims[y * n + z];
                    let dxz = dims[x * n + z];
                    if dyz == 0 || dxz == 0 {
                        continue;
                    }
                    let mut t = Vec::with_capacity(dxy * dyz * dxz);
                    for i in 0..dxy {
                        for j in 0..dyz {
                            let v = token(x, y, z, i, j);
                            debug_assert_eq!(v.len(), dxz);
                            t.extend(v);
                        }
                    }
                    tensors.insert((x, y, z), t);
                }
            }
        }
        ComputedCategory {
            p,
            objects,
            dims,
            tensors,
            identities,
            shift: None,
        }
    }

    pub fn with_shift(mut self, tags: ShiftTags) -> Self {
        assert_eq!(tags.of.len(), self.objects.len());
        self.shift = Some(tags);
        self
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object(&self, label: &str) -> Result<usize, CatError> {
        self.objects
            .iter()
            .position(|o| o == label)
            .ok_or_else(|| CatError::UnknownObject(label.to_string()))
    }

    pub fn shift_tags(&self) -> Option<&ShiftTags> {
        self.shift.as_ref()
    }

    /// The object `x` shifted by `s`, when present.
    pub fn shifted(&self, x: usize, s: i64) -> Option<usize> {
        let tags = self.shift.as_ref()?;
        let (c, t) = tags.of[x];
        tags.find(c, t + s)
    }

    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.dims[x * self.objects.len() + y]
    }

    pub fn identity(&self, x: usize) -> &[u64] {
        &self.identities[x]
    }

    pub fn zero(&self, x: usize, y: usize) -> Vec<u64> {
        vec![0; self.dim(x, y)]
    }

    /// `f: x → y` followed by `g: y → z`.
    pub fn compose(&self, x: usize, y: usize, z: usize, f: &[u64], g: &[u64]) -> Vec<u64> {
        let dxz = self.dim(x, z);
        let mut out = vec![0u64; dxz];
        let Some(t) = self.tensors.get(&(x, y, z)) else {
            return out;
        };
        let dyz = self.dim(y, z);
        let p = self.p;
        for (i, &a) in f.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in g.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let s = a * b % p;
                let base = (i * dyz + j) * dxz;
                for (o, &c) in out.iter_mut().zip(&t[base..base + dxz]) {
                    if c != 0 {
                        *o = (*o + s * c) % p;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `g ↦ f∘g` from hom(y,z) to hom(x,z) for fixed `f: x → y`.
    pub fn after_matrix(&self, x: usize, y: usize, z: usize, f: &[u64]) -> ExactMatrix {
        let dyz = self.dim(y, z);
        let dxz = self.dim(x, z);
        let mut m = ExactMatrix::zeros(self.p, dxz, dyz);
        for j in 0..dyz {
            let mut g = vec![0u64; dyz];
            g[j] = 1;
            let v = self.compose(x, y, z, f, &g);
            for (i, &c) in v.iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// Matrix of `f ↦ f∘g` from hom(x,y) to hom(x,z) for fixed `g: y → z`.
    pub fn before_matrix(&self, x: usize, y: usize, z: usize, g: &[u64]) -> ExactMatrix {
        let dxy = self.dim(x, y);
        let dxz = self.dim(x, z);
        let mut m = ExactMatrix::zeros(self.p, dxz, dxy);
        for j in 0..dxy {
            let mut f = vec![0u64; dxy];
            f[j] = 1;
            let v = self.compose(x, y, z, &f, g);
            for (i, &c) in v.iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    fn unit_vec(n: usize, i: usize) -> Vec<u64> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    /// Exhaustive associativity and unit laws over all hom tokens.
    pub fn check_laws(&self) -> Result<(), CatError> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                let dxy = self.dim(x, y);
                for i in 0..dxy {
                    let f = Self::unit_vec(dxy, i);
                    if self.compose(x, x, y, self.identity(x), &f) != f
                        || self.compose(x, y, y, &f, self.identity(y)) != f
                    {
                        return Err(CatError::LawFailed(format!(
                            "identity law at {} -> {} token {i}",
                            self.objects[x], self.objects[y]
                        )));
                    }
                }
            }
        }
        let nonzero: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).filter(|&y| self.dim(x, y) > 0).collect())
            .collect();
        for a in 0..n {
            for &b in &nonzero[a] {
                for &c in &nonzero[b] {
                    for &d in &nonzero[c] {
                        self.check_triple(a, b, c, d)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn check_triple(&self, a: usize, b: usize, c: usize, d: usize) -> Result<(), CatError> {
        let (dab, dbc, dcd) = (self.dim(a, b), self.dim(b, c), self.dim(c, d));
        for i in 0..dab {
            let f = Self::unit_vec(dab, i);
            for j in 0..dbc {
                let g = Self::unit_vec(dbc, j);
                let fg = self.compose(a, b, c, &f, &g);
                for k in 0..dcd {
                    let h = Self::unit_vec(dcd, k);
                    let lhs = self.compose(a, c, d, &fg, &h);
                    let rhs = self.compose(a, b, d, &f, &self.compose(b, c, d, &g, &h));
                    if lhs != rhs {
                        return Err(CatError::LawFailed(format!(
                            "associativity on {} -> {} -> {} -> {} tokens ({i},{j},{k})",
                            self.objects[a], self.objects[b], self.objects[c], self.objects[d]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Endomorphism algebra of `⊕ objs`, multiplication in diagrammatic order.
    pub fn endomorphism_algebra(&self, objs: &[usize]) -> Algebra {
        let mut blocks = Vec::new();
        let mut labels = Vec::new();
        for (a, &x) in objs.iter().enumerate() {
            for (b, &y) in objs.iter().enumerate() {
                for t in 0..self.dim(x, y) {
                    blocks.push((a, b, t));
                    labels.push(format!("{}->{}#{t}", self.objects[x], self.objects[y]));
                }
            }
        }
        let dim = blocks.len();
        let offset = |a: usize, b: usize| blocks.iter().position(|&(u, v, _)| u == a && v == b);
        let idempotents = (0..objs.len())
            .map(|a| {
                let mut e = vec![0u64; dim];
                if let Some(o) = offset(a, a) {
                    for (t, &c) in self.identity(objs[a]).iter().enumerate() {
                        e[o + t] = c;
                    }
                }
                e
            })
            .collect();
        Algebra::from_products(self.p, labels, idempotents, vec![0; dim], |i, j| {
            let (a, b, s) = blocks[i];
            let (b2, c, t) = blocks[j];
            let mut out = vec![0u64; dim];
            if b != b2 {
                return out;
            }
            let (x, y, z) = (objs[a], objs[b], objs[c]);
            let v = self.compose(
                x,
                y,
                z,
                &Self::unit_vec(self.dim(x, y), s),
                &Self::unit_vec(self.dim(y, z), t),
            );
            if let Some(o) = offset(a, c) {
                for (k, &c) in v.iter().enumerate() {
                    out[o + k] = c;
                }
            }
            out
        })
    }

    /// Full subcategory on `objs`, keeping the shift tags of retained objects.
    pub fn full_subcategory(&self, objs: &[usize]) -> ComputedCategory {
        let n = objs.len();
        let dims = (0..n * n).map(|k| self.dim(objs[k / n], objs[k % n])).collect();
        let identities = objs.iter().map(|&x| self.identities[x].clone()).collect();
        let names = objs.iter().map(|&x| self.objects[x].clone()).collect();
        let mut sub = ComputedCategory::build(self.p, names, dims, identities, |a, b, c, i, j| {
            let (x, y, z) = (objs[a], objs[b], objs[c]);
            self.compose(x, y, z, &Self::unit_vec(self.dim(x, y), i), &Self::unit_vec(self.dim(y, z), j))
        });
        if let Some(tags) = &self.shift {
            sub.shift = Some(ShiftTags::new(objs.iter().map(|&x| tags.of[x]).collect()));
        }
        sub
    }

    /// Quotient by a family of subspaces after checking that it is an ideal.
    pub fn quotient(&self, ideal: &IdealFamily) -> Result<QuotientCategory, CatError> {
        ideal.check_closed(self)?;
        let n = self.len();
        let mut quots = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let full = Subspace::full(self.p, self.dim(x, y));
                quots.push(
                    Quotient::new(&full, ideal.get(x, y)).map_err(|e| CatError::Linear(e.to_string()))?,
                );
            }
        }
        let dims = quots.iter().map(|q| q.dim()).collect();
        let identities = (0..n)
            .map(|x| quots[x * n + x].coords(self.identity(x)).expect("full space"))
            .collect();
        let cat = ComputedCategory::build(self.p, self.objects.clone(), dims, identities, |x, y, z, i, j| {
            let qxy = &quots[x * n + y];
            let qyz = &quots[y * n + z];
            let f = qxy.lift(&Self::unit_vec(qxy.dim(), i));
            let g = qyz.lift(&Self::unit_vec(qyz.dim(), j));
            quots[x * n + z].coords(&self.compose(x, y, z, &f, &g)).expect("full space")
        });
        let cat = match &self.shift {
            Some(s) => cat.with_shift(s.clone()),
            None => cat,
        };
        Ok(QuotientCategory { cat, quots })
    }
}

/// A subspace of every hom space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFamily {
    n: usize,
    subs: Vec<Subspace>,
}

impl IdealFamily {
    pub fn zero(cat: &ComputedCategory) -> Self {
        let n = cat.len();
        let subs = (0..n * n)
            .map(|k| Subspace::zero(cat.prime(), cat.dim(k / n, k % n)))
            .collect();
        IdealFamily { n, subs }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Subspace>(cat: &ComputedCategory, mut f: F) -> Self {
        let n = cat.len();
        let subs = (0..n * n)
            .map(|k| {
                let s = f(k / n, k % n);
                assert_eq!(s.ambient_dim(), cat.dim(k / n, k % n), "ideal ambient mismatch");
                s
            })
            .collect();
        IdealFamily { n, subs }
    }

    pub fn get(&self, x: usize, y: usize) -> &Subspace {
        &self.subs[x * self.n + y]
    }

    pub fn total_dim(&self) -> usize {
        self.subs.iter().map(|s| s.dim()).sum()
    }

    /// Exhaustive closure under pre- and post-composition with hom tokens.
    pub fn check_closed(&self, cat: &ComputedCategory) -> Result<(), CatError> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                for v in self.get(x, y).basis_vectors() {
                    for z in 0..n {
                        for j in 0..cat.dim(y, z) {
                            let g = ComputedCategory::unit_vec(cat.dim(y, z), j);
                            if !self.get(x, z).contains(&cat.compose(x, y, z, &v, &g)) {
                                return Err(CatError::IdealNotClosed(format!(
                                    "{} -> {} element followed by token {j} of hom to {}",
                                    cat.objects[x], cat.objects[y], cat.objects[z]
                                )));
                            }
                        }
                        for j in 0..cat.dim(z, x) {
                            let f = ComputedCategory::unit_vec(cat.dim(z, x), j);
                            if !self.get(z, y).contains(&cat.compose(z, x, y, &f, &v)) {
                                return Err(CatError::IdealNotClosed(format!(
                                    "token {j} of hom from {} followed by {} -> {} element",
                                    cat.objects[z], cat.objects[x], cat.objects[y]
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A quotient category together with the per-hom quotient maps.
#[derive(Clone, Debug)]
pub struct QuotientCategory {
    pub cat: ComputedCategory,
    pub quots: Vec<Quotient>,
}

impl QuotientCategory {
    pub fn class(&self, x: usize, y: usize, v: &[u64]) -> Vec<u64> {
        self.quots[x * self.cat.len() + y].coords(v).expect("hom vector")
    }

    pub fn representative(&self, x: usize, y: usize, c: &[u64]) -> Vec<u64> {
        self.quots[x * self.cat.len() + y].lift(c)
    }
}

/// The category of finitely generated projectives `A e_v` of a path algebra.
#[derive(Clone, Debug)]
pub struct ProjCategory {
    pub cat: ComputedCategory,
    pub alg: Algebra,
    corners: Vec<Subspace>,
}

impl ProjCategory {
    pub fn new(alg: &Algebra, vertex_labels: &[String]) -> ProjCategory {
        let n = alg.idempotents().len();
        let corners: Vec<Subspace> = (0..n * n)
            .map(|k| alg.corner(k / n, k % n).expect("vertex"))
            .collect();
        let dims = corners.iter().map(|c| c.dim()).collect();
        let identities = (0..n)
            .map(|v| corners[v * n + v].coordinates(&alg.idempotents()[v]).expect("e_v in corner"))
            .collect();
        let basis: Vec<Vec<Vec<u64>>> = corners.iter().map(|c| c.basis_vectors()).collect();
        let cat = ComputedCategory::build(
            alg.prime(),
            vertex_labels.to_vec(),
            dims,
            identities,
            |x, y, z, i, j| {
                let prod = alg.multiply(&basis[x * n + y][i], &basis[y * n + z][j]);
                corners[x * n + z].coordinates(&prod).expect("uniform product")
            },
        );
        ProjCategory {
            cat,
            alg: alg.clone(),
            corners,
        }
    }

    /// Hom coordinates of an algebra element of `e_i A e_j`.
    pub fn hom_coords(&self, i: usize, j: usize, v: &[u64]) -> Result<Vec<u64>, CatError> {
        self.corners[i * self.cat.len() + j]
            .coordinates(v)
            .ok_or_else(|| CatError::NotInCorner(i, j))
    }

    /// Morphism `⊕ src → ⊕ tgt` from algebra elements, `entries[a * tgt.len() + b]`
    /// lying in `e_{src[a]} A e_{tgt[b]}`.
    pub fn mor(&self, src: &[usize], tgt: &[usize], entries: &[Vec<u64>]) -> Result<Vec<u64>, CatError> {
        let mut out = Vec::new();
        for a in 0..src.len() {
            for b in 0..tgt.len() {
                out.extend(self.hom_coords(src[a], tgt[b], &entries[a * tgt.len() + b])?);
            }
        }
        Ok(out)
    }

    /// Algebra element represented by hom coordinates.
    pub fn element(&self, i: usize, j: usize, c: &[u64]) -> Vec<u64> {
        self.corners[i * self.cat.len() + j].combine(c)
    }
}
