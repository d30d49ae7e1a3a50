use std::collections::BTreeMap;

use greenforge_exactlin::field;

use crate::category::ComputedCategory;
use crate::CatError;

/// Block layout of a morphism between two lists of objects: the block for
/// summand pair `(a, b)` holds hom(src[a], tgt[b]) coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorLayout {
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    offsets: Vec<usize>,
}

impl MorLayout {
    pub fn new(cat: &ComputedCategory, src: &[usize], tgt: &[usize]) -> Self {
        let mut offsets = Vec::with_capacity(src.len() * tgt.len() + 1);
        let mut o = 0;
        for &x in src {
            for &y in tgt {
                offsets.push(o);
                o += cat.dim(x, y);
            }
        }
        offsets.push(o);
        MorLayout {
            src: src.to_vec(),
            tgt: tgt.to_vec(),
            offsets,
        }
    }

    pub fn len(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn block(&self, a: usize, b: usize) -> std::ops::Range<usize> {
        let k = a * self.tgt.len() + b;
        self.offsets[k]..self.offsets[k + 1]
    }
}

/// `f` (layout `l1`, a → b) followed by `g` (layout `l2`, b → c).
pub fn compose_mor(
    cat: &ComputedCategory,
    l1: &MorLayout,
    l2: &MorLayout,
    out: &MorLayout,
    f: &[u64],
    g: &[u64],
) -> Vec<u64> {
    let p = cat.prime();
    let mut h = vec![0u64; out.len()];
    for (a, &x) in l1.src.iter().enumerate() {
        for (b, &y) in l1.tgt.iter().enumerate() {
            let fb = &f[l1.block(a, b)];
            if fb.iter().all(|&v| v == 0) {
                continue;
            }
            for (c, &z) in l2.tgt.iter().enumerate() {
                let gb = &g[l2.block(b, c)];
                if gb.iter().all(|&v| v == 0) {
                    continue;
                }
                let v = cat.compose(x, y, z, fb, gb);
                for (o, &w) in h[out.block(a, c)].iter_mut().zip(&v) {
                    *o = field::add(*o, w, p);
                }
            }
        }
    }
    h
}

/// Block-diagonal identity on a list of objects.
pub fn identity_mor(cat: &ComputedCategory, objs: &[usize]) -> Vec<u64> {
    let l = MorLayout::new(cat, objs, objs);
    let mut v = vec![0u64; l.len()];
    for (a, &x) in objs.iter().enumerate() {
        v[l.block(a, a)].copy_from_slice(cat.identity(x));
    }
    v
}

/// Bounded complex over a computed category. `terms[i]` lists the summands in
/// degree `i`; `diffs[i]` is `d^i: terms[i] → terms[i+1]` in [`MorLayout`] form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CatComplex {
    terms: BTreeMap<i64, Vec<usize>>,
    diffs: BTreeMap<i64, Vec<u64>>,
}

impl CatComplex {
    pub fn new() -> Self {
        Self::default()
    }

    /// Single object in degree `deg`.
    pub fn stalk(obj: usize, deg: i64) -> Self {
        let mut c = Self::new();
        c.terms.insert(deg, vec![obj]);
        c
    }

    pub fn set_term(&mut self, deg: i64, objs: Vec<usize>) {
        if objs.is_empty() {
            self.terms.remove(&deg);
        } else {
            self.terms.insert(deg, objs);
        }
    }

    pub fn set_diff(&mut self, deg: i64, d: Vec<u64>) {
        if d.iter().all(|&v| v == 0) {
            self.diffs.remove(&deg);
        } else {
            self.diffs.insert(deg, d);
        }
    }

    pub fn term(&self, deg: i64) -> &[usize] {
        self.terms.get(&deg).map_or(&[], |v| v.as_slice())
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn range(&self) -> Option<(i64, i64)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    pub fn diff_layout(&self, cat: &ComputedCategory, deg: i64) -> MorLayout {
        MorLayout::new(cat, self.term(deg), self.term(deg + 1))
    }

    pub fn diff(&self, cat: &ComputedCategory, deg: i64) -> Vec<u64> {
        let len = self.diff_layout(cat, deg).len();
        match self.diffs.get(&deg) {
            Some(d) => d.clone(),
            None => vec![0; len],
        }
    }

    /// Checks layouts and `d^i d^{i+1} = 0`.
    pub fn validate(&self, cat: &ComputedCategory) -> Result<(), CatError> {
        for (&deg, d) in &self.diffs {
            if d.len() != self.diff_layout(cat, deg).len() {
                return Err(CatError::BadComplex(format!("differential in degree {deg} has wrong size")));
            }
        }
        for &deg in self.terms.keys() {
            let l1 = self.diff_layout(cat, deg);
            let l2 = self.diff_layout(cat, deg + 1);
            let out = MorLayout::new(cat, self.term(deg), self.term(deg + 2));
            let dd = compose_mor(cat, &l1, &l2, &out, &self.diff(cat, deg), &self.diff(cat, deg + 1));
            if dd.iter().any(|&v| v != 0) {
                return Err(CatError::BadComplex(format!("d∘d ≠ 0 starting in degree {deg}")));
            }
        }
        Ok(())
    }

    /// Direct sum, summands of `self` first in every degree.
    pub fn direct_sum(&self, other: &CatComplex, cat: &ComputedCategory) -> CatComplex {
        let mut out = CatComplex::new();
        let degs: std::collections::BTreeSet<i64> =
            self.terms.keys().chain(other.terms.keys()).copied().collect();
        for &d in &degs {
            let mut t = self.term(d).to_vec();
            t.extend_from_slice(other.term(d));
            out.set_term(d, t);
        }
        for &d in &degs {
            let l = out.diff_layout(cat, d);
            let la = self.diff_layout(cat, d);
            let lb = other.diff_layout(cat, d);
            let (da, db) = (self.diff(cat, d), other.diff(cat, d));
            let na = (self.term(d).len(), self.term(d + 1).len());
            let mut v = vec![0u64; l.len()];
            for a in 0..na.0 {
                for b in 0..na.1 {
                    v[l.block(a, b)].copy_from_slice(&da[la.block(a, b)]);
                }
            }
            for a in 0..other.term(d).len() {
                for b in 0..other.term(d + 1).len() {
                    v[l.block(na.0 + a, na.1 + b)].copy_from_slice(&db[lb.block(a, b)]);
                }
            }
            out.set_diff(d, v);
        }
        out
    }
}

/// `x[d]`: degree `i` holds `x^{i+d}` and `d_{x[d]}^i = (−1)^d d_x^{i+d}`.
pub fn shift_complex(cat: &ComputedCategory, x: &CatComplex, d: i64) -> CatComplex {
    let p = cat.prime();
    let mut out = CatComplex::new();
    for (&deg, t) in &x.terms {
        out.terms.insert(deg - d, t.clone());
    }
    for (&deg, diff) in &x.diffs {
        let v = if d.rem_euclid(2) == 1 {
            diff.iter().map(|&c| field::neg(c, p)).collect()
        } else {
            diff.clone()
        };
        out.diffs.insert(deg - d, v);
    }
    out
}

/// Cone of a chain map `f: x → y` given degreewise (`f_at(i)` is `f^i` with layout
/// `x^i → y^i`). Degree `i` is `y^i ⊕ x^{i+1}` with differential
/// `[[d_y, 0], [f^{i+1}, −d_x]]`.
pub fn mapping_cone<F>(cat: &ComputedCategory, x: &CatComplex, y: &CatComplex, f_at: F) -> CatComplex
where
    F: Fn(i64) -> Vec<u64>,
{
    let p = cat.prime();
    let mut out = CatComplex::new();
    let mut degs = std::collections::BTreeSet::new();
    for d in y.terms.keys() {
        degs.insert(*d);
    }
    for d in x.terms.keys() {
        degs.insert(*d - 1);
    }
    for &i in &degs {
        let mut t = y.term(i).to_vec();
        t.extend_from_slice(x.term(i + 1));
        out.set_term(i, t);
    }
    for &i in &degs {
        let l = out.diff_layout(cat, i);
        let ny0 = y.term(i).len();
        let ny1 = y.term(i + 1).len();
        let mut v = vec![0u64; l.len()];
        let dy = y.diff(cat, i);
        let ly = y.diff_layout(cat, i);
        for a in 0..ny0 {
            for b in 0..ny1 {
                v[l.block(a, b)].copy_from_slice(&dy[ly.block(a, b)]);
            }
        }
        let fi = f_at(i + 1);
        let lf = MorLayout::new(cat, x.term(i + 1), y.term(i + 1));
        let dx = x.diff(cat, i + 1);
        let lx = x.diff_layout(cat, i + 1);
        for a in 0..x.term(i + 1).len() {
            for b in 0..ny1 {
                v[l.block(ny0 + a, b)].copy_from_slice(&fi[lf.block(a, b)]);
            }
            for b in 0..x.term(i + 2).len() {
                let dst = l.block(ny0 + a, ny1 + b);
                for (o, &c) in v[dst].iter_mut().zip(&dx[lx.block(a, b)]) {
                    *o = field::neg(c, p);
                }
            }
        }
        out.set_diff(i, v);
    }
    out
}
