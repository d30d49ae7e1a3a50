use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use greenforge_exactlin::{field, ExactMatrix, Quotient, Subspace};

use crate::category::{ComputedCategory, ShiftTags};
use crate::complex::{compose_mor, identity_mor, CatComplex, MorLayout};
use crate::CatError;

/// Coordinates of a degreewise morphism `x^i → y^{i+shift}`, concatenated over
/// the degrees where both sides are nonzero.
#[derive(Clone, Debug)]
pub struct GradedLayout {
    pub shift: i64,
    pub degrees: Vec<i64>,
    pub blocks: Vec<MorLayout>,
    offsets: Vec<usize>,
}

impl GradedLayout {
    pub fn new(cat: &ComputedCategory, x: &CatComplex, y: &CatComplex, shift: i64) -> Self {
        let mut degrees = Vec::new();
        let mut blocks = Vec::new();
        let mut offsets = vec![0];
        for i in x.degrees() {
            if y.term(i + shift).is_empty() {
                continue;
            }
            let l = MorLayout::new(cat, x.term(i), y.term(i + shift));
            offsets.push(offsets.last().unwrap() + l.len());
            degrees.push(i);
            blocks.push(l);
        }
        GradedLayout {
            shift,
            degrees,
            blocks,
            offsets,
        }
    }

    pub fn len(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn position(&self, deg: i64) -> Option<usize> {
        self.degrees.binary_search(&deg).ok()
    }

    pub fn range(&self, deg: i64) -> Option<std::ops::Range<usize>> {
        self.position(deg).map(|k| self.offsets[k]..self.offsets[k + 1])
    }

    /// Component in degree `deg` (empty when absent).
    pub fn component(&self, v: &[u64], deg: i64) -> Vec<u64> {
        match self.range(deg) {
            Some(r) => v[r].to_vec(),
            None => Vec::new(),
        }
    }

    fn add_into(&self, v: &mut [u64], deg: i64, block: &[u64], p: u64) {
        if let Some(r) = self.range(deg) {
            for (o, &c) in v[r].iter_mut().zip(block) {
                *o = field::add(*o, c, p);
            }
        }
    }
}

/// Chain maps `x → y[shift]` and the null-homotopic ones.
#[derive(Clone, Debug)]
pub struct ChainMapSpace {
    pub shift: i64,
    pub layout: GradedLayout,
    pub chain: Subspace,
    pub null: Subspace,
    pub quot: Quotient,
}

impl ChainMapSpace {
    /// Dimension of Hom_K(x, y[shift]).
    pub fn dim(&self) -> usize {
        self.quot.dim()
    }

    /// Chain-map representative of quotient coordinates.
    pub fn lift(&self, c: &[u64]) -> Vec<u64> {
        self.quot.lift(c)
    }

    /// Homotopy class of a chain map; `None` if `v` is not a chain map.
    pub fn class(&self, v: &[u64]) -> Option<Vec<u64>> {
        self.quot.coords(v)
    }
}

fn signed(v: Vec<u64>, negate: bool, p: u64) -> Vec<u64> {
    if negate {
        v.into_iter().map(|c| field::neg(c, p)).collect()
    } else {
        v
    }
}

/// Hom_K(x, y[shift]) by explicit linear systems over the category.
pub fn hom_complexes(cat: &ComputedCategory, x: &CatComplex, y: &CatComplex, shift: i64) -> Result<ChainMapSpace, CatError> {
    let n = cat.len();
    for deg in x.degrees().into_iter().chain(y.degrees()) {
        for &o in x.term(deg).iter().chain(y.term(deg)) {
            if o >= n {
                return Err(CatError::UnknownObject(format!("object index {o}")));
            }
        }
    }
    let p = cat.prime();
    let odd = shift.rem_euclid(2) == 1;
    let fl = GradedLayout::new(cat, x, y, shift);

    // Condition at degree i: d_x^i f^{i+1} − f^i d_{y[s]}^i, a morphism x^i → y^{i+1+s}.
    let cond_degs: Vec<i64> = x
        .degrees()
        .into_iter()
        .filter(|&i| !y.term(i + 1 + shift).is_empty())
        .collect();
    let cond_layouts: Vec<MorLayout> = cond_degs
        .iter()
        .map(|&i| MorLayout::new(cat, x.term(i), y.term(i + 1 + shift)))
        .collect();
    let cond_len: usize = cond_layouts.iter().map(|l| l.len()).sum();
    let mut cond = ExactMatrix::zeros(p, cond_len, fl.len());
    for (k, &j) in fl.degrees.iter().enumerate() {
        let r = fl.range(j).unwrap();
        for t in 0..r.len() {
            let mut fj = vec![0u64; r.len()];
            fj[t] = 1;
            let mut row_off = 0;
            for (ci, &i) in cond_degs.iter().enumerate() {
                let out = &cond_layouts[ci];
                let mut val = vec![0u64; out.len()];
                if i + 1 == j {
                    let v = compose_mor(cat, &x.diff_layout(cat, i), &fl.blocks[k], out, &x.diff(cat, i), &fj);
                    val = v;
                }
                if i == j {
                    let dy = signed(y.diff(cat, i + shift), odd, p);
                    let v = compose_mor(cat, &fl.blocks[k], &y.diff_layout(cat, i + shift), out, &fj, &dy);
                    for (o, c) in val.iter_mut().zip(v) {
                        *o = field::sub(*o, c, p);
                    }
                }
                for (q, &c) in val.iter().enumerate() {
                    cond.set(row_off + q, fl.offsets[k] + t, c);
                }
                row_off += out.len();
            }
        }
    }
    let chain = cond.kernel();

    // Homotopy r^i: x^i → y^{i+s−1}; f^i = d_x^i r^{i+1} + r^i d_{y[s]}^{i−1}.
    let hl = GradedLayout::new(cat, x, y, shift - 1);
    let mut images = Vec::with_capacity(hl.len());
    for (k, &j) in hl.degrees.iter().enumerate() {
        let r = hl.range(j).unwrap();
        for t in 0..r.len() {
            let mut rj = vec![0u64; r.len()];
            rj[t] = 1;
            let mut f = vec![0u64; fl.len()];
            if let Some(pos) = fl.position(j - 1) {
                let v = compose_mor(cat, &x.diff_layout(cat, j - 1), &hl.blocks[k], &fl.blocks[pos], &x.diff(cat, j - 1), &rj);
                fl.add_into(&mut f, j - 1, &v, p);
            }
            if let Some(pos) = fl.position(j) {
                let dy = signed(y.diff(cat, j + shift - 1), odd, p);
                let v = compose_mor(cat, &hl.blocks[k], &y.diff_layout(cat, j + shift - 1), &fl.blocks[pos], &rj, &dy);
                fl.add_into(&mut f, j, &v, p);
            }
            images.push(f);
        }
    }
    let null = Subspace::from_vectors(p, fl.len(), &images);
    let quot = Quotient::new(&chain, &null).map_err(|e| CatError::Linear(format!("null-homotopic maps not chain maps: {e}")))?;
    Ok(ChainMapSpace {
        shift,
        layout: fl,
        chain,
        null,
        quot,
    })
}

/// Degreewise composite of `f: x → y[s]` and `g: y → z[t]`: `h^i = f^i g^{i+s}`.
pub fn compose_chain(
    cat: &ComputedCategory,
    f: (&GradedLayout, &[u64]),
    g: (&GradedLayout, &[u64]),
    out: &GradedLayout,
) -> Vec<u64> {
    let p = cat.prime();
    let (fl, fv) = f;
    let (gl, gv) = g;
    let mut h = vec![0u64; out.len()];
    for (k, &i) in out.degrees.iter().enumerate() {
        let (Some(a), Some(b)) = (fl.position(i), gl.position(i + fl.shift)) else {
            continue;
        };
        let v = compose_mor(
            cat,
            &fl.blocks[a],
            &gl.blocks[b],
            &out.blocks[k],
            &fv[fl.range(i).unwrap()],
            &gv[gl.range(i + fl.shift).unwrap()],
        );
        out.add_into(&mut h, i, &v, p);
    }
    h
}

/// Identity chain map of `x`, in the layout of Hom(x, x).
pub fn identity_chain(cat: &ComputedCategory, x: &CatComplex) -> Vec<u64> {
    let l = GradedLayout::new(cat, x, x, 0);
    let mut v = vec![0u64; l.len()];
    for &i in &l.degrees {
        let r = l.range(i).unwrap();
        v[r].copy_from_slice(&identity_mor(cat, x.term(i)));
    }
    v
}

/// Homotopy category over a base category, with cached hom spaces between
/// shifted copies of a fixed list of complexes.
pub struct HomotopyCategory {
    pub base: ComputedCategory,
    pub complexes: Vec<CatComplex>,
    cache: Mutex<HashMap<(usize, usize, i64), Arc<ChainMapSpace>>>,
}

impl HomotopyCategory {
    pub fn new(base: ComputedCategory, complexes: Vec<CatComplex>) -> Result<Self, CatError> {
        for c in &complexes {
            c.validate(&base)?;
        }
        Ok(HomotopyCategory {
            base,
            complexes,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// Hom_K(c1, c2[s]).
    pub fn hom(&self, c1: usize, c2: usize, s: i64) -> Result<Arc<ChainMapSpace>, CatError> {
        if let Some(h) = self.cache.lock().unwrap().get(&(c1, c2, s)) {
            return Ok(h.clone());
        }
        let h = Arc::new(hom_complexes(&self.base, &self.complexes[c1], &self.complexes[c2], s)?);
        self.cache.lock().unwrap().insert((c1, c2, s), h.clone());
        Ok(h)
    }

    /// Class of `f: c1 → c2[s]` followed by `g: c2 → c3[t]`, in Hom(c1, c3[s+t]).
    pub fn compose(&self, c: (usize, usize, usize), s: i64, t: i64, f: &[u64], g: &[u64]) -> Result<Vec<u64>, CatError> {
        let (c1, c2, c3) = c;
        let hf = self.hom(c1, c2, s)?;
        let hg = self.hom(c2, c3, t)?;
        let hh = self.hom(c1, c3, s + t)?;
        let v = compose_chain(&self.base, (&hf.layout, &hf.lift(f)), (&hg.layout, &hg.lift(g)), &hh.layout);
        hh.class(&v).ok_or_else(|| CatError::NotChainMap)
    }

    pub fn identity(&self, c: usize) -> Result<Vec<u64>, CatError> {
        let h = self.hom(c, c, 0)?;
        h.class(&identity_chain(&self.base, &self.complexes[c])).ok_or(CatError::NotChainMap)
    }

    /// Computed category on the objects `complexes[c][tag]`; hom((c1,t1),(c2,t2)) is
    /// Hom_K(c1, c2[t2−t1]).
    pub fn category_of_complexes(&self, objects: &[(usize, i64)], names: Vec<String>) -> Result<ComputedCategory, CatError> {
        let n = objects.len();
        let mut homs = Vec::with_capacity(n * n);
        for &(c1, t1) in objects {
            for &(c2, t2) in objects {
                homs.push(self.hom(c1, c2, t2 - t1)?);
            }
        }
        let dims = homs.iter().map(|h| h.dim()).collect();
        let identities = objects
            .iter()
            .map(|&(c, _)| self.identity(c))
            .collect::<Result<Vec<_>, _>>()?;
        // Tensors depend only on the complexes and relative shifts.
        let mut memo: HashMap<(usize, usize, usize, i64, i64), Vec<Vec<u64>>> = HashMap::new();
        let mut err = None;
        let cat = ComputedCategory::build(self.base.prime(), names, dims, identities, |a, b, c, i, j| {
            let (hf, hg, hh) = (&homs[a * n + b], &homs[b * n + c], &homs[a * n + c]);
            let key = (objects[a].0, objects[b].0, objects[c].0, objects[b].1 - objects[a].1, objects[c].1 - objects[b].1);
            let table = memo.entry(key).or_insert_with(|| {
                let gs: Vec<Vec<u64>> = (0..hg.dim()).map(|j| hg.lift(&unit(hg.dim(), j))).collect();
                let mut t = Vec::with_capacity(hf.dim() * hg.dim());
                for i in 0..hf.dim() {
                    let f = hf.lift(&unit(hf.dim(), i));
                    for g in &gs {
                        let v = compose_chain(&self.base, (&hf.layout, &f), (&hg.layout, g), &hh.layout);
                        t.push(hh.class(&v).unwrap_or_else(|| {
                            err = Some(CatError::NotChainMap);
                            vec![0; hh.dim()]
                        }));
                    }
                }
                t
            });
            table[i * hg.dim() + j].clone()
        });
        if let Some(e) = err {
            return Err(e);
        }
        Ok(cat.with_shift(ShiftTags::new(objects.to_vec())))
    }
}

fn unit(n: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Structure maps of a cone: `y → cone` in Hom(y, cone) layout and
/// `cone → x[1]` in Hom(cone, x[1]) layout, both identities on summands.
pub fn cone_maps(cat: &ComputedCategory, x: &CatComplex, y: &CatComplex, cone: &CatComplex) -> (Vec<u64>, Vec<u64>) {
    let li = GradedLayout::new(cat, y, cone, 0);
    let mut incl = vec![0u64; li.len()];
    for (k, &i) in li.degrees.iter().enumerate() {
        let r = li.range(i).unwrap();
        let b = &li.blocks[k];
        for (a, &o) in y.term(i).iter().enumerate() {
            let blk = b.block(a, a);
            incl[r.start + blk.start..r.start + blk.end].copy_from_slice(cat.identity(o));
        }
    }
    let lp = GradedLayout::new(cat, cone, x, 1);
    let mut proj = vec![0u64; lp.len()];
    for (k, &i) in lp.degrees.iter().enumerate() {
        let r = lp.range(i).unwrap();
        let b = &lp.blocks[k];
        let ny = y.term(i).len();
        for (a, &o) in x.term(i + 1).iter().enumerate() {
            let blk = b.block(ny + a, a);
            proj[r.start + blk.start..r.start + blk.end].copy_from_slice(cat.identity(o));
        }
    }
    (incl, proj)
}
