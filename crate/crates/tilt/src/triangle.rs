use greenforge_approx::{ApproxContext, Approximation};
use greenforge_catcore::{cone_maps, mapping_cone, shift_complex, CatComplex, GradedLayout, MorLayout};
use greenforge_phiorbit::AdmissibleSet;

use crate::{Corpus, TiltError};

/// Name of the complex `Σ^{-1} cone(g)` added to the corpus.
pub const COCONE: &str = "cocone";

/// A triangle `x →f D →g y →h x[1]` with `D` in `add(M)`; object indices refer
/// to `corpus`, which contains `x` as the complex [`COCONE`].
pub struct NAangleData {
    pub corpus: Corpus,
    pub x: usize,
    pub middle: Vec<usize>,
    pub y: usize,
    /// `f_k: x → D_k`.
    pub f: Vec<Vec<u64>>,
    /// `g_k: D_k → y`.
    pub g: Vec<Vec<u64>>,
    /// `h: y → x[1]`.
    pub h: Vec<u64>,
}

impl NAangleData {
    pub fn left_approximation(&self) -> Approximation {
        Approximation { summands: self.middle.clone(), maps: self.f.clone() }
    }

    pub fn right_approximation(&self) -> Approximation {
        Approximation { summands: self.middle.clone(), maps: self.g.clone() }
    }

    /// `f g = 0`, `g_k h = 0` and `h f[1] = 0` up to homotopy.
    pub fn composites_vanish(&self) -> Result<bool, TiltError> {
        let cat = &self.corpus.cat;
        let mut fg = cat.zero(self.x, self.y);
        for (k, &dk) in self.middle.iter().enumerate() {
            let c = cat.compose(self.x, dk, self.y, &self.f[k], &self.g[k]);
            for (o, v) in fg.iter_mut().zip(c) {
                *o = (*o + v) % cat.prime();
            }
        }
        let (cx, _) = self.corpus.objs[self.x];
        let x1 = self.corpus.obj(cx, 1)?;
        let mut ok = fg.iter().all(|&c| c == 0);
        for (k, &dk) in self.middle.iter().enumerate() {
            ok &= cat.compose(dk, self.y, x1, &self.g[k], &self.h).iter().all(|&c| c == 0);
            let (cd, td) = self.corpus.objs[dk];
            let d1 = self.corpus.obj(cd, td + 1)?;
            ok &= cat.compose(self.y, x1, d1, &self.h, &self.f[k]).iter().all(|&c| c == 0);
        }
        Ok(ok)
    }
}

fn copy_block(dst: &mut [u64], dl: &MorLayout, (a, b): (usize, usize), src: &[u64], sl: &MorLayout, (sa, sb): (usize, usize)) {
    dst[dl.block(a, b)].copy_from_slice(&src[sl.block(sa, sb)]);
}

/// Completes a pruned right approximation `g: D → y` to a triangle via the cone.
pub fn build_triangle_from_approx(
    corpus: &Corpus,
    m: &[usize],
    phi: &AdmissibleSet,
    d: i64,
    y: usize,
) -> Result<NAangleData, TiltError> {
    let ctx = ApproxContext::new(&corpus.cat, m.to_vec(), phi.clone(), d);
    let approx = ctx.right_approximation_pruned(y)?;
    let base = &corpus.h.base;
    let (cy, ty) = corpus.objs[y];
    let ycx = shift_complex(base, &corpus.h.complexes[cy], ty);
    let parts: Vec<CatComplex> = approx
        .summands
        .iter()
        .map(|&k| {
            let (c, t) = corpus.objs[k];
            shift_complex(base, &corpus.h.complexes[c], t)
        })
        .collect();
    let dcx = parts.iter().fold(CatComplex::new(), |acc, c| acc.direct_sum(c, base));
    // first term index of each summand inside D^i
    let offset = |i: i64, k: usize| parts[..k].iter().map(|c| c.term(i).len()).sum::<usize>();
    let reps: Vec<Vec<u64>> = approx
        .summands
        .iter()
        .zip(&approx.maps)
        .map(|(&k, g)| corpus.representative(k, y, g))
        .collect::<Result<_, _>>()?;
    let g_at = |i: i64| -> Vec<u64> {
        let l = MorLayout::new(base, dcx.term(i), ycx.term(i));
        let mut v = vec![0u64; l.len()];
        for (k, &s) in approx.summands.iter().enumerate() {
            let (c, t) = corpus.objs[s];
            let gl = GradedLayout::new(base, &corpus.h.complexes[c], &corpus.h.complexes[cy], ty - t);
            let comp = gl.component(&reps[k], i + t);
            if comp.is_empty() {
                continue;
            }
            let cl = MorLayout::new(base, parts[k].term(i), ycx.term(i));
            let o = offset(i, k);
            for a in 0..parts[k].term(i).len() {
                for b in 0..ycx.term(i).len() {
                    copy_block(&mut v, &l, (o + a, b), &comp, &cl, (a, b));
                }
            }
        }
        v
    };
    let cone = mapping_cone(base, &dcx, &ycx, g_at);
    let xcx = shift_complex(base, &cone, -1);
    xcx.validate(base)?;
    let corpus2 = corpus.with_complex(COCONE, xcx.clone())?;
    let cx = corpus2.complex(COCONE)?;
    let x = corpus2.obj(cx, 0)?;
    let (incl, proj) = cone_maps(base, &dcx, &ycx, &cone);
    let pl = GradedLayout::new(base, &cone, &dcx, 1);
    let mut f = Vec::new();
    for (k, &s) in approx.summands.iter().enumerate() {
        let (c, t) = corpus.objs[s];
        let fl = GradedLayout::new(base, &xcx, &corpus.h.complexes[c], t);
        let mut v = vec![0u64; fl.len()];
        for (pos, &i) in fl.degrees.iter().enumerate() {
            let comp = pl.component(&proj, i - 1);
            if comp.is_empty() {
                continue;
            }
            let r = fl.range(i).unwrap();
            let dl = &fl.blocks[pos];
            let sl = &pl.blocks[pl.position(i - 1).unwrap()];
            let o = offset(i, k);
            let mut block = vec![0u64; dl.len()];
            for a in 0..xcx.term(i).len() {
                for b in 0..parts[k].term(i).len() {
                    copy_block(&mut block, dl, (a, b), &comp, sl, (a, o + b));
                }
            }
            v[r].copy_from_slice(&block);
        }
        f.push(corpus2.class_of(x, s, &v)?);
    }
    let il = GradedLayout::new(base, &ycx, &cone, 0);
    let hl = GradedLayout::new(base, &corpus.h.complexes[cy], &xcx, 1 - ty);
    let mut hv = vec![0u64; hl.len()];
    for &j in &hl.degrees {
        let comp = il.component(&incl, j - ty);
        if !comp.is_empty() {
            hv[hl.range(j).unwrap()].copy_from_slice(&comp);
        }
    }
    let x1 = corpus2.obj(cx, 1)?;
    let h = corpus2.class_of(y, x1, &hv)?;
    Ok(NAangleData {
        corpus: corpus2,
        x,
        middle: approx.summands,
        y,
        f,
        g: approx.maps,
        h,
    })
}
