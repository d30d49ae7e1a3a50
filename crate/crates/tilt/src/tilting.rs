use greenforge_approx::ApproxContext;
use greenforge_catcore::{CatComplex, ComputedCategory, HomotopyCategory, IdealFamily, MorLayout, QuotientCategory};
use greenforge_exactlin::Subspace;
use greenforge_green::IdealKind;
use greenforge_phiorbit::{f_power, AdmissibleSet};
use greenforge_quivalg::Algebra;

use crate::{NAangleData, TiltError};

/// Objects `(w, i)` for `w ∈ W`, `i ∈ Φ`, with
/// `hom((u, i), (v, j)) = Hom(u, F^{i−j} v)` when `i − j ∈ Φ` and zero otherwise;
/// composites leaving Φ vanish. Object `(w_a, i)` has index `pos(i)·|W| + a`.
pub struct GreenCategory {
    pub cat: ComputedCategory,
    pub w: Vec<usize>,
    pub phi: Vec<i64>,
}

impl GreenCategory {
    pub fn build(base: &ComputedCategory, w: &[usize], phi: &AdmissibleSet, d: i64) -> Result<GreenCategory, TiltError> {
        let phi_v = phi.elements().to_vec();
        let nw = w.len();
        let objs: Vec<(usize, i64)> = phi_v.iter().flat_map(|&i| (0..nw).map(move |a| (a, i))).collect();
        let fp = |x: usize, k: i64| f_power(base, x, d, k);
        let mut targets = std::collections::HashMap::new();
        for &(_, i) in &objs {
            for &(b, j) in &objs {
                if phi.contains(i - j) {
                    targets.insert((b, i - j), fp(w[b], i - j)?);
                }
            }
        }
        let n = objs.len();
        let mut dims = Vec::with_capacity(n * n);
        for &(a, i) in &objs {
            for &(b, j) in &objs {
                dims.push(targets.get(&(b, i - j)).map_or(0, |&t| base.dim(w[a], t)));
            }
        }
        let identities = objs.iter().map(|&(a, _)| base.identity(w[a]).to_vec()).collect();
        let names = objs.iter().map(|&(a, i)| format!("{}@{i}", base.objects()[w[a]])).collect();
        let unit = |len: usize, k: usize| {
            let mut v = vec![0u64; len];
            v[k] = 1;
            v
        };
        let cat = ComputedCategory::build(base.prime(), names, dims, identities, |x, y, z, s, t| {
            let ((a, i), (b, j), (c, l)) = (objs[x], objs[y], objs[z]);
            let Some(&tz) = targets.get(&(c, i - l)) else {
                return vec![];
            };
            let ty = targets[&(b, i - j)];
            let gy = targets[&(c, j - l)];
            let out = base.compose(w[a], ty, tz, &unit(base.dim(w[a], ty), s), &unit(base.dim(w[b], gy), t));
            out
        });
        Ok(GreenCategory { cat, w: w.to_vec(), phi: phi_v })
    }

    pub fn index(&self, a: usize, i: i64) -> usize {
        self.phi.iter().position(|&v| v == i).expect("degree in Φ") * self.w.len() + a
    }

    /// Block-diagonal ideal with the degree-0 `kind` ideal of `ctx` on each `(i, i)`.
    pub fn block_ideal(&self, ctx: &ApproxContext, kind: IdealKind) -> Result<IdealFamily, TiltError> {
        let nw = self.w.len();
        let mut diag = Vec::with_capacity(nw * nw);
        for &x in &self.w {
            for &y in &self.w {
                diag.push(match kind {
                    IdealKind::Fcogh => ctx.fcogh(x, y, 0)?,
                    IdealKind::Fgh => ctx.fgh(x, y, 0)?,
                });
            }
        }
        let p = self.cat.prime();
        Ok(IdealFamily::from_fn(&self.cat, |x, y| {
            if x / nw == y / nw {
                diag[(x % nw) * nw + y % nw].clone()
            } else {
                Subspace::zero(p, self.cat.dim(x, y))
            }
        }))
    }
}

/// Self-orthogonality entry: `dim Hom(T̃_i, T̃_j[m])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct OrthEntry {
    pub i: i64,
    pub j: i64,
    pub shift: i64,
    pub dim: usize,
}

/// The complexes `T̃_i = (x →f D ⊕ M)` in degrees 0 and 1, placed at level `i`
/// of the Green category modulo `I`.
pub struct TiltingSet {
    pub green: GreenCategory,
    pub quotient: QuotientCategory,
    pub ideal_dim: usize,
    pub h: HomotopyCategory,
    pub orth: Vec<OrthEntry>,
}

/// Builds `T̃_i` for `i ∈ Φ` over the Green category of `W = M ⊕ x ⊕ D` modulo
/// the block-diagonal `Fcogh_M` ideal and checks `Hom(T̃_i, T̃_j[m]) = 0` for
/// `0 < |m| ≤ orth_bound`.
pub fn build_t(data: &NAangleData, m: &[usize], phi: &AdmissibleSet, d: i64, orth_bound: i64) -> Result<TiltingSet, TiltError> {
    let cat = &data.corpus.cat;
    let mut w: Vec<usize> = m.to_vec();
    w.push(data.x);
    for &k in &data.middle {
        if !w.contains(&k) {
            w.push(k);
        }
    }
    let green = GreenCategory::build(cat, &w, phi, d)?;
    let plain = ApproxContext::new(cat, m.to_vec(), AdmissibleSet::zero(), d);
    let ideal = green.block_ideal(&plain, IdealKind::Fcogh)?;
    let quotient = green.cat.quotient(&ideal)?;
    let q = &quotient.cat;
    let pos = |o: usize| w.iter().position(|&v| v == o).expect("in W");
    let mut complexes = Vec::new();
    for &i in &green.phi {
        let src = vec![green.index(pos(data.x), i)];
        let mut tgt: Vec<usize> = data.middle.iter().map(|&k| green.index(pos(k), i)).collect();
        tgt.extend(m.iter().map(|&k| green.index(pos(k), i)));
        let l = MorLayout::new(q, &src, &tgt);
        let mut v = vec![0u64; l.len()];
        for (k, f) in data.f.iter().enumerate() {
            v[l.block(0, k)].copy_from_slice(&quotient.class(src[0], tgt[k], f));
        }
        let mut c = CatComplex::new();
        c.set_term(0, src);
        c.set_term(1, tgt);
        c.set_diff(0, v);
        complexes.push(c);
    }
    let h = HomotopyCategory::new(q.clone(), complexes)?;
    let mut orth = Vec::new();
    for (a, &i) in green.phi.iter().enumerate() {
        for (b, &j) in green.phi.iter().enumerate() {
            for s in (1..=orth_bound).flat_map(|s| [-s, s]) {
                let dim = h.hom(a, b, s)?.dim();
                orth.push(OrthEntry { i, j, shift: s, dim });
            }
        }
    }
    if let Some(e) = orth.iter().find(|e| e.dim != 0) {
        return Err(TiltError::SelfOrthFailed { i: e.i, j: e.j, shift: e.shift, dim: e.dim });
    }
    Ok(TiltingSet { green, quotient, ideal_dim: ideal.total_dim(), h, orth })
}

/// `End(⊕_{i∈Φ} T̃_i)` in the homotopy category over the quotient, with the
/// dimension of each block `Hom(T̃_i, T̃_j)`.
pub fn endo_in_quotient(ts: &TiltingSet) -> Result<(Algebra, Vec<(i64, i64, usize)>), TiltError> {
    let n = ts.green.phi.len();
    let objs: Vec<(usize, i64)> = (0..n).map(|k| (k, 0)).collect();
    let names = ts.green.phi.iter().map(|i| format!("T{i}")).collect();
    let cat = ts.h.category_of_complexes(&objs, names)?;
    let all: Vec<usize> = (0..n).collect();
    let mut blocks = Vec::new();
    for (a, &i) in ts.green.phi.iter().enumerate() {
        for (b, &j) in ts.green.phi.iter().enumerate() {
            blocks.push((i, j, cat.dim(a, b)));
        }
    }
    Ok((cat.endomorphism_algebra(&all), blocks))
}
