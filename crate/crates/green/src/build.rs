use std::ops::Range;

use greenforge_catcore::{ComputedCategory, ShiftTags};
use greenforge_phiorbit::{f_power, AdmissibleSet};
use greenforge_quivalg::Algebra;

use crate::GreenError;

/// Basis element of block `(i, j)`: token `t` of `Hom(x_a, F^{i−j} x_b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token {
    pub i: i64,
    pub j: i64,
    pub a: usize,
    pub b: usize,
    pub t: usize,
}

/// `𝒢^{Φ,F}(X)` for `X = ⊕ objects`, `F = Σ^d`: block `(i, j)` is
/// `E^{i−j}(X) = Hom(X, F^{i−j} X)` when `i − j ∈ Φ` and zero otherwise.
#[derive(Debug, Clone)]
pub struct GreenAlgebra {
    pub phi: Vec<i64>,
    pub d: i64,
    pub objects: Vec<usize>,
    pub algebra: Algebra,
    pub block_index: Vec<Token>,
}

impl GreenAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Basis positions of block `(i, j)`.
    pub fn block(&self, i: i64, j: i64) -> Range<usize> {
        let start = self.block_index.iter().position(|t| t.i == i && t.j == j);
        match start {
            None => 0..0,
            Some(s) => {
                let len = self.block_index[s..].iter().take_while(|t| t.i == i && t.j == j).count();
                s..s + len
            }
        }
    }

    /// Basis positions of the `(a, b)` sub-block of block `(i, j)`.
    pub fn sub_block(&self, i: i64, j: i64, a: usize, b: usize) -> Range<usize> {
        let r = self.block(i, j);
        let s = r.clone().find(|&k| self.block_index[k].a == a && self.block_index[k].b == b);
        match s {
            None => 0..0,
            Some(s) => {
                let len = self.block_index[s..r.end].iter().take_while(|t| t.a == a && t.b == b).count();
                s..s + len
            }
        }
    }

    /// Idempotent `e_i` of `Σ_{i∈Φ} e_i = 1`.
    pub fn idempotent(&self, i: i64) -> Vec<u64> {
        let k = self.phi.iter().position(|&v| v == i).expect("degree in Φ");
        self.algebra.idempotents()[k].clone()
    }
}

/// Builds `𝒢^{Φ,F}(⊕ objs)` and verifies associativity and unit exhaustively.
pub fn build_green(cat: &ComputedCategory, objs: &[usize], phi: &AdmissibleSet, d: i64) -> Result<GreenAlgebra, GreenError> {
    let g = build_green_unchecked(cat, objs, phi.elements(), d)?;
    if let Err((a, b, c)) = g.algebra.check_associative() {
        let l = g.algebra.labels();
        return Err(GreenError::NotAssociative(l[a].clone(), l[b].clone(), l[c].clone()));
    }
    g.algebra.check_unit().map_err(GreenError::Invalid)?;
    Ok(g)
}

/// Block assembly without the admissibility or associativity checks; `phi` is
/// any finite set containing 0.
pub fn build_green_unchecked(cat: &ComputedCategory, objs: &[usize], phi: &[i64], d: i64) -> Result<GreenAlgebra, GreenError> {
    let mut phi = phi.to_vec();
    phi.sort_unstable();
    phi.dedup();
    if !phi.contains(&0) {
        return Err(GreenError::Invalid("0 is not in the degree set".into()));
    }
    let in_phi = |k: i64| phi.binary_search(&k).is_ok();
    let fp = |x: usize, k: i64| f_power(cat, x, d, k);
    let mut tokens = Vec::new();
    let mut labels = Vec::new();
    for &i in &phi {
        for &j in &phi {
            if !in_phi(i - j) {
                continue;
            }
            for (a, &xa) in objs.iter().enumerate() {
                for (b, &xb) in objs.iter().enumerate() {
                    let tgt = fp(xb, i - j)?;
                    for t in 0..cat.dim(xa, tgt) {
                        tokens.push(Token { i, j, a, b, t });
                        labels.push(format!("[{i},{j}]{}->{}#{t}", cat.objects()[xa], cat.objects()[tgt]));
                    }
                }
            }
        }
    }
    let n = tokens.len();
    let start = |i: i64, j: i64, a: usize, b: usize| tokens.iter().position(|t| (t.i, t.j, t.a, t.b) == (i, j, a, b));
    let idempotents = phi
        .iter()
        .map(|&i| {
            let mut e = vec![0u64; n];
            for (a, &x) in objs.iter().enumerate() {
                if let Some(s) = start(i, i, a, a) {
                    e[s..s + cat.dim(x, x)].copy_from_slice(cat.identity(x));
                }
            }
            e
        })
        .collect();
    // resolve every object used by products before building
    for &k in &phi {
        for &x in objs {
            fp(x, k)?;
        }
    }
    for &l in &phi {
        for &t in &phi {
            if in_phi(l - t) {
                for &x in objs {
                    fp(x, l - t)?;
                }
            }
        }
    }
    let unit = |len: usize, k: usize| {
        let mut v = vec![0u64; len];
        v[k] = 1;
        v
    };
    let algebra = Algebra::from_products(cat.prime(), labels, idempotents, vec![0; n], |u, v| {
        let (f, g) = (tokens[u], tokens[v]);
        let mut out = vec![0u64; n];
        if f.j != g.i || f.b != g.a || !in_phi(f.i - g.j) {
            return out;
        }
        let x = objs[f.a];
        let y = fp(objs[f.b], f.i - f.j).expect("resolved");
        let z = fp(objs[g.b], f.i - g.j).expect("resolved");
        let gy = fp(objs[g.b], g.i - g.j).expect("resolved");
        let prod = cat.compose(x, y, z, &unit(cat.dim(x, y), f.t), &unit(cat.dim(objs[g.a], gy), g.t));
        if let Some(s) = start(f.i, g.j, f.a, g.b) {
            out[s..s + prod.len()].copy_from_slice(&prod);
        }
        out
    });
    Ok(GreenAlgebra {
        phi,
        d,
        objects: objs.to_vec(),
        algebra,
        block_index: tokens,
    })
}

/// One object `x` with shifts `x[k]`, `lo ≤ k ≤ hi`, every hom one-dimensional
/// and every composite of basis tokens equal to the basis token.
pub fn free_shift_category(p: u64, lo: i64, hi: i64) -> ComputedCategory {
    let tags: Vec<i64> = (lo..=hi).collect();
    let n = tags.len();
    let names = tags.iter().map(|t| format!("x[{t}]")).collect();
    let cat = ComputedCategory::build(p, names, vec![1; n * n], vec![vec![1]; n], |_, _, _, _, _| vec![1]);
    cat.with_shift(ShiftTags::new(tags.iter().map(|&t| (0, t)).collect()))
}
