use greenforge_exactlin::{field, ExactMatrix, Subspace};
use greenforge_quivalg::Algebra;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::TiltError;

const SEED: u64 = 0x5eed_0f_1dea;
const SPLIT_ATTEMPTS: usize = 64;

/// Isomorphism invariants of a finite-dimensional algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    /// `dim rad^k` for `k = 1, 2, …` down to the last nonzero power.
    pub rad_dims: Vec<usize>,
    pub center: usize,
    pub semisimple: usize,
    /// Sorted `dim e_i A e_j` over a complete set of primitive orthogonal idempotents.
    pub corners: Vec<usize>,
}

/// Radical as the kernel of the trace form `(a, b) ↦ tr(L_{ab})`; needs `p > dim`.
pub fn radical(a: &Algebra) -> Result<Subspace, TiltError> {
    let n = a.dim();
    let p = a.prime();
    if p as usize <= n {
        return Err(TiltError::PrimeTooSmall { prime: p, needed: n + 1 });
    }
    let traces: Vec<u64> = (0..n)
        .map(|k| {
            let e = a.basis_vec(k);
            (0..n).fold(0, |acc, j| field::add(acc, a.multiply(&e, &a.basis_vec(j))[j], p))
        })
        .collect();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let ei = a.basis_vec(i);
        let row = (0..n)
            .map(|j| {
                let prod = a.multiply(&ei, &a.basis_vec(j));
                prod.iter().zip(&traces).fold(0, |acc, (&c, &t)| field::add(acc, field::mul(c, t, p), p))
            })
            .collect();
        rows.push(row);
    }
    Ok(ExactMatrix::from_rows(p, n, &rows).kernel())
}

fn product_space(a: &Algebra, left: &Subspace, right: &Subspace) -> Subspace {
    let mut vs = Vec::new();
    for u in left.basis_vectors() {
        for v in right.basis_vectors() {
            vs.push(a.multiply(&u, &v));
        }
    }
    Subspace::from_vectors(a.prime(), a.dim(), &vs)
}

fn center(a: &Algebra) -> Subspace {
    let n = a.dim();
    let p = a.prime();
    let mut rows = Vec::new();
    for b in 0..n {
        let e = a.basis_vec(b);
        let r = a.right_mult_matrix(&e);
        let l = a.left_mult_matrix(&e);
        for i in 0..n {
            rows.push((0..n).map(|j| field::sub(r.get(i, j), l.get(i, j), p)).collect());
        }
    }
    if rows.is_empty() {
        return Subspace::zero(p, 0);
    }
    ExactMatrix::from_rows(p, n, &rows).kernel()
}

/// Monic minimal polynomial of `r` in the corner with unit `e` (low degree first).
fn min_poly(a: &Algebra, e: &[u64], r: &[u64]) -> Vec<u64> {
    let p = a.prime();
    let mut powers = vec![e.to_vec()];
    loop {
        let next = a.multiply(powers.last().unwrap(), r);
        if let Some(c) = coords_in(&powers, &next, p) {
            let mut poly: Vec<u64> = c.into_iter().map(|v| field::neg(v, p)).collect();
            poly.push(1);
            return poly;
        }
        powers.push(next);
    }
}

fn coords_in(vs: &[Vec<u64>], target: &[u64], p: u64) -> Option<Vec<u64>> {
    let cols = ExactMatrix::from_rows(p, target.len(), vs).transpose();
    let rhs = ExactMatrix::from_rows(p, 1, &target.iter().map(|&c| vec![c]).collect::<Vec<_>>());
    cols.solve(&rhs).ok().flatten().map(|s| s.column(0))
}

fn poly_trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    f
}

fn poly_mul(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = field::add(out[i + j], field::mul(a, b, p), p);
        }
    }
    poly_trim(out)
}

fn poly_sub(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; f.len().max(g.len())];
    for (i, &c) in f.iter().enumerate() {
        out[i] = c;
    }
    for (i, &c) in g.iter().enumerate() {
        out[i] = field::sub(out[i], c, p);
    }
    poly_trim(out)
}

/// Quotient and remainder of `f` by nonzero `g`.
fn poly_divmod(f: &[u64], g: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let g = poly_trim(g.to_vec());
    let mut r = poly_trim(f.to_vec());
    if r.len() < g.len() {
        return (vec![0], r);
    }
    let lead = field::inv(*g.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - g.len() + 1];
    for k in (0..q.len()).rev() {
        let c = field::mul(r[k + g.len() - 1], lead, p);
        q[k] = c;
        for (i, &gc) in g.iter().enumerate() {
            r[k + i] = field::sub(r[k + i], field::mul(c, gc, p), p);
        }
    }
    r.truncate((g.len() - 1).max(1));
    (poly_trim(q), poly_trim(r))
}

/// `(u, v)` with `u f + v g = 1` for coprime `f`, `g`.
fn bezout(f: &[u64], g: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (f.to_vec(), g.to_vec());
    let (mut u0, mut u1) = (vec![1u64], vec![0u64]);
    let (mut v0, mut v1) = (vec![0u64], vec![1u64]);
    while !(r1.len() == 1 && r1[0] == 0) {
        let (q, r) = poly_divmod(&r0, &r1, p);
        let u2 = poly_sub(&u0, &poly_mul(&q, &u1, p), p);
        let v2 = poly_sub(&v0, &poly_mul(&q, &v1, p), p);
        (r0, r1) = (r1, r);
        (u0, u1) = (u1, u2);
        (v0, v1) = (v1, v2);
    }
    let c = field::inv(r0[0], p);
    let scale = |h: Vec<u64>| h.into_iter().map(|x| field::mul(x, c, p)).collect();
    (scale(u0), scale(v0))
}

fn eval_poly(a: &Algebra, e: &[u64], r: &[u64], f: &[u64]) -> Vec<u64> {
    let p = a.prime();
    let mut acc = vec![0u64; a.dim()];
    for &c in f.iter().rev() {
        acc = a.multiply(&acc, r);
        for (o, &ev) in acc.iter_mut().zip(e) {
            *o = field::add(*o, field::mul(c, ev, p), p);
        }
    }
    acc
}

/// Splits `e` into two nonzero orthogonal idempotents using a random element
/// of `eAe` whose minimal polynomial has a root and a coprime cofactor.
fn split(a: &Algebra, e: &[u64], rng: &mut ChaCha8Rng) -> Option<(Vec<u64>, Vec<u64>)> {
    let p = a.prime();
    let corner = a.sandwich(e, e);
    for _ in 0..SPLIT_ATTEMPTS {
        let c: Vec<u64> = (0..corner.dim()).map(|_| rng.gen_range(0..p)).collect();
        let r = corner.combine(&c);
        let f = min_poly(a, e, &r);
        if f.len() <= 2 {
            continue;
        }
        let eval = |x: u64| f.iter().rev().fold(0, |acc, &c| field::add(field::mul(acc, x, p), c, p));
        let Some(root) = (0..p).find(|&x| eval(x) == 0) else {
            continue;
        };
        let lin = vec![field::neg(root, p), 1];
        let (mut f1, mut f2) = (vec![1u64], f.clone());
        loop {
            let (q, rem) = poly_divmod(&f2, &lin, p);
            if rem.iter().any(|&c| c != 0) {
                break;
            }
            f1 = poly_mul(&f1, &lin, p);
            f2 = q;
        }
        if f2.len() <= 1 {
            continue;
        }
        let (_, v) = bezout(&f1, &f2, p);
        let e1 = eval_poly(a, e, &r, &poly_mul(&v, &f2, p));
        let e2: Vec<u64> = e.iter().zip(&e1).map(|(&x, &y)| field::sub(x, y, p)).collect();
        return Some((e1, e2));
    }
    None
}

/// Complete set of primitive orthogonal idempotents summing to 1.
pub fn primitive_idempotents(a: &Algebra, rad: &Subspace) -> Result<Vec<Vec<u64>>, TiltError> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut todo = vec![a.unit()];
    let mut done = Vec::new();
    while let Some(e) = todo.pop() {
        let corner = a.sandwich(&e, &e);
        let erade = product_space(a, &product_space(a, &Subspace::from_vectors(a.prime(), a.dim(), &[e.clone()]), rad), &Subspace::from_vectors(a.prime(), a.dim(), &[e.clone()]));
        if corner.dim() - erade.dim() == 1 {
            done.push(e);
            continue;
        }
        match split(a, &e, &mut rng) {
            Some((e1, e2)) => {
                todo.push(e1);
                todo.push(e2);
            }
            None => return Err(TiltError::NotSplitOverField { corner_dim: corner.dim() }),
        }
    }
    Ok(done)
}

pub fn fingerprint(a: &Algebra) -> Result<Fingerprint, TiltError> {
    let n = a.dim();
    if n == 0 {
        return Ok(Fingerprint { dim: 0, rad_dims: vec![], center: 0, semisimple: 0, corners: vec![] });
    }
    let rad = radical(a)?;
    let mut rad_dims = Vec::new();
    let mut power = rad.clone();
    while !power.is_zero() {
        if rad_dims.len() > n {
            return Err(TiltError::Invalid("radical is not nilpotent".into()));
        }
        rad_dims.push(power.dim());
        power = product_space(a, &power, &rad);
    }
    let idems = primitive_idempotents(a, &rad)?;
    let mut corners = Vec::new();
    for e in &idems {
        for f in &idems {
            corners.push(a.sandwich(e, f).dim());
        }
    }
    corners.sort_unstable();
    Ok(Fingerprint {
        dim: n,
        rad_dims,
        center: center(a).dim(),
        semisimple: n - rad.dim(),
        corners,
    })
}
