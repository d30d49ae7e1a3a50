mod common;

use common::{corpus, elem, P};
use greenforge_approx::{check_vanishing_hypotheses, fg_comparison_check, ApproxContext, ApproxError};
use greenforge_exactlin::Subspace;
use greenforge_phiorbit::AdmissibleSet;

fn ctx0(c: &common::Corpus) -> ApproxContext<'_> {
    ApproxContext::new(&c.cat, c.m(), AdmissibleSet::zero(), 1)
}

#[test]
fn definitional_and_approximation_ideals_agree() {
    let c = corpus(-1..=0);
    let ctx = ctx0(&c);
    for &a in &c.four() {
        let full = ctx.right_approximation(a).unwrap();
        let pruned = ctx.right_approximation_pruned(a).unwrap();
        assert!(ctx.is_right_approx(a, &full).unwrap());
        assert!(ctx.is_right_approx(a, &pruned).unwrap());
        for &b in &c.four() {
            let gh = ctx.ghost(a, b, 0).unwrap();
            assert_eq!(gh, ctx.ghost_via_approx(a, b, &full));
            assert_eq!(gh, ctx.ghost_via_approx(a, b, &pruned));
            let left = ctx.left_approximation_pruned(b).unwrap();
            assert!(ctx.is_left_approx(b, &left).unwrap());
            let cg = ctx.coghost(a, b, 0).unwrap();
            assert_eq!(cg, ctx.coghost_via_approx(a, b, &left));
            assert_eq!(cg, ctx.coghost_via_approx(a, b, &ctx.left_approximation(b).unwrap()));
        }
    }
}

#[test]
fn pruned_approximation_of_two_term_complex() {
    let c = corpus(-1..=0);
    let ctx = ctx0(&c);
    let x = c.obj(0, 0);
    let full = ctx.right_approximation(x).unwrap();
    assert_eq!(full.summands.len(), 4);
    let pruned = ctx.right_approximation_pruned(x).unwrap();
    assert_eq!(pruned.summands, c.m());
    // A stalk: D = A through the identity.
    let a = c.obj(2, 0);
    let pa = ctx.right_approximation_pruned(a).unwrap();
    assert_eq!(pa.summands, vec![a]);
}

#[test]
fn vanishing_on_add_m() {
    let c = corpus(-1..=0);
    let ctx = ctx0(&c);
    for &m in &c.m() {
        for &y in &c.four() {
            assert!(ctx.ghost(m, y, 0).unwrap().is_zero());
            assert!(ctx.coghost(y, m, 0).unwrap().is_zero());
            assert_eq!(ctx.fcogh(m, y, 0).unwrap(), ctx.coghost(m, y, 0).unwrap());
            assert_eq!(ctx.fgh(y, m, 0).unwrap(), ctx.ghost(y, m, 0).unwrap());
            assert!(ctx.factor(y, m, 0).unwrap().is_full());
        }
    }
}

#[test]
fn ideals_are_closed_and_monotone() {
    let c = corpus(-1..=0);
    let ctx = ctx0(&c);
    for kind in 0..5 {
        let fam = ctx
            .family(|cx, a, b| match kind {
                0 => cx.ghost(a, b, 0),
                1 => cx.coghost(a, b, 0),
                2 => cx.factor(a, b, 0),
                3 => cx.fgh(a, b, 0),
                _ => cx.fcogh(a, b, 0),
            })
            .unwrap();
        fam.check_closed(&c.cat).unwrap();
    }
    for &a in &c.four() {
        for &b in &c.four() {
            let (gh, fa, fg) = (ctx.ghost(a, b, 0).unwrap(), ctx.factor(a, b, 0).unwrap(), ctx.fgh(a, b, 0).unwrap());
            assert!(fg.is_subspace_of(&gh) && fg.is_subspace_of(&fa));
            assert_eq!(fg, gh.intersect(&fa).unwrap());
        }
    }
}

/// Factor space of `Hom_K(X•, X•)` through `A ⊕ Σ^{-1}A`, from chain-level pairs
/// `(f⁰, f¹)` in `A × A`: composites through `A` are `(a·b, 0)` with
/// `a ∈ Hom(X•, A)`, `b ∈ Hom(A, X•)`; through `Σ^{-1}A` they are `(0, c·b)`.
fn brute_factor_dim() -> usize {
    let c = corpus(0..=0);
    let a = &c.alg;
    let x = elem(a, "x");
    let pair = |u: Vec<u64>, v: Vec<u64>| [u, v].concat();
    let all: Vec<Vec<u64>> = (0..4).map(|i| a.basis_vec(i)).collect();
    let kills_x = |v: &Vec<u64>| a.multiply(v, &x).iter().all(|&c| c == 0);
    let to_a: Vec<&Vec<u64>> = all.iter().collect();
    let from_a: Vec<&Vec<u64>> = all.iter().filter(|v| kills_x(v)).collect();
    let mut comps = Vec::new();
    for u in &to_a {
        for v in &from_a {
            comps.push(pair(a.multiply(u, v), a.zero()));
            comps.push(pair(a.zero(), a.multiply(v, u)));
        }
    }
    let null: Vec<Vec<u64>> = all.iter().map(|r| pair(a.multiply(&x, r), a.multiply(r, &x))).collect();
    let null = Subspace::from_vectors(P, 8, &null);
    let span = Subspace::from_vectors(P, 8, &comps).sum(&null).unwrap();
    span.dim() - null.dim()
}

#[test]
fn factor_space_matches_chain_level_oracle() {
    assert_eq!(brute_factor_dim(), 3);
    let c = corpus(-1..=0);
    let x = c.obj(0, 0);
    assert_eq!(ctx0(&c).factor(x, x, 0).unwrap().dim(), 3);
    assert!(ctx0(&c).factor(x, c.obj(1, 0), 0).unwrap().dim() <= c.cat.dim(x, c.obj(1, 0)));
}

#[test]
fn vanishing_hypotheses_per_shift() {
    let c = corpus(-3..=3);
    let x = c.obj(0, 0);
    let y = c.obj(1, 0);
    let ctx = ApproxContext::new(&c.cat, c.m(), AdmissibleSet::zero(), 1);
    assert!(check_vanishing_hypotheses(&ctx, &[y], &[x]).unwrap().holds);
    let phi = AdmissibleSet::new(&[0, 1]).unwrap();
    let d1 = ApproxContext::new(&c.cat, c.m(), phi.clone(), 1);
    let r = check_vanishing_hypotheses(&d1, &[y], &[x]).unwrap();
    assert!(!r.holds);
    assert_eq!(r.m_to_x, vec![(1, 2)]);
    assert_eq!(r.y_to_m, vec![(1, 2)]);
    let d2 = ApproxContext::new(&c.cat, c.m(), phi, 2);
    assert!(check_vanishing_hypotheses(&d2, &[y], &[x]).unwrap().holds);
}

#[test]
fn fg_gate_and_equality() {
    let c = corpus(-3..=3);
    let (x, y) = (c.obj(0, 0), c.obj(1, 0));
    let mut v = c.m();
    v.push(x);
    let ctx = ApproxContext::new(&c.cat, c.m(), AdmissibleSet::zero(), 1);
    assert!(fg_comparison_check(&ctx, &v, &[y], &[x], true).unwrap().equal);
    let phi = AdmissibleSet::new(&[0, 1]).unwrap();
    let d2 = ApproxContext::new(&c.cat, c.m(), phi.clone(), 2);
    assert!(fg_comparison_check(&d2, &v, &[y], &[x], true).unwrap().equal);
    let d1 = ApproxContext::new(&c.cat, c.m(), phi, 1);
    assert!(matches!(fg_comparison_check(&d1, &v, &[y], &[x], true), Err(ApproxError::HypothesesFailed(_))));
    assert!(matches!(fg_comparison_check(&ctx, &v, &[y], &[x], false), Err(ApproxError::HypothesesFailed(_))));
}
