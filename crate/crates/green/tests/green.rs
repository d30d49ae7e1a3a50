mod common;

use common::{corpus, P};
use greenforge_approx::ApproxContext;
use greenforge_exactlin::Subspace;
use greenforge_green::{
    build_green, build_green_unchecked, build_ideal, free_shift_category, idempotent_columns, corner_module_check,
    quotient_algebra, IdealBasis, IdealKind,
};
use greenforge_phiorbit::{enumerate_admissible, AdmissibleSet};

#[test]
fn stalk_green_algebra_two_degrees() {
    let c = corpus(-1..=1);
    let a = c.obj(2, 0);
    let phi = AdmissibleSet::new(&[0, 1]).unwrap();
    let g = build_green(&c.cat, &[a], &phi, 1).unwrap();
    assert_eq!(g.dim(), 8);
    assert_eq!(g.block(0, 0).len(), 4);
    assert_eq!(g.block(1, 1).len(), 4);
    assert_eq!(g.block(1, 0).len(), 0);
    assert_eq!(g.block(0, 1).len(), 0);
    assert_eq!(idempotent_columns(&g).unwrap(), vec![(0, 4), (1, 4)]);
}

#[test]
fn single_degree_is_endomorphism_algebra() {
    let c = corpus(-1..=0);
    let u = vec![c.obj(2, 0), c.obj(2, -1), c.obj(0, 0)];
    let g = build_green(&c.cat, &u, &AdmissibleSet::zero(), 1).unwrap();
    let end = c.cat.endomorphism_algebra(&u);
    assert_eq!(g.dim(), end.dim());
    assert_eq!(g.algebra.structure_constants(), end.structure_constants());
    assert_eq!(idempotent_columns(&g).unwrap(), vec![(0, end.dim())]);
}

#[test]
fn every_admissible_set_gives_an_algebra_on_the_corpus() {
    let c = corpus(-4..=4);
    let u = vec![c.obj(2, 0), c.obj(2, -1), c.obj(0, 0)];
    for phi in enumerate_admissible(-3, 3).unwrap() {
        let g = build_green(&c.cat, &u, &phi, 1).unwrap();
        for t in &g.block_index {
            assert!(phi.contains(t.i - t.j));
        }
        let cols = idempotent_columns(&g).unwrap();
        assert_eq!(cols.iter().map(|c| c.1).sum::<usize>(), g.dim());
    }
}

#[test]
fn non_admissible_free_table_is_not_associative() {
    let cat = free_shift_category(P, -8, 8);
    let g = build_green_unchecked(&cat, &[cat.shifted(0, 0).unwrap()], &[0, 1, 2, 4], 1).unwrap();
    assert!(g.algebra.check_associative().is_err());
    let ok = AdmissibleSet::new(&[0, 1, 2, 3]).unwrap();
    build_green(&cat, &[8], &ok, 1).unwrap();
}

#[test]
fn module_homs_between_columns() {
    let c = corpus(-2..=2);
    let a = c.obj(2, 0);
    let phi = AdmissibleSet::new(&[0, 1]).unwrap();
    let g = build_green(&c.cat, &[a], &phi, 1).unwrap();
    for i in [0, 1] {
        for j in [0, 1] {
            let r = corner_module_check(&g, &[0], &[0], i, j);
            assert!(r.holds(), "{i} {j} {r:?}");
        }
    }
    let u = vec![c.obj(2, 0), c.obj(2, -1), c.obj(0, 0)];
    let g = build_green(&c.cat, &u, &phi, 1).unwrap();
    let r = corner_module_check(&g, &[2], &[0, 1], 1, 0);
    assert!(r.holds(), "{r:?}");
    assert!(r.e_dim > 0);
    assert!(corner_module_check(&g, &[0, 2], &[2], 0, 1).holds());
}

#[test]
fn ideals_and_quotients() {
    let c = corpus(-1..=0);
    let u = vec![c.obj(2, 0), c.obj(2, -1), c.obj(0, 0)];
    let ctx = ApproxContext::new(&c.cat, c.m(), AdmissibleSet::zero(), 1);
    let g = build_green(&c.cat, &u, &AdmissibleSet::zero(), 1).unwrap();
    let i = build_ideal(&g, &ctx, IdealKind::Fcogh).unwrap();
    let j = build_ideal(&g, &ctx, IdealKind::Fgh).unwrap();
    let mut fc = 0;
    for &x in &u {
        for &y in &u {
            fc += ctx.fcogh(x, y, 0).unwrap().dim();
        }
    }
    assert_eq!(i.space.dim(), fc);
    for ideal in [&i, &j] {
        let q = quotient_algebra(&g.algebra, ideal).unwrap();
        assert_eq!(q.dim(), g.dim() - ideal.space.dim());
    }
    let zero = IdealBasis { space: Subspace::zero(P, g.dim()), block_diagonal: true };
    assert_eq!(quotient_algebra(&g.algebra, &zero).unwrap().dim(), g.dim());
}

#[test]
fn radical_of_local_algebra_gives_ground_field() {
    let c = corpus(0..=0);
    let e = c.cat.endomorphism_algebra(&[c.obj(2, 0)]);
    let rad: Vec<Vec<u64>> = (0..e.dim()).filter(|&k| e.basis_vec(k) != e.unit()).map(|k| e.basis_vec(k)).collect();
    let ideal = IdealBasis { space: Subspace::from_vectors(P, e.dim(), &rad), block_diagonal: false };
    assert_eq!(quotient_algebra(&e, &ideal).unwrap().dim(), 1);
}
