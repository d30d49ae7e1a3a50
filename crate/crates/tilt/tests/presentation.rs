use greenforge_quivalg::{build_algebra, Relation};
use greenforge_tilt::*;

const P: u64 = 101;

fn identity_images(a: &greenforge_quivalg::Algebra) -> GeneratorImages {
    let label = |l: &str| a.basis_vec(a.labels().iter().position(|x| x == l).unwrap());
    GeneratorImages {
        vertices: a.idempotents().to_vec(),
        arrows: ["a1", "a2", "b1", "b2", "b3", "b4"].iter().map(|l| label(l)).collect(),
    }
}

#[test]
fn presented_algebra_with_identity_images() {
    let (a, bound) = build_presented(2, 2, P, false).unwrap();
    let r = presentation_check(&a, &lambda_spec(2, 2, bound), &identity_images(&a));
    assert!(r.holds, "{r:?}");
    assert_eq!(r.presented_dim, Some(20));
}

#[test]
fn perturbed_relations_fail() {
    let (a, bound) = build_presented(2, 2, P, false).unwrap();
    let mut spec = lambda_spec(2, 2, bound);
    spec.relations[8] = Relation::new(&[(1, "b3*b1*b3*b1"), (-1, "b2*b4*b2*b4")]);
    let r = presentation_check(&a, &spec, &identity_images(&a));
    assert!(!r.holds);
    assert!(r.witness.unwrap().contains("b3*b1*b3*b1"));
}

#[test]
fn wrong_vertex_images_fail() {
    let (a, bound) = build_presented(2, 2, P, false).unwrap();
    let mut im = identity_images(&a);
    im.vertices.swap(0, 2);
    assert!(!presentation_check(&a, &lambda_spec(2, 2, bound), &im).holds);
}

#[test]
fn printed_relations_present_the_unquotiented_ring() {
    let (_, bound) = build_presented(2, 2, P, false).unwrap();
    let c = example5_corpus(2, 2, P, -3..=3).unwrap();
    let (k, im) = lambda_with(&c, LambdaSide::X, false).unwrap();
    let r = presentation_check(&k, &lambda_spec(2, 2, bound), &im);
    assert!(r.holds, "{r:?}");
    assert_eq!(k.dim(), 20);
}

#[test]
fn ghost_quotient_is_one_dimension_smaller() {
    for (n, s) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        let (pres, bound) = build_presented(n, s, P, false).unwrap();
        let c = example5_corpus(n, s, P, -3..=3).unwrap();
        let (lx, ix) = lambda(&c, LambdaSide::X).unwrap();
        assert_eq!(lx.dim() + 1, pres.dim(), "n={n} s={s}");
        // relations and generation hold; only the dimension check fails
        let r = presentation_check(&lx, &lambda_spec(n, s, bound), &ix);
        assert!(r.witness.unwrap().starts_with("presented algebra has dim"));
        let (red, rb) = build_presented(n, s, P, true).unwrap();
        assert_eq!(red.dim(), lx.dim());
        assert!(presentation_check(&lx, &lambda_spec_reduced(n, s, rb), &ix).holds, "n={n} s={s}");
    }
}

#[test]
fn both_sides_share_the_presentation() {
    let (_, rb) = build_presented(2, 2, P, true).unwrap();
    let c = example5_corpus(2, 2, P, -3..=3).unwrap();
    let (ly, iy) = lambda(&c, LambdaSide::Y).unwrap();
    assert!(presentation_check(&ly, &lambda_spec_reduced(2, 2, rb), &iy).holds);
}

#[test]
fn length_bound_is_large_enough() {
    let (a, bound) = build_presented(2, 2, P, false).unwrap();
    assert_eq!(build_algebra(&lambda_spec(2, 2, bound + 3), P).unwrap().dim(), a.dim());
}

#[test]
fn example5_report() {
    let r = example5(2, 2, P, 4).unwrap();
    assert!(!r.presentation_check);
    assert!(r.presentation_unquotiented.holds);
    assert!(r.presentation_reduced.holds);
    assert_eq!((r.presented_dim, r.lambda_x_dim, r.lambda_y_dim), (20, 19, 19));
    assert!(r.fingerprints_equal);
    assert!(r.cocone_matches_y);
    assert_eq!(r.theorem.status, Status::Pass);
    assert!(!r.passed);
}

#[test]
fn unequal_exponents_keep_derived_invariants() {
    // not isomorphic, but center and number of simples agree
    let r = example5(3, 2, P, 2).unwrap();
    assert!(!r.fingerprints_equal);
    assert_eq!((r.lambda_x_dim, r.lambda_y_dim), (21, 27));
    assert_eq!(r.fingerprint_x.center, r.fingerprint_y.center);
    assert_eq!(r.fingerprint_x.semisimple, r.fingerprint_y.semisimple);
    let swapped = example5(2, 3, P, 2).unwrap();
    assert_eq!(swapped.fingerprint_x, r.fingerprint_y);
}
