use greenforge_exactlin::{ExactMatrix, Subspace};
use greenforge_quivalg::{build_algebra, Algebra, PathBoundSpec, Quiver, Relation};
use greenforge_tilt::{build_presented, example5_corpus, fingerprint, lambda, LambdaSide, TiltError};
use proptest::prelude::*;

const P: u64 = 101;

fn truncated(loops: usize) -> Algebra {
    let spec = PathBoundSpec {
        quiver: Quiver::new(&["1"], &[("t", "1", "1")]).unwrap(),
        relations: vec![Relation::new(&[(1, &vec!["t"; loops].join("*"))])],
        length_bound: loops,
    };
    build_algebra(&spec, P).unwrap()
}

fn a2() -> Algebra {
    let spec = PathBoundSpec {
        quiver: Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap(),
        relations: vec![],
        length_bound: 2,
    };
    build_algebra(&spec, P).unwrap()
}

/// Radical powers from the path grading (valid for an admissible ideal), and
/// the center as the common kernel of all commutators.
fn oracle(a: &Algebra) -> (Vec<usize>, usize) {
    let n = a.dim();
    let arrows: Vec<Vec<u64>> = (0..n).filter(|&i| a.grading()[i] > 0).map(|i| a.basis_vec(i)).collect();
    let mut rads = Vec::new();
    let mut cur = Subspace::from_vectors(P, n, &arrows);
    while cur.dim() > 0 {
        rads.push(cur.dim());
        let mut next = Vec::new();
        for u in cur.basis_vectors() {
            for v in &arrows {
                next.push(a.multiply(&u, v));
            }
        }
        cur = Subspace::from_vectors(P, n, &next);
    }
    let mut rows = Vec::new();
    for b in 0..n {
        let e = a.basis_vec(b);
        let l = a.left_mult_matrix(&e);
        let r = a.right_mult_matrix(&e);
        for i in 0..n {
            rows.push((0..n).map(|j| (l.get(i, j) + P - r.get(i, j)) % P).collect::<Vec<u64>>());
        }
    }
    let center = ExactMatrix::from_rows(P, n, &rows).kernel().dim();
    (rads, center)
}

#[test]
fn ground_field() {
    let f = fingerprint(&Algebra::ground_field(P)).unwrap();
    assert_eq!((f.dim, f.rad_dims.clone(), f.center, f.semisimple, f.corners.clone()), (1, vec![], 1, 1, vec![1]));
}

#[test]
fn dual_numbers() {
    let f = fingerprint(&truncated(2)).unwrap();
    assert_eq!((f.dim, f.rad_dims.clone(), f.center, f.semisimple), (2, vec![1], 2, 1));
}

#[test]
fn path_algebra_of_a2() {
    let f = fingerprint(&a2()).unwrap();
    assert_eq!((f.dim, f.rad_dims.clone(), f.center, f.semisimple, f.corners.clone()), (3, vec![1], 1, 2, vec![0, 1, 1, 1]));
}

#[test]
fn prime_must_exceed_dimension() {
    let spec = PathBoundSpec {
        quiver: Quiver::new(&["1"], &[("t", "1", "1")]).unwrap(),
        relations: vec![Relation::new(&[(1, "t*t*t*t*t*t")])],
        length_bound: 6,
    };
    let a = build_algebra(&spec, 5).unwrap();
    assert!(matches!(fingerprint(&a), Err(TiltError::PrimeTooSmall { prime: 5, .. })));
}

#[test]
fn lambda_x_golden() {
    let c = example5_corpus(2, 2, P, -3..=3).unwrap();
    let (lx, _) = lambda(&c, LambdaSide::X).unwrap();
    let f = fingerprint(&lx).unwrap();
    assert_eq!(f.dim, 19);
    assert_eq!(f.rad_dims, vec![16, 10, 6, 2]);
    assert_eq!(f.center, 7);
    assert_eq!(f.semisimple, 3);
    assert_eq!(f.corners, vec![0, 0, 2, 2, 2, 2, 3, 4, 4]);
}

#[test]
fn lambda_matches_reduced_presentation_oracle() {
    let (pres, _) = build_presented(2, 2, P, true).unwrap();
    let (rads, center) = oracle(&pres);
    let c = example5_corpus(2, 2, P, -3..=3).unwrap();
    let (lx, _) = lambda(&c, LambdaSide::X).unwrap();
    let f = fingerprint(&lx).unwrap();
    assert_eq!(f.rad_dims, rads);
    assert_eq!(f.center, center);
    assert_eq!(f.semisimple, 3);
    assert_eq!(f, fingerprint(&pres).unwrap());
}

#[test]
fn oracle_agrees_on_small_algebras() {
    for a in [truncated(2), truncated(4), a2()] {
        let (rads, center) = oracle(&a);
        let f = fingerprint(&a).unwrap();
        assert_eq!((f.rad_dims, f.center), (rads, center));
    }
}

#[test]
fn repeated_runs_agree() {
    let (pres, _) = build_presented(2, 2, P, false).unwrap();
    assert_eq!(fingerprint(&pres).unwrap(), fingerprint(&pres).unwrap());
}

fn invertible(n: usize, seed: &[u64]) -> ExactMatrix {
    // unit lower times unit upper triangular, entries from the seed
    let mut lo = ExactMatrix::identity(P, n);
    let mut up = ExactMatrix::identity(P, n);
    let mut k = 0;
    for i in 0..n {
        for j in 0..n {
            let v = seed[k % seed.len()] % P;
            k += 1;
            if i > j {
                lo.set(i, j, v);
            } else if i < j {
                up.set(i, j, v);
            }
        }
    }
    lo.mul(&up).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn invariant_under_change_of_basis(seed in proptest::collection::vec(0u64..P, 1..40), which in 0usize..3) {
        let a = match which {
            0 => truncated(3),
            1 => a2(),
            _ => build_presented(2, 2, P, true).unwrap().0,
        };
        let b = a.change_basis(&invertible(a.dim(), &seed)).unwrap();
        prop_assert_eq!(fingerprint(&a).unwrap(), fingerprint(&b).unwrap());
    }
}
