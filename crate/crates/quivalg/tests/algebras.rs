use greenforge_exactlin::{ExactMatrix, Subspace};
use greenforge_quivalg::{
    build_algebra, check_self_injective, local_xy_spec, Algebra, PathBoundSpec, QuivError, Quiver,
    Relation,
};
use proptest::prelude::*;

const P: u64 = 101;

/// Words in {x, y} of length ≤ n in length-then-lex order.
fn words(n: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for c in ["x", "y"] {
                next.push(format!("{w}{c}"));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Independent oracle: span every p·r·q literally (dense, truncated at n) and
/// read off the greedy complement.
fn brute_basis(n: usize, rels: &[Vec<(i64, &str)>]) -> Vec<String> {
    let ws = words(n);
    let idx = |w: &str| ws.iter().position(|v| v == w);
    let mut gens: Vec<Vec<u64>> = Vec::new();
    for l in &ws {
        for r in &ws {
            for rel in rels {
                let mut v = vec![0u64; ws.len()];
                for &(c, t) in rel {
                    let word = format!("{l}{t}{r}");
                    if let Some(i) = idx(&word) {
                        v[i] = (v[i] as i64 + c).rem_euclid(P as i64) as u64;
                    }
                }
                gens.push(v);
            }
        }
    }
    let ideal = Subspace::from_vectors(P, ws.len(), &gens);
    let mut chosen: Vec<Vec<u64>> = gens.clone();
    let mut basis = Vec::new();
    let mut span = ideal;
    for (i, w) in ws.iter().enumerate() {
        let mut e = vec![0u64; ws.len()];
        e[i] = 1;
        if !span.contains(&e) {
            basis.push(if w.is_empty() { "e_1".to_string() } else { w.chars().map(|c| c.to_string()).collect::<Vec<_>>().join("*") });
            chosen.push(e);
            span = Subspace::from_vectors(P, ws.len(), &chosen);
        }
    }
    basis
}

#[test]
fn oracle_path_count() {
    assert_eq!(words(4).len(), 31);
}

#[test]
fn ground_field_from_single_vertex() {
    let spec = PathBoundSpec {
        quiver: Quiver::new(&["1"], &[]).unwrap(),
        relations: vec![],
        length_bound: 1,
    };
    let a = build_algebra(&spec, P).unwrap();
    assert_eq!(a.dim(), 1);
    assert_eq!(a.labels(), &["e_1".to_string()]);
}

#[test]
fn local_algebra_basis_matches_brute_force() {
    let spec = PathBoundSpec {
        length_bound: 4,
        ..local_xy_spec(2, 2)
    };
    let a = build_algebra(&spec, P).unwrap();
    let oracle = brute_basis(4, &[vec![(1, "xx"), (-1, "yy")], vec![(1, "xy")], vec![(1, "yx")]]);
    assert_eq!(oracle, vec!["e_1", "x", "y", "x*x"]);
    assert_eq!(a.labels(), oracle.as_slice());
    assert_eq!(a.dim(), 4);
}

#[test]
fn local_algebra_products() {
    let a = build_algebra(&local_xy_spec(2, 2), P).unwrap();
    let (x, y, x2) = (a.basis_vec(1), a.basis_vec(2), a.basis_vec(3));
    assert_eq!(a.multiply(&x, &y), a.zero());
    assert_eq!(a.multiply(&y, &x), a.zero());
    assert_eq!(a.multiply(&x, &x), x2);
    assert_eq!(a.multiply(&y, &y), x2);
    assert_eq!(a.multiply(&a.unit(), &y), y);
    assert!(a.check_associative().is_ok());
    assert!(a.check_unit().is_ok());
}

#[test]
fn unequal_exponents() {
    let a = build_algebra(&local_xy_spec(3, 2), P).unwrap();
    assert_eq!(a.dim(), 5);
    let oracle = brute_basis(4, &[vec![(1, "xxx"), (-1, "yy")], vec![(1, "xy")], vec![(1, "yx")]]);
    assert_eq!(a.labels(), oracle.as_slice());
}

#[test]
fn larger_bound_gives_same_table() {
    let a = build_algebra(&local_xy_spec(2, 2), P).unwrap();
    let b = build_algebra(&PathBoundSpec { length_bound: 6, ..local_xy_spec(2, 2) }, P).unwrap();
    assert_eq!(a, b);
}

#[test]
fn bound_too_small_is_reported() {
    let spec = PathBoundSpec {
        quiver: Quiver::new(&["1"], &[("x", "1", "1")]).unwrap(),
        relations: vec![Relation::new(&[(1, "x*x*x*x")])],
        length_bound: 3,
    };
    assert!(matches!(build_algebra(&spec, P), Err(QuivError::BoundTooSmall { .. })));
    let spec = PathBoundSpec {
        relations: vec![],
        ..spec
    };
    assert!(matches!(build_algebra(&spec, P), Err(QuivError::NotNilpotentAtBound { .. })));
}

#[test]
fn non_uniform_relation_rejected() {
    let spec = PathBoundSpec {
        quiver: Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "2")]).unwrap(),
        relations: vec![Relation::new(&[(1, "a"), (1, "b")])],
        length_bound: 2,
    };
    assert!(matches!(build_algebra(&spec, P), Err(QuivError::NotUniform(_))));
}

#[test]
fn corners_and_peirce() {
    let a = build_algebra(&local_xy_spec(2, 2), P).unwrap();
    assert_eq!(a.corner(0, 0).unwrap().dim(), 4);
    let spec = PathBoundSpec {
        quiver: Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap(),
        relations: vec![],
        length_bound: 3,
    };
    let b = build_algebra(&spec, P).unwrap();
    assert_eq!(b.dim(), 6);
    assert!(b.corner(2, 0).unwrap().is_zero());
    let total: usize = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| b.corner(i, j).unwrap().dim())
        .sum();
    assert_eq!(total, b.dim());
}

#[test]
fn composition_convention_for_homs() {
    // φ: A e_1 → A e_2 is right multiplication by a, ψ: A e_2 → A e_3 by b.
    let spec = PathBoundSpec {
        quiver: Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap(),
        relations: vec![],
        length_bound: 3,
    };
    let alg = build_algebra(&spec, P).unwrap();
    let find = |l: &str| alg.labels().iter().position(|x| x == l).unwrap();
    let (e1, a, b, ab) = (find("e_1"), find("a"), find("b"), find("a*b"));
    let phi = alg.right_mult_matrix(&alg.basis_vec(a));
    let psi = alg.right_mult_matrix(&alg.basis_vec(b));
    // φ then ψ, evaluated at e_1.
    let composite = psi.mul(&phi).unwrap();
    assert_eq!(composite.mul_vec(&alg.basis_vec(e1)), alg.basis_vec(ab));
    assert_eq!(alg.multiply(&alg.basis_vec(a), &alg.basis_vec(b)), alg.basis_vec(ab));
    assert_eq!(alg.multiply(&alg.basis_vec(b), &alg.basis_vec(a)), alg.zero());
}

#[test]
fn self_injectivity_examples() {
    let a = build_algebra(&local_xy_spec(2, 2), P).unwrap();
    let r = check_self_injective(&a);
    assert!(r.self_injective);
    assert_eq!(r.ext_dims, vec![0]);

    let a2 = PathBoundSpec {
        quiver: Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap(),
        relations: vec![],
        length_bound: 2,
    };
    let r = check_self_injective(&build_algebra(&a2, P).unwrap());
    assert!(!r.self_injective);
    assert_eq!(r.ext_dims, vec![0, 1]);

    let semisimple = PathBoundSpec {
        quiver: Quiver::new(&["1", "2"], &[]).unwrap(),
        relations: vec![],
        length_bound: 1,
    };
    assert!(check_self_injective(&build_algebra(&semisimple, P).unwrap()).self_injective);
}

#[test]
fn quotient_by_radical_of_local_algebra() {
    let a = build_algebra(&local_xy_spec(2, 2), P).unwrap();
    let rad = Subspace::from_vectors(P, 4, &[a.basis_vec(1), a.basis_vec(2), a.basis_vec(3)]);
    let q = a.quotient(&rad).unwrap();
    assert_eq!(q.dim(), 1);
    assert_eq!(a.quotient(&Subspace::zero(P, 4)).unwrap(), a);
    let not_ideal = Subspace::from_vectors(P, 4, &[a.basis_vec(0)]);
    assert!(a.quotient(&not_ideal).is_err());
}

fn nilpotent_product(a: &Algebra, n: usize) -> bool {
    let rad: Vec<Vec<u64>> = (0..a.dim()).filter(|&b| a.grading()[b] > 0).map(|b| a.basis_vec(b)).collect();
    let mut power = rad.clone();
    for _ in 1..n {
        let mut next = Vec::new();
        for u in &power {
            for v in &rad {
                next.push(a.multiply(u, v));
            }
        }
        power = Subspace::from_vectors(a.prime(), a.dim(), &next).basis_vectors();
    }
    power.iter().all(|v| v.iter().all(|&c| c == 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn random_monomial_quotients_are_associative(mask in 0u32..(1 << 8), binom in any::<bool>()) {
        let quiver = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1"), ("c", "1", "1"), ("d", "2", "2")]).unwrap();
        let two = ["a*b", "b*a", "c*c", "d*d", "a*d", "c*a", "b*c", "d*b"];
        let mut relations: Vec<Relation> = two
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, r)| Relation::new(&[(1, r)]))
            .collect();
        if binom {
            relations.push(Relation::new(&[(1, "a*b"), (-1, "c*c")]));
        }
        let spec = PathBoundSpec { quiver: quiver.clone(), relations, length_bound: 3 };
        let full = quiver.paths_up_to(3);
        let mut rels = spec.relations.clone();
        for p in full.iter().filter(|p| p.len() == 3) {
            rels.push(Relation::new(&[(1, quiver.label(p).as_str())]));
        }
        let spec = PathBoundSpec { relations: rels, ..spec };
        let a = build_algebra(&spec, P).unwrap();
        prop_assert!(a.check_associative().is_ok());
        prop_assert!(a.check_unit().is_ok());
        let corners: usize = (0..2).flat_map(|i| (0..2).map(move |j| (i, j))).map(|(i, j)| a.corner(i, j).unwrap().dim()).sum();
        prop_assert_eq!(corners, a.dim());
        prop_assert!(nilpotent_product(&a, 3));
        // Change of basis preserves associativity of the rebuilt table.
        let n = a.dim();
        let mut rows = ExactMatrix::identity(P, n);
        if n > 1 { rows.set(0, n - 1, 3); }
        prop_assert!(a.change_basis(&rows).unwrap().check_associative().is_ok());
    }
}
