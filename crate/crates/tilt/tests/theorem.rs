use greenforge_phiorbit::AdmissibleSet;
use greenforge_tilt::*;

const P: u64 = 101;

fn run(phi: &[i64], d: i64, orth: i64) -> TheoremReport {
    let phi = AdmissibleSet::new(phi).unwrap();
    let r = tag_margin(&phi, d) + orth;
    let c = example5_corpus(2, 2, P, -r..=r).unwrap();
    let (a, x) = (c.complex("A").unwrap(), c.complex("X").unwrap());
    let input = TheoremInput {
        corpus: &c,
        y: c.obj(x, 0).unwrap(),
        m: vec![c.obj(a, 0).unwrap(), c.obj(a, -1).unwrap()],
        phi,
        d,
        orth_bound: orth,
    };
    verify_equivalence(&input).unwrap()
}

#[test]
fn phi_zero_passes() {
    let r = run(&[0], 1, 4);
    assert_eq!(r.status, Status::Pass, "{:?}", r.failure);
    let t = r.tilting.as_ref().unwrap();
    assert_eq!(t.orth.len(), 8);
    assert!(t.orth.iter().all(|e| e.dim == 0));
    assert_eq!(r.fingerprint_endo, r.fingerprint_green_v);
    assert_eq!(r.green_v.as_ref().unwrap().quotient_dim, 19);
}

#[test]
fn endo_dimension_is_the_block_sum() {
    for (phi, d) in [(vec![0], 1), (vec![0, 1], 2)] {
        let r = run(&phi, d, 1);
        let t = r.tilting.unwrap();
        assert_eq!(t.endo_dim, t.block_dims.iter().map(|b| b.2).sum::<usize>());
        assert_eq!(t.block_dims.len(), phi.len() * phi.len());
    }
}

#[test]
fn phi_zero_one_with_unit_shift_fails_the_gate() {
    let r = run(&[0, 1], 1, 2);
    assert_eq!(r.status, Status::HypothesesFailed);
    assert_eq!(r.gate.m_to_x, vec![(1, 2)]);
    assert_eq!(r.gate.y_to_m, vec![(1, 2)]);
    assert_eq!(r.gate.witnesses.len(), 2);
    assert!(r.green_u.is_none() && r.tilting.is_none());
}

#[test]
fn phi_zero_one_with_double_shift_passes() {
    let r = run(&[0, 1], 2, 4);
    assert!(r.gate.passed);
    assert_eq!(r.status, Status::Pass, "{:?}", r.failure);
    assert_eq!(r.green_v.as_ref().unwrap().dim, 40);
}

#[test]
fn broken_approximation_is_caught_by_the_gate() {
    let phi = AdmissibleSet::zero();
    let c = example5_corpus(2, 2, P, -4..=4).unwrap();
    let (a, x) = (c.complex("A").unwrap(), c.complex("X").unwrap());
    let input = TheoremInput {
        corpus: &c,
        y: c.obj(x, 0).unwrap(),
        m: vec![c.obj(a, 0).unwrap(), c.obj(a, -1).unwrap()],
        phi: phi.clone(),
        d: 1,
        orth_bound: 1,
    };
    let mut t = build_triangle_from_approx(&c, &input.m, &phi, 1, input.y).unwrap();
    for g in &mut t.g {
        g.iter_mut().for_each(|v| *v = 0);
    }
    let r = verify_with_triangle(&input, &t).unwrap();
    assert_eq!(r.status, Status::HypothesesFailed);
    assert!(!r.gate.right_approximation);
    assert!(r.gate.witnesses.iter().any(|w| w.contains("right approximation")));
}
