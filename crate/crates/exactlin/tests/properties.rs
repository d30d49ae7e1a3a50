use greenforge_exactlin::{ExactMatrix, Quotient, Subspace};
use proptest::prelude::*;

const P: u64 = 101;

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        // Small entries make rank deficiency common.
        proptest::collection::vec(0u64..4, r * c)
            .prop_map(move |data| ExactMatrix::from_vec(P, r, c, data))
    })
}

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<u64>>> {
    proptest::collection::vec(proptest::collection::vec(0u64..3, n), 0..=max)
}

/// Counts kernel vectors by enumeration over F_3 (independent of row reduction).
fn brute_kernel_size(m: &ExactMatrix) -> usize {
    let n = m.cols();
    let mut count = 0;
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let v: Vec<u64> = (0..n)
            .map(|_| {
                let d = (c % 3) as u64;
                c /= 3;
                d
            })
            .collect();
        if m.mul_vec(&v).iter().all(|&x| x == 0) {
            count += 1;
        }
    }
    count
}

proptest! {
    #[test]
    fn rank_is_stable_under_rref(m in matrix(6, 6)) {
        let r = m.rref();
        prop_assert_eq!(r.rank, r.matrix.rank());
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix);
    }

    #[test]
    fn rank_nullity(m in matrix(6, 7)) {
        prop_assert_eq!(m.kernel().dim() + m.rank(), m.cols());
        for v in m.kernel().basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn kernel_matches_enumeration_over_f3(data in proptest::collection::vec(0u64..3, 12), cols in 1usize..=6) {
        let rows = 12 / cols;
        let m = ExactMatrix::from_vec(3, rows, cols, data[..rows * cols].to_vec());
        prop_assert_eq!(3usize.pow(m.kernel().dim() as u32), brute_kernel_size(&m));
    }

    #[test]
    fn solve_recovers_a_preimage(m in matrix(5, 5), x in proptest::collection::vec(0u64..P, 5)) {
        let x = &x[..m.cols()];
        let b = m.mul_vec(x);
        let bm = ExactMatrix::from_vec(P, b.len(), 1, b.clone());
        let sol = m.solve(&bm).unwrap().expect("consistent system");
        prop_assert_eq!(m.mul_vec(&sol.column(0)), b);
    }

    #[test]
    fn dimension_formula(u in vectors(5, 4), v in vectors(5, 4)) {
        let u = Subspace::from_vectors(P, 5, &u);
        let v = Subspace::from_vectors(P, 5, &v);
        let i = u.intersect(&v).unwrap();
        let s = u.sum(&v).unwrap();
        prop_assert_eq!(u.dim() + v.dim(), i.dim() + s.dim());
        prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&v));
        prop_assert!(u.is_subspace_of(&s) && v.is_subspace_of(&s));
    }

    #[test]
    fn canonical_basis_ignores_generator_order(vs in vectors(6, 5)) {
        let mut rev = vs.clone();
        rev.reverse();
        let mut doubled = vs.clone();
        doubled.extend(vs.iter().cloned());
        let a = Subspace::from_vectors(P, 6, &vs);
        prop_assert_eq!(&a, &Subspace::from_vectors(P, 6, &rev));
        prop_assert_eq!(&a, &Subspace::from_vectors(P, 6, &doubled));
    }

    #[test]
    fn image_and_preimage_agree(m in matrix(4, 5), w in vectors(4, 2)) {
        let w = Subspace::from_vectors(P, m.rows(), &w.iter().map(|v| v[..m.rows()].to_vec()).collect::<Vec<_>>());
        let pre = m.preimage(&w).unwrap();
        for v in pre.basis_vectors() {
            prop_assert!(w.contains(&m.mul_vec(&v)));
        }
        prop_assert!(m.kernel().is_subspace_of(&pre));
        let img = m.image();
        prop_assert_eq!(img.dim(), m.rank());
        prop_assert_eq!(pre.dim(), m.kernel().dim() + img.intersect(&w).unwrap().dim());
    }

    #[test]
    fn quotient_dims(u in vectors(5, 4), extra in vectors(5, 3)) {
        let small = Subspace::from_vectors(P, 5, &u);
        let mut all = u.clone();
        all.extend(extra);
        let big = Subspace::from_vectors(P, 5, &all);
        let q = Quotient::new(&big, &small).unwrap();
        prop_assert_eq!(q.dim() + small.dim(), big.dim());
        for v in big.basis_vectors() {
            let c = q.coords(&v).unwrap();
            let back = q.lift(&c);
            let mut diff = v.clone();
            for (d, b) in diff.iter_mut().zip(&back) {
                *d = (*d + P - b) % P;
            }
            prop_assert!(small.contains(&diff));
        }
    }
}
