mod common;

use std::sync::OnceLock;

use common::{corpus, Corpus};
use greenforge_approx::ApproxContext;
use greenforge_phiorbit::AdmissibleSet;
use proptest::prelude::*;

fn wide() -> &'static Corpus {
    static C: OnceLock<Corpus> = OnceLock::new();
    C.get_or_init(|| corpus(-5..=4))
}

const PHIS: [&[i64]; 4] = [&[0], &[0, 1], &[0, 2], &[0, 1, 2]];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn graded_ghosts_match_approximation_kernels(phi in 0usize..4, d in 1i64..=2, a in 0usize..3, b in 0usize..3) {
        let c = wide();
        let ctx = ApproxContext::new(&c.cat, c.m(), AdmissibleSet::new(PHIS[phi]).unwrap(), d);
        let (a, b) = (c.obj(a, 0), c.obj(b, 0));
        let right = ctx.right_approximation_pruned(a).unwrap();
        prop_assert!(ctx.is_right_approx(a, &right).unwrap());
        let left = ctx.left_approximation_pruned(b).unwrap();
        prop_assert!(ctx.is_left_approx(b, &left).unwrap());
        let gh = ctx.ghost(a, b, 0).unwrap();
        prop_assert_eq!(&gh, &ctx.ghost_via_approx(a, b, &right));
        prop_assert_eq!(ctx.coghost(a, b, 0).unwrap(), ctx.coghost_via_approx(a, b, &left));
        let fa = ctx.factor(a, b, 0).unwrap();
        prop_assert_eq!(ctx.fgh(a, b, 0).unwrap(), gh.intersect(&fa).unwrap());
    }
}
