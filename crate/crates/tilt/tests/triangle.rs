use greenforge_phiorbit::AdmissibleSet;
use greenforge_tilt::*;

const P: u64 = 101;

fn corpus() -> Corpus {
    example5_corpus(2, 2, P, -3..=3).unwrap()
}

fn m(c: &Corpus) -> Vec<usize> {
    let a = c.complex("A").unwrap();
    vec![c.obj(a, 0).unwrap(), c.obj(a, -1).unwrap()]
}

/// `dim Hom(S, x)` and `dim Hom(x, S)` over all stalk shifts `S`, plus `dim End(x)`.
fn profile(c: &Corpus, x: usize) -> Vec<usize> {
    let a = c.complex("A").unwrap();
    let mut out = vec![c.cat.dim(x, x)];
    for t in c.tags.clone() {
        let s = c.obj(a, t).unwrap();
        out.push(c.cat.dim(s, x));
        out.push(c.cat.dim(x, s));
    }
    out
}

fn check_cocone(input: &str, expected: &str) {
    let c = corpus();
    let y = c.obj(c.complex(input).unwrap(), 0).unwrap();
    let t = build_triangle_from_approx(&c, &m(&c), &AdmissibleSet::zero(), 1, y).unwrap();
    let e = t.corpus.obj(t.corpus.complex(expected).unwrap(), 0).unwrap();
    assert_eq!(profile(&t.corpus, t.x), profile(&t.corpus, e));
    assert_eq!(t.corpus.cat.dim(t.x, e), t.corpus.cat.dim(e, e));
    assert!(t.composites_vanish().unwrap());
    assert_eq!(t.middle, m(&c));
}

#[test]
fn cocone_of_x_looks_like_y() {
    check_cocone("X", "Y");
}

#[test]
fn cocone_of_y_looks_like_x() {
    check_cocone("Y", "X");
}

#[test]
fn approximations_of_the_triangle() {
    let c = corpus();
    let y = c.obj(c.complex("X").unwrap(), 0).unwrap();
    let t = build_triangle_from_approx(&c, &m(&c), &AdmissibleSet::zero(), 1, y).unwrap();
    let ctx = greenforge_approx::ApproxContext::new(&t.corpus.cat, m(&c), AdmissibleSet::zero(), 1);
    assert!(ctx.is_right_approx(t.y, &t.right_approximation()).unwrap());
    assert!(ctx.is_left_approx(t.x, &t.left_approximation()).unwrap());
}

#[test]
fn object_of_add_m_gives_contractible_cocone() {
    let c = corpus();
    let a0 = m(&c)[0];
    let t = build_triangle_from_approx(&c, &m(&c), &AdmissibleSet::zero(), 1, a0).unwrap();
    assert_eq!(t.middle, vec![a0]);
    assert!(profile(&t.corpus, t.x).iter().all(|&d| d == 0));
}
