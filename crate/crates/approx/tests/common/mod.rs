#![allow(dead_code)]

use greenforge_catcore::{CatComplex, ComputedCategory, HomotopyCategory, ProjCategory};
use greenforge_quivalg::{build_algebra, local_xy_spec, Algebra};

pub const P: u64 = 101;

pub struct Corpus {
    pub alg: Algebra,
    pub pc: ProjCategory,
    pub h: HomotopyCategory,
    /// `(complex, tag)` of each object of `cat`.
    pub objs: Vec<(usize, i64)>,
    pub cat: ComputedCategory,
}

pub fn elem(a: &Algebra, label: &str) -> Vec<u64> {
    a.basis_vec(a.labels().iter().position(|l| l == label).unwrap())
}

pub fn two_term(pc: &ProjCategory, z: &[u64]) -> CatComplex {
    let mut c = CatComplex::new();
    c.set_term(0, vec![0]);
    c.set_term(1, vec![0]);
    c.set_diff(0, pc.mor(&[0], &[0], &[z.to_vec()]).unwrap());
    c
}

/// Complexes `X• = A·x→A`, `Y• = A·y→A`, `A`; objects are their shifts by
/// tags in `tags` (complex-major order).
pub fn corpus(tags: std::ops::RangeInclusive<i64>) -> Corpus {
    let alg = build_algebra(&local_xy_spec(2, 2), P).unwrap();
    let pc = ProjCategory::new(&alg, &["1".to_string()]);
    let x = two_term(&pc, &elem(&alg, "x"));
    let y = two_term(&pc, &elem(&alg, "y"));
    let h = HomotopyCategory::new(pc.cat.clone(), vec![x, y, CatComplex::stalk(0, 0)]).unwrap();
    let mut objs = Vec::new();
    let mut names = Vec::new();
    for (c, n) in ["X", "Y", "A"].iter().enumerate() {
        for t in tags.clone() {
            objs.push((c, t));
            names.push(format!("{n}[{t}]"));
        }
    }
    let cat = h.category_of_complexes(&objs, names).unwrap();
    Corpus { alg, pc, h, objs, cat }
}

impl Corpus {
    pub fn obj(&self, c: usize, t: i64) -> usize {
        self.objs.iter().position(|&o| o == (c, t)).unwrap()
    }

    /// `X•`, `Y•`, `A`, `Σ^{-1}A`.
    pub fn four(&self) -> [usize; 4] {
        [self.obj(0, 0), self.obj(1, 0), self.obj(2, 0), self.obj(2, -1)]
    }

    /// `M = A ⊕ Σ^{-1}A`.
    pub fn m(&self) -> Vec<usize> {
        vec![self.obj(2, 0), self.obj(2, -1)]
    }
}
