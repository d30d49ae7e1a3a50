use std::ops::RangeInclusive;

use greenforge_catcore::{CatComplex, ComputedCategory, HomotopyCategory, ProjCategory};

use crate::TiltError;

/// Named complexes over `proj A` and the category of their shifts `c[t]`,
/// `t` in a fixed tag range.
pub struct Corpus {
    pub pc: ProjCategory,
    pub h: HomotopyCategory,
    pub names: Vec<String>,
    pub tags: RangeInclusive<i64>,
    /// `(complex, tag)` of every object of `cat`.
    pub objs: Vec<(usize, i64)>,
    pub cat: ComputedCategory,
}

impl Corpus {
    pub fn new(pc: ProjCategory, complexes: Vec<(String, CatComplex)>, tags: RangeInclusive<i64>) -> Result<Corpus, TiltError> {
        let (names, cs): (Vec<String>, Vec<CatComplex>) = complexes.into_iter().unzip();
        let h = HomotopyCategory::new(pc.cat.clone(), cs)?;
        let mut objs = Vec::new();
        let mut labels = Vec::new();
        for (c, n) in names.iter().enumerate() {
            for t in tags.clone() {
                objs.push((c, t));
                labels.push(if t == 0 { n.clone() } else { format!("{n}[{t}]") });
            }
        }
        let cat = h.category_of_complexes(&objs, labels)?;
        Ok(Corpus { pc, h, names, tags, objs, cat })
    }

    /// Same complexes plus one more, over the same tag range.
    pub fn with_complex(&self, name: &str, c: CatComplex) -> Result<Corpus, TiltError> {
        let mut all: Vec<(String, CatComplex)> = self.names.iter().cloned().zip(self.h.complexes.iter().cloned()).collect();
        all.push((name.to_string(), c));
        Corpus::new(self.pc.clone(), all, self.tags.clone())
    }

    pub fn complex(&self, name: &str) -> Result<usize, TiltError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| TiltError::Invalid(format!("unknown complex {name}")))
    }

    pub fn obj(&self, c: usize, t: i64) -> Result<usize, TiltError> {
        self.objs
            .iter()
            .position(|&o| o == (c, t))
            .ok_or_else(|| TiltError::Invalid(format!("no object {}[{t}] in the tag range", self.names[c])))
    }

    /// Hom-space coordinates of a chain map `c1 → c2[t2 − t1]` given degreewise.
    pub fn class_of(&self, a: usize, b: usize, chain: &[u64]) -> Result<Vec<u64>, TiltError> {
        let ((c1, t1), (c2, t2)) = (self.objs[a], self.objs[b]);
        self.h
            .hom(c1, c2, t2 - t1)?
            .class(chain)
            .ok_or_else(|| TiltError::Invalid(format!("not a chain map {} -> {}", self.cat.objects()[a], self.cat.objects()[b])))
    }

    /// Chain-map representative of hom-space coordinates.
    pub fn representative(&self, a: usize, b: usize, coords: &[u64]) -> Result<Vec<u64>, TiltError> {
        let ((c1, t1), (c2, t2)) = (self.objs[a], self.objs[b]);
        Ok(self.h.hom(c1, c2, t2 - t1)?.lift(coords))
    }
}
