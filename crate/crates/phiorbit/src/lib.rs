//! Admissible subsets of Z and graded hom spaces `⊕_{i∈Φ} Hom(x, F^i y)` with
//! `F` a power of the shift.

use std::collections::BTreeSet;
use std::fmt;

use greenforge_catcore::ComputedCategory;

/// Largest range width accepted by [`enumerate_admissible`].
pub const MAX_ENUM_WIDTH: i64 = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PhiError {
    #[error("0 is not in the set")]
    MissingZero,
    #[error("not admissible: witness ({0}, {1}, {2})")]
    NotAdmissible(i64, i64, i64),
    #[error("range [{lo}, {hi}] must contain 0")]
    RangeWithoutZero { lo: i64, hi: i64 },
    #[error("range [{lo}, {hi}] is wider than {max}")]
    RangeTooWide { lo: i64, hi: i64, max: i64 },
    #[error("object {object} has no shift by {shift} in the category")]
    MissingShift { object: String, shift: i64 },
}

/// Outcome of the admissibility test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    MissingZero,
    /// `i, j, k, i+j+k ∈ Φ` but exactly one of `i+j`, `j+k` is in Φ.
    Witness(i64, i64, i64),
}

/// Exhaustive triple test, scanning triples in lexicographic order.
pub fn is_admissible(s: &[i64]) -> Admissibility {
    let set: BTreeSet<i64> = s.iter().copied().collect();
    if !set.contains(&0) {
        return Admissibility::MissingZero;
    }
    for &i in &set {
        for &j in &set {
            for &k in &set {
                if set.contains(&(i + j + k)) && set.contains(&(i + j)) != set.contains(&(j + k)) {
                    return Admissibility::Witness(i, j, k);
                }
            }
        }
    }
    Admissibility::Admissible
}

/// A finite admissible subset of Z, sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmissibleSet {
    elements: Vec<i64>,
}

impl AdmissibleSet {
    pub fn new(s: &[i64]) -> Result<Self, PhiError> {
        match is_admissible(s) {
            Admissibility::Admissible => {
                let elements: BTreeSet<i64> = s.iter().copied().collect();
                Ok(AdmissibleSet {
                    elements: elements.into_iter().collect(),
                })
            }
            Admissibility::MissingZero => Err(PhiError::MissingZero),
            Admissibility::Witness(i, j, k) => Err(PhiError::NotAdmissible(i, j, k)),
        }
    }

    pub fn zero() -> Self {
        AdmissibleSet { elements: vec![0] }
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, i: i64) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    /// Index of `i` in sorted order.
    pub fn position(&self, i: i64) -> Option<usize> {
        self.elements.binary_search(&i).ok()
    }

    /// Parses a comma-separated list such as `0,1,-2`.
    pub fn parse(text: &str) -> Result<Vec<i64>, String> {
        text.split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|e| format!("bad integer {t:?}: {e}")))
            .collect()
    }
}

impl fmt::Display for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All admissible subsets of `[lo, hi]`, ordered by size then lexicographically.
pub fn enumerate_admissible(lo: i64, hi: i64) -> Result<Vec<AdmissibleSet>, PhiError> {
    if lo > 0 || hi < 0 {
        return Err(PhiError::RangeWithoutZero { lo, hi });
    }
    if hi - lo > MAX_ENUM_WIDTH {
        return Err(PhiError::RangeTooWide {
            lo,
            hi,
            max: MAX_ENUM_WIDTH,
        });
    }
    let others: Vec<i64> = (lo..=hi).filter(|&v| v != 0).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << others.len()) {
        let mut s = vec![0];
        s.extend(others.iter().enumerate().filter(|(b, _)| mask & (1 << b) != 0).map(|(_, &v)| v));
        if let Ok(a) = AdmissibleSet::new(&s) {
            out.push(a);
        }
    }
    out.sort_by(|a, b| (a.len(), &a.elements).cmp(&(b.len(), &b.elements)));
    Ok(out)
}

/// One component of a graded hom: `Hom(x, F^i y)` realised as hom(x, target).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub degree: i64,
    pub target: usize,
    pub dim: usize,
}

/// `⊕_{i∈Φ} Hom(x, F^i y)` in a category whose objects carry shift tags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedHom {
    pub source: usize,
    pub components: Vec<Component>,
}

impl GradedHom {
    pub fn component(&self, i: i64) -> Option<&Component> {
        self.components.iter().find(|c| c.degree == i)
    }

    pub fn total_dim(&self) -> usize {
        self.components.iter().map(|c| c.dim).sum()
    }
}

/// The object `F^i y` with `F = Σ^d`.
pub fn f_power(cat: &ComputedCategory, y: usize, d: i64, i: i64) -> Result<usize, PhiError> {
    cat.shifted(y, d * i).ok_or_else(|| PhiError::MissingShift {
        object: cat.objects()[y].clone(),
        shift: d * i,
    })
}

pub fn orbit_hom(cat: &ComputedCategory, x: usize, y: usize, phi: &AdmissibleSet, d: i64) -> Result<GradedHom, PhiError> {
    let mut components = Vec::new();
    for &i in phi.elements() {
        let target = f_power(cat, y, d, i)?;
        components.push(Component {
            degree: i,
            target,
            dim: cat.dim(x, target),
        });
    }
    Ok(GradedHom { source: x, components })
}

/// `f ∈ Hom(x, F^i y)` followed by `F^i g` for `g ∈ Hom(y, F^j z)`; zero (`None`)
/// unless `i, j, i+j ∈ Φ`. Shift tags make `F^i` the identity on coordinates.
pub fn orbit_compose(
    cat: &ComputedCategory,
    objs: (usize, usize, usize),
    phi: &AdmissibleSet,
    d: i64,
    f: (i64, &[u64]),
    g: (i64, &[u64]),
) -> Result<Option<(i64, Vec<u64>)>, PhiError> {
    let (x, y, z) = objs;
    let (i, fv) = f;
    let (j, gv) = g;
    if !(phi.contains(i) && phi.contains(j) && phi.contains(i + j)) {
        return Ok(None);
    }
    let fy = f_power(cat, y, d, i)?;
    let fz = f_power(cat, z, d, i + j)?;
    Ok(Some((i + j, cat.compose(x, fy, fz, fv, gv))))
}

/// Free graded table: one token `t_i` per `i ∈ s`, `t_i t_j = t_{i+j}` when
/// `i, j, i+j ∈ s` and 0 otherwise. Returns the first triple where the product
/// is not associative.
pub fn free_table_associativity_witness(s: &[i64]) -> Option<(i64, i64, i64)> {
    let set: BTreeSet<i64> = s.iter().copied().collect();
    let mul = |a: Option<i64>, b: Option<i64>| -> Option<i64> {
        let (a, b) = (a?, b?);
        (set.contains(&a) && set.contains(&b) && set.contains(&(a + b))).then_some(a + b)
    };
    for &i in &set {
        for &j in &set {
            for &k in &set {
                let left = mul(mul(Some(i), Some(j)), Some(k));
                let right = mul(Some(i), mul(Some(j), Some(k)));
                if left != right {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}
