use std::collections::{BTreeMap, HashMap, VecDeque};

use greenforge_exactlin::field;

use crate::algebra::Algebra;
use crate::quiver::{index_paths, Path, PathBoundSpec, Quiver};
use crate::QuivError;

type SparseVec = BTreeMap<usize, u64>;

/// Echelon basis of the truncated relation ideal, keyed by leading path index
/// (the largest index in length-then-lex order).
struct IdealEchelon {
    p: u64,
    rows: HashMap<usize, SparseVec>,
}

impl IdealEchelon {
    /// Cancels leading terms until the leading path is not a pivot.
    fn reduce_leading(&self, mut v: SparseVec) -> SparseVec {
        while let Some((&lead, &c)) = v.iter().next_back() {
            let Some(row) = self.rows.get(&lead) else {
                break;
            };
            sub_scaled(&mut v, c, row, self.p);
        }
        v
    }

    /// Full normal form: no term is a pivot.
    fn normal_form(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = match v.keys().next_back() {
            Some(&k) => k,
            None => return v,
        };
        loop {
            let Some((&k, &c)) = v.range(..=cursor).next_back() else {
                break;
            };
            if let Some(row) = self.rows.get(&k) {
                sub_scaled(&mut v, c, row, self.p);
            }
            if k == 0 {
                break;
            }
            cursor = k - 1;
        }
        v
    }
}

fn sub_scaled(v: &mut SparseVec, c: u64, row: &SparseVec, p: u64) {
    for (&k, &r) in row {
        let e = v.entry(k).or_insert(0);
        *e = field::sub(*e, field::mul(c, r, p), p);
        if *e == 0 {
            v.remove(&k);
        }
    }
}

struct PathSpace<'a> {
    quiver: &'a Quiver,
    bound: usize,
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
}

impl<'a> PathSpace<'a> {
    fn new(quiver: &'a Quiver, bound: usize) -> Self {
        let paths = quiver.paths_up_to(bound);
        let index = index_paths(&paths);
        PathSpace {
            quiver,
            bound,
            paths,
            index,
        }
    }

    /// `l·v·r` with paths longer than the bound dropped.
    fn sandwich(&self, l: Option<&Path>, v: &SparseVec, r: Option<&Path>, p: u64) -> SparseVec {
        let mut out = SparseVec::new();
        for (&k, &c) in v {
            let mut path = self.paths[k].clone();
            if let Some(l) = l {
                match self.quiver.concat(l, &path) {
                    Some(q) => path = q,
                    None => continue,
                }
            }
            if let Some(r) = r {
                match self.quiver.concat(&path, r) {
                    Some(q) => path = q,
                    None => continue,
                }
            }
            if path.len() > self.bound {
                continue;
            }
            let e = out.entry(self.index[&path]).or_insert(0);
            *e = field::add(*e, c, p);
            if *e == 0 {
                out.remove(&self.index[&path]);
            }
        }
        out
    }
}

/// Builds the algebra `kQ/(I + J^{N+1})` and checks that `J^N` already lies in it.
///
/// The basis is the greedy complement of the relation ideal in length-then-lex
/// path order, which coincides with the paths that are not leading terms.
pub fn build_algebra(spec: &PathBoundSpec, p: u64) -> Result<Algebra, QuivError> {
    if !field::is_prime(p) || p > field::MAX_PRIME {
        return Err(QuivError::BadPrime(p));
    }
    let q = &spec.quiver;
    q.validate()?;
    let n = spec.length_bound;
    if n == 0 {
        return Err(QuivError::BoundTooSmall { bound: 0, needed: 1 });
    }
    let mut gens = Vec::new();
    for r in &spec.relations {
        let terms = r.resolve(q)?;
        let longest = terms.iter().map(|(_, path)| path.len()).max().unwrap_or(0);
        if longest > n {
            return Err(QuivError::BoundTooSmall { bound: n, needed: longest });
        }
        gens.push(terms);
    }
    let space = PathSpace::new(q, n);
    let arrows: Vec<Path> = (0..q.arrows.len())
        .map(|i| Path {
            start: q.arrows[i].source,
            arrows: vec![i],
        })
        .collect();

    let mut ech = IdealEchelon {
        p,
        rows: HashMap::new(),
    };
    let mut queue: VecDeque<SparseVec> = VecDeque::new();
    for terms in gens {
        let mut v = SparseVec::new();
        for (c, path) in terms {
            let k = space.index[&path];
            let e = v.entry(k).or_insert(0);
            *e = field::add(*e, field::from_i64(c, p), p);
            if *e == 0 {
                v.remove(&k);
            }
        }
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        let v = ech.reduce_leading(v);
        let Some((&lead, &c)) = v.iter().next_back() else {
            continue;
        };
        let ic = field::inv(c, p);
        let v: SparseVec = v.into_iter().map(|(k, x)| (k, field::mul(x, ic, p))).collect();
        for a in &arrows {
            queue.push_back(space.sandwich(Some(a), &v, None, p));
            queue.push_back(space.sandwich(None, &v, Some(a), p));
        }
        ech.rows.insert(lead, v);
    }

    for (k, path) in space.paths.iter().enumerate() {
        if path.len() == n {
            let nf = ech.normal_form(SparseVec::from([(k, 1)]));
            if !nf.is_empty() {
                return Err(QuivError::NotNilpotentAtBound {
                    bound: n,
                    path: q.label(path),
                });
            }
        }
    }

    let standard: Vec<usize> = (0..space.paths.len())
        .filter(|k| !ech.rows.contains_key(k))
        .collect();
    let position: HashMap<usize, usize> = standard.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let dim = standard.len();
    let labels = standard.iter().map(|&k| q.label(&space.paths[k])).collect();
    let grading = standard.iter().map(|&k| space.paths[k].len()).collect();
    let idempotents = (0..q.vertices.len())
        .map(|v| {
            let mut e = vec![0u64; dim];
            let k = space.index[&Path::trivial(v)];
            if let Some(&i) = position.get(&k) {
                e[i] = 1;
            }
            e
        })
        .collect();
    let to_coords = |v: SparseVec| -> Vec<u64> {
        let mut out = vec![0u64; dim];
        for (k, c) in ech.normal_form(v) {
            out[position[&k]] = c;
        }
        out
    };
    Ok(Algebra::from_products(p, labels, idempotents, grading, |a, b| {
        let pa = &space.paths[standard[a]];
        let pb = &space.paths[standard[b]];
        match q.concat(pa, pb) {
            Some(path) if path.len() <= n => to_coords(SparseVec::from([(space.index[&path], 1)])),
            _ => vec![0u64; dim],
        }
    }))
}

/// Evaluates a path of the quiver on images of its arrows and vertices.
pub fn evaluate_path(
    alg: &Algebra,
    path: &Path,
    vertex_images: &[Vec<u64>],
    arrow_images: &[Vec<u64>],
) -> Vec<u64> {
    if path.is_trivial() {
        return vertex_images[path.start].clone();
    }
    let mut acc = arrow_images[path.arrows[0]].clone();
    for &a in &path.arrows[1..] {
        acc = alg.multiply(&acc, &arrow_images[a]);
    }
    acc
}
