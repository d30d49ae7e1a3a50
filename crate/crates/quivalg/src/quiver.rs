use std::collections::HashMap;

use crate::QuivError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// Finite quiver. Paths compose left to right: `a*b` is `a` followed by `b`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver, QuivError> {
        let mut q = Quiver {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: Vec::new(),
        };
        for &(label, s, t) in arrows {
            let source = q.vertex(s)?;
            let target = q.vertex(t)?;
            q.arrows.push(Arrow {
                label: label.to_string(),
                source,
                target,
            });
        }
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<(), QuivError> {
        let mut seen = std::collections::HashSet::new();
        for l in self.vertices.iter().chain(self.arrows.iter().map(|a| &a.label)) {
            if !seen.insert(l.as_str()) {
                return Err(QuivError::DuplicateLabel(l.clone()));
            }
        }
        for a in &self.arrows {
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return Err(QuivError::InvalidVertex(a.label.clone()));
            }
        }
        Ok(())
    }

    pub fn vertex(&self, label: &str) -> Result<usize, QuivError> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| QuivError::UnknownVertex(label.to_string()))
    }

    pub fn arrow(&self, label: &str) -> Result<usize, QuivError> {
        self.arrows
            .iter()
            .position(|a| a.label == label)
            .ok_or_else(|| QuivError::UnknownArrow(label.to_string()))
    }

    /// Resolves a path written as labels. A lone vertex label is the trivial path there.
    pub fn path(&self, labels: &[String]) -> Result<Path, QuivError> {
        if labels.is_empty() {
            return Err(QuivError::EmptyPath);
        }
        if labels.len() == 1 && self.arrow(&labels[0]).is_err() {
            let v = self.vertex(&labels[0])?;
            return Ok(Path::trivial(v));
        }
        let mut arrows = Vec::with_capacity(labels.len());
        for l in labels {
            arrows.push(self.arrow(l)?);
        }
        for w in arrows.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(QuivError::NotComposable(labels.join("*")));
            }
        }
        Ok(Path {
            start: self.arrows[arrows[0]].source,
            arrows,
        })
    }

    pub fn source(&self, p: &Path) -> usize {
        p.start
    }

    pub fn target(&self, p: &Path) -> usize {
        p.arrows.last().map_or(p.start, |&a| self.arrows[a].target)
    }

    /// `p` followed by `q`, if the endpoints match.
    pub fn concat(&self, p: &Path, q: &Path) -> Option<Path> {
        if self.target(p) != q.start {
            return None;
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        Some(Path {
            start: p.start,
            arrows,
        })
    }

    pub fn label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertices[p.start])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].label.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// All paths of length at most `n`, ordered by length and then lexicographically
    /// by arrow index (trivial paths by vertex index).
    pub fn paths_up_to(&self, n: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertices.len()).map(Path::trivial).collect();
        let mut layer: Vec<Path> = Vec::new();
        for (i, a) in self.arrows.iter().enumerate() {
            if n >= 1 {
                layer.push(Path {
                    start: a.source,
                    arrows: vec![i],
                });
            }
        }
        for len in 1..=n {
            layer.sort_by(|a, b| a.arrows.cmp(&b.arrows));
            out.extend(layer.iter().cloned());
            if len == n {
                break;
            }
            let mut next = Vec::new();
            for p in &layer {
                let t = self.target(p);
                for (i, a) in self.arrows.iter().enumerate() {
                    if a.source == t {
                        let mut arrows = p.arrows.clone();
                        arrows.push(i);
                        next.push(Path {
                            start: p.start,
                            arrows,
                        });
                    }
                }
            }
            layer = next;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            start: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// A linear combination of parallel paths, written with arrow labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(i64, Vec<String>)>,
}

impl Relation {
    pub fn new(terms: &[(i64, &str)]) -> Relation {
        Relation {
            terms: terms
                .iter()
                .map(|&(c, p)| (c, p.split('*').map(|s| s.trim().to_string()).collect()))
                .collect(),
        }
    }

    /// Resolves and checks uniformity: every term shares source and target.
    pub fn resolve(&self, q: &Quiver) -> Result<Vec<(i64, Path)>, QuivError> {
        let mut out = Vec::new();
        let mut ends: Option<(usize, usize)> = None;
        for (c, labels) in &self.terms {
            let p = q.path(labels)?;
            let e = (q.source(&p), q.target(&p));
            if *ends.get_or_insert(e) != e {
                return Err(QuivError::NotUniform(self.describe()));
            }
            out.push((*c, p));
        }
        Ok(out)
    }

    pub fn describe(&self) -> String {
        self.terms
            .iter()
            .map(|(c, p)| format!("{}*{}", c, p.join("*")))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathBoundSpec {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub length_bound: usize,
}

pub(crate) fn index_paths(paths: &[Path]) -> HashMap<Path, usize> {
    paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect()
}
