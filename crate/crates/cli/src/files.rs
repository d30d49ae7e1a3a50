use std::path::{Path, PathBuf};

use greenforge_catcore::{CatComplex, ProjCategory};
use greenforge_quivalg::{build_algebra, evaluate_path, Algebra, PathBoundSpec, Quiver, Relation};
use greenforge_tilt::Corpus;
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDef {
    pub label: String,
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverDef {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowDef>,
}

/// A linear combination of paths, as `[coeff, "a*b"]` pairs.
pub type Terms = Vec<(i64, String)>;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDef {
    pub terms: Terms,
}

/// Algebra spec file: `[quiver]`, `[[relation]]`, `length_bound`, `prime`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub quiver: QuiverDef,
    #[serde(default)]
    pub relation: Vec<RelationDef>,
    pub length_bound: usize,
    pub prime: Option<u64>,
}

impl AlgebraFile {
    pub fn spec(&self) -> Result<PathBoundSpec, CliError> {
        let vs: Vec<&str> = self.quiver.vertices.iter().map(String::as_str).collect();
        let arrows: Vec<(&str, &str, &str)> = self
            .quiver
            .arrows
            .iter()
            .map(|a| (a.label.as_str(), a.source.as_str(), a.target.as_str()))
            .collect();
        Ok(PathBoundSpec {
            quiver: Quiver::new(&vs, &arrows)?,
            relations: self.relation.iter().map(|r| relation(&r.terms)).collect(),
            length_bound: self.length_bound,
        })
    }
}

fn relation(terms: &Terms) -> Relation {
    let t: Vec<(i64, &str)> = terms.iter().map(|(c, p)| (*c, p.as_str())).collect();
    Relation::new(&t)
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDef {
    pub degree: i64,
    pub summands: Vec<String>,
}

/// Entry of the differential `C^degree → C^{degree+1}` between summands `from` and `to`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiffDef {
    pub degree: i64,
    pub from: usize,
    pub to: usize,
    pub terms: Terms,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDef {
    pub name: String,
    pub terms: Vec<TermDef>,
    #[serde(default)]
    pub diff: Vec<DiffDef>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub status: Option<String>,
    pub green_v_quotient_dim: Option<usize>,
    pub endo_dim: Option<usize>,
}

/// Scenario file: an algebra (inline or by path), named complexes, `M` as
/// `(complex, shift)` pairs, the input complex, Φ and the shift power.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub name: String,
    pub algebra: Option<AlgebraFile>,
    pub algebra_file: Option<String>,
    pub prime: Option<u64>,
    #[serde(default)]
    pub complex: Vec<ComplexDef>,
    #[serde(default)]
    pub m: Vec<(String, i64)>,
    pub input: Option<String>,
    #[serde(default = "default_phi")]
    pub phi: Vec<i64>,
    #[serde(default = "one")]
    pub d: i64,
    #[serde(default = "four")]
    pub orth_bound: i64,
    /// Half-width of the shift range; derived from Φ, d and the bound when absent.
    pub tags: Option<i64>,
    pub expected: Option<Expected>,
}

fn default_phi() -> Vec<i64> {
    vec![0]
}

fn one() -> i64 {
    1
}

fn four() -> i64 {
    4
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Load(format!("{}: {e}", path.display())))
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    toml::from_str(&read(path)?).map_err(|e| CliError::Load(format!("{}: {e}", path.display())))
}

pub fn load_algebra(path: &Path) -> Result<AlgebraFile, CliError> {
    parse(path)
}

pub struct Scenario {
    pub file: ScenarioFile,
    pub algebra: AlgebraFile,
}

pub fn load_scenario(path: &Path) -> Result<Scenario, CliError> {
    let file: ScenarioFile = parse(path)?;
    let algebra = match (&file.algebra, &file.algebra_file) {
        (Some(a), None) => a.clone(),
        (None, Some(f)) => {
            let base = path.parent().map(Path::to_path_buf).unwrap_or_else(PathBuf::new);
            load_algebra(&base.join(f))?
        }
        _ => {
            return Err(CliError::Load(format!(
                "{}: give exactly one of [algebra] and algebra_file",
                path.display()
            )))
        }
    };
    Ok(Scenario { file, algebra })
}

/// Algebra element of a path combination, with arrows read off the basis.
pub fn element(alg: &Algebra, q: &Quiver, terms: &Terms) -> Result<Vec<u64>, CliError> {
    let p = alg.prime();
    let arrows = q
        .arrows
        .iter()
        .map(|a| {
            alg.labels()
                .iter()
                .position(|l| l == &a.label)
                .map(|i| alg.basis_vec(i))
                .ok_or_else(|| CliError::Load(format!("arrow {} is not a basis element", a.label)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = alg.zero();
    for (c, path) in relation(terms).resolve(q)? {
        let v = evaluate_path(alg, &path, alg.idempotents(), &arrows);
        let c = greenforge_exactlin::field::from_i64(c, p);
        for (o, x) in out.iter_mut().zip(v) {
            *o = greenforge_exactlin::field::add(*o, greenforge_exactlin::field::mul(c, x, p), p);
        }
    }
    Ok(out)
}

impl Scenario {
    pub fn build_algebra(&self, p: u64) -> Result<(Algebra, PathBoundSpec), CliError> {
        let spec = self.algebra.spec()?;
        Ok((build_algebra(&spec, p)?, spec))
    }

    /// Projective category and complexes of the scenario over `F_p`.
    pub fn complexes(&self, p: u64) -> Result<(ProjCategory, Vec<(String, CatComplex)>), CliError> {
        let (alg, spec) = self.build_algebra(p)?;
        let q = &spec.quiver;
        let pc = ProjCategory::new(&alg, &self.algebra.quiver.vertices);
        let mut out = Vec::new();
        for c in &self.file.complex {
            let mut cx = CatComplex::new();
            for t in &c.terms {
                let vs = t.summands.iter().map(|v| q.vertex(v)).collect::<Result<Vec<_>, _>>()?;
                cx.set_term(t.degree, vs);
            }
            let mut degrees: Vec<i64> = c.diff.iter().map(|d| d.degree).collect();
            degrees.sort_unstable();
            degrees.dedup();
            for deg in degrees {
                let (src, tgt) = (cx.term(deg).to_vec(), cx.term(deg + 1).to_vec());
                let mut entries = vec![alg.zero(); src.len() * tgt.len()];
                for d in c.diff.iter().filter(|d| d.degree == deg) {
                    if d.from >= src.len() || d.to >= tgt.len() {
                        return Err(CliError::Load(format!(
                            "complex {}: differential entry ({}, {}) in degree {deg} is out of range",
                            c.name, d.from, d.to
                        )));
                    }
                    entries[d.from * tgt.len() + d.to] = element(&alg, q, &d.terms)?;
                }
                cx.set_diff(deg, pc.mor(&src, &tgt, &entries)?);
            }
            cx.validate(&pc.cat)
                .map_err(|e| CliError::Load(format!("complex {}: {e}", c.name)))?;
            out.push((c.name.clone(), cx));
        }
        Ok((pc, out))
    }

    pub fn corpus(&self, p: u64, half_width: i64) -> Result<Corpus, CliError> {
        let (pc, cs) = self.complexes(p)?;
        Ok(Corpus::new(pc, cs, -half_width..=half_width)?)
    }
}
