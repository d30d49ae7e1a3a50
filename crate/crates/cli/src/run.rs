use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use greenforge_catcore::{CatError, ComputedCategory, HomotopyCategory};
use greenforge_exactlin::field;
use greenforge_green::{build_green, GreenError};
use greenforge_phiorbit::{enumerate_admissible, f_power, is_admissible, Admissibility, AdmissibleSet, PhiError};
use greenforge_quivalg::{build_algebra, check_self_injective, QuivError};
use greenforge_tilt::{build_presented, fingerprint, tag_margin, verify_equivalence, Status, TheoremInput, TheoremReport, TiltError};
use serde::Serialize;
use serde_json::{json, Value};

use crate::files::{load_algebra, load_scenario, Scenario};
use crate::VerifyArgs;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Load(String),
    #[error(transparent)]
    Quiv(#[from] QuivError),
    #[error(transparent)]
    Cat(#[from] CatError),
    #[error(transparent)]
    Phi(#[from] PhiError),
    #[error(transparent)]
    Green(#[from] GreenError),
    #[error(transparent)]
    Tilt(#[from] TiltError),
    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    pub fn hint(&self) -> Option<&'static str> {
        match self {
            CliError::Quiv(QuivError::NotNilpotentAtBound { .. })
            | CliError::Tilt(TiltError::Quiv(QuivError::NotNilpotentAtBound { .. })) => {
                Some("raise length_bound in the algebra file")
            }
            CliError::Tilt(TiltError::PrimeTooSmall { .. }) => Some("pass a larger --prime, or none to auto-select"),
            CliError::Tilt(TiltError::NotSplitOverField { .. }) => Some("try a larger prime"),
            CliError::Phi(PhiError::MissingShift { .. }) => Some("increase `tags` in the scenario"),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PrimeSource {
    Flag,
    Env,
    File,
    Auto,
    Default,
}

fn checked_prime(p: u64, from: &str) -> Result<u64, CliError> {
    if field::is_prime(p) && p <= field::MAX_PRIME {
        Ok(p)
    } else {
        Err(CliError::Load(format!("{from}: {p} is not a prime below 2^31")))
    }
}

fn env_prime() -> Result<Option<u64>, CliError> {
    match std::env::var("GREENFORGE_PRIME") {
        Ok(s) => {
            let p = s
                .trim()
                .parse::<u64>()
                .map_err(|_| CliError::Load(format!("GREENFORGE_PRIME: {s:?} is not an integer")))?;
            Ok(Some(checked_prime(p, "GREENFORGE_PRIME")?))
        }
        Err(_) => Ok(None),
    }
}

/// Flag, then file, then `GREENFORGE_PRIME`, then the next prime above four
/// times the predicted dimension (computed at the default prime).
fn choose_prime<F>(flag: Option<u64>, file: Option<u64>, predict: Option<F>) -> Result<(u64, PrimeSource), CliError>
where
    F: FnOnce(u64) -> Result<usize, CliError>,
{
    if let Some(p) = flag {
        return Ok((checked_prime(p, "--prime")?, PrimeSource::Flag));
    }
    if let Some(p) = file {
        return Ok((checked_prime(p, "prime in file")?, PrimeSource::File));
    }
    if let Some(p) = env_prime()? {
        return Ok((p, PrimeSource::Env));
    }
    match predict {
        Some(f) => {
            let dim = f(field::DEFAULT_PRIME)?;
            Ok((field::next_prime(4 * dim as u64), PrimeSource::Auto))
        }
        None => Ok((field::DEFAULT_PRIME, PrimeSource::Default)),
    }
}

fn print_json(v: &Value) -> Result<(), CliError> {
    let s = serde_json::to_string_pretty(v).map_err(|e| CliError::Output(e.to_string()))?;
    write_stdout(&s)
}

/// Writes one block of output; a closed pipe is not an error.
fn write_stdout(s: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{s}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Output(e.to_string())),
        _ => Ok(()),
    }
}

fn to_value<T: Serialize>(v: &T) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(|e| CliError::Output(e.to_string()))
}

fn banner(what: &str, why: &str, after_gate: bool) {
    let line = "!".repeat(72);
    eprintln!("{line}\n!! FAIL: {what}\n!! {why}");
    if after_gate {
        eprintln!("!! the hypothesis gate passed, so a failed check here points at a bug");
    }
    eprintln!("{line}");
}

fn parse_phi(text: &str) -> Result<AdmissibleSet, CliError> {
    let v = AdmissibleSet::parse(text).map_err(CliError::Load)?;
    admissible(&v, "--phi")
}

fn admissible(v: &[i64], from: &str) -> Result<AdmissibleSet, CliError> {
    AdmissibleSet::new(v).map_err(|e| CliError::Load(format!("{from}: Φ = {v:?}: {e}")))
}

pub fn admissible_check(set: &str) -> Result<u8, CliError> {
    let v = AdmissibleSet::parse(set).map_err(CliError::Load)?;
    let (ok, missing_zero, witness) = match is_admissible(&v) {
        Admissibility::Admissible => (true, false, None),
        Admissibility::MissingZero => (false, true, None),
        Admissibility::Witness(i, j, k) => (false, false, Some([i, j, k])),
    };
    let mut sorted = v.clone();
    sorted.sort_unstable();
    sorted.dedup();
    print_json(&json!({ "set": sorted, "admissible": ok, "missing_zero": missing_zero, "witness": witness }))?;
    Ok(0)
}

pub fn admissible_enum(lo: i64, hi: i64) -> Result<u8, CliError> {
    let lines: Vec<String> = enumerate_admissible(lo, hi)?.iter().map(|s| s.to_string()).collect();
    write_stdout(&lines.join("\n"))?;
    Ok(0)
}

pub fn algebra_info(file: &Path, table: bool, flag: Option<u64>) -> Result<u8, CliError> {
    let af = load_algebra(file)?;
    let spec = af.spec()?;
    let predict = |p: u64| -> Result<usize, CliError> { Ok(build_algebra(&spec, p)?.dim()) };
    let (p, source) = choose_prime(flag, af.prime, Some(predict))?;
    let alg = build_algebra(&spec, p)?;
    let si = check_self_injective(&alg);
    let fp = fingerprint(&alg)?;
    let mut v = json!({
        "prime": p,
        "prime_source": source,
        "dim": alg.dim(),
        "basis_labels": alg.labels(),
        "self_injective": si.self_injective,
        "ext1_dims": si.ext_dims,
        "fingerprint": to_value(&fp)?,
    });
    if table {
        v["mult_table"] = to_value(&alg.structure_constants())?;
    }
    print_json(&v)?;
    Ok(0)
}

pub fn hom(scenario: &Path, range: i64, flag: Option<u64>) -> Result<u8, CliError> {
    let sc = load_scenario(scenario)?;
    let (p, source) = choose_prime::<fn(u64) -> Result<usize, CliError>>(flag, sc.file.prime, None)?;
    let (pc, cs) = sc.complexes(p)?;
    let names: Vec<String> = cs.iter().map(|(n, _)| n.clone()).collect();
    let h = HomotopyCategory::new(pc.cat.clone(), cs.into_iter().map(|(_, c)| c).collect())?;
    let mut homs = Vec::new();
    for a in 0..names.len() {
        for b in 0..names.len() {
            for s in -range..=range {
                homs.push(json!({ "from": names[a], "to": names[b], "shift": s, "dim": h.hom(a, b, s)?.dim() }));
            }
        }
    }
    print_json(&json!({ "prime": p, "prime_source": source, "complexes": names, "homs": homs }))?;
    Ok(0)
}

/// `M` summands and the input object, as corpus objects.
fn objects(sc: &Scenario, corpus: &greenforge_tilt::Corpus) -> Result<(Vec<usize>, usize), CliError> {
    let mut m = Vec::new();
    for (name, t) in &sc.file.m {
        m.push(corpus.obj(corpus.complex(name)?, *t)?);
    }
    if m.is_empty() {
        return Err(CliError::Load("scenario: `m` is empty".into()));
    }
    let input = sc
        .file
        .input
        .as_ref()
        .ok_or_else(|| CliError::Load("scenario: `input` is missing".into()))?;
    Ok((m, corpus.obj(corpus.complex(input)?, 0)?))
}

fn half_width(sc: &Scenario, phi: &AdmissibleSet, d: i64, orth: i64) -> i64 {
    sc.file.tags.unwrap_or_else(|| {
        let mt = sc.file.m.iter().map(|(_, t)| t.abs()).max().unwrap_or(0);
        mt + tag_margin(phi, d) + orth
    })
}

/// `Σ dim Hom(v_a, F^{i−j} v_b)` over `i, j, i−j ∈ Φ`.
fn green_dim(cat: &ComputedCategory, v: &[usize], phi: &AdmissibleSet, d: i64) -> Result<usize, CliError> {
    let mut n = 0;
    for &i in phi.elements() {
        for &j in phi.elements() {
            if !phi.contains(i - j) {
                continue;
            }
            for &a in v {
                for &b in v {
                    n += cat.dim(a, f_power(cat, b, d, i - j)?);
                }
            }
        }
    }
    Ok(n)
}

pub fn green_build(scenario: &Path, phi: Option<&str>, d: Option<i64>, flag: Option<u64>) -> Result<u8, CliError> {
    let sc = load_scenario(scenario)?;
    let phi = match phi {
        Some(t) => parse_phi(t)?,
        None => admissible(&sc.file.phi, &scenario.display().to_string())?,
    };
    let d = d.unwrap_or(sc.file.d);
    let hw = half_width(&sc, &phi, d, 0);
    let u_of = |corpus: &greenforge_tilt::Corpus| -> Result<Vec<usize>, CliError> {
        let (mut m, x) = objects(&sc, corpus)?;
        m.push(x);
        Ok(m)
    };
    let predict = |p: u64| -> Result<usize, CliError> {
        let c = sc.corpus(p, hw)?;
        green_dim(&c.cat, &u_of(&c)?, &phi, d)
    };
    let (p, source) = choose_prime(flag, sc.file.prime, Some(predict))?;
    let corpus = sc.corpus(p, hw)?;
    let u = u_of(&corpus)?;
    let g = build_green(&corpus.cat, &u, &phi, d)?;
    let mut blocks = Vec::new();
    for &i in &g.phi {
        for &j in &g.phi {
            blocks.push([i, j, g.block(i, j).len() as i64]);
        }
    }
    let names: Vec<&String> = u.iter().map(|&k| &corpus.cat.objects()[k]).collect();
    print_json(&json!({
        "scenario": sc.file.name,
        "prime": p,
        "prime_source": source,
        "phi": phi.elements(),
        "d": d,
        "objects": names,
        "dim": g.dim(),
        "associative": true,
        "unit": true,
        "blocks": blocks,
        "fingerprint": to_value(&fingerprint(&g.algebra)?)?,
    }))?;
    Ok(0)
}

fn status_code(s: Status) -> u8 {
    match s {
        Status::Pass => 0,
        Status::HypothesesFailed => 2,
        Status::Fail => 1,
    }
}

fn golden(sc: &Scenario, r: &TheoremReport) -> Option<Value> {
    let e = sc.file.expected.as_ref()?;
    let mut mismatches = Vec::new();
    if let Some(s) = &e.status {
        let got = serde_json::to_value(r.status).ok()?;
        if got.as_str() != Some(s.as_str()) {
            mismatches.push(format!("status: expected {s}, got {got}"));
        }
    }
    if let Some(want) = e.green_v_quotient_dim {
        let got = r.green_v.as_ref().map(|g| g.quotient_dim);
        if got != Some(want) {
            mismatches.push(format!("green_v_quotient_dim: expected {want}, got {got:?}"));
        }
    }
    if let Some(want) = e.endo_dim {
        let got = r.tilting.as_ref().map(|t| t.endo_dim);
        if got != Some(want) {
            mismatches.push(format!("endo_dim: expected {want}, got {got:?}"));
        }
    }
    Some(json!({ "matches": mismatches.is_empty(), "mismatches": mismatches }))
}

/// One scenario: the JSON value and the exit code it calls for.
fn verify_one(path: &Path, args: &VerifyArgs) -> Result<(Value, u8), CliError> {
    let sc = load_scenario(path)?;
    let phi = match &args.phi {
        Some(t) => parse_phi(t)?,
        None => admissible(&sc.file.phi, &path.display().to_string())?,
    };
    let d = args.d.unwrap_or(sc.file.d);
    let orth = args.orth_bound.unwrap_or(sc.file.orth_bound);
    let hw = half_width(&sc, &phi, d, orth);
    let predict = |p: u64| -> Result<usize, CliError> {
        let c = sc.corpus(p, hw)?;
        let (mut v, x) = objects(&sc, &c)?;
        v.push(x);
        green_dim(&c.cat, &v, &phi, d)
    };
    let (p, source) = choose_prime(args.prime.prime, sc.file.prime, Some(predict))?;
    let corpus = sc.corpus(p, hw)?;
    let (m, y) = objects(&sc, &corpus)?;
    let input = TheoremInput { corpus: &corpus, y, m, phi, d, orth_bound: orth };
    let report = verify_equivalence(&input)?;
    let gold = golden(&sc, &report);
    let mut code = status_code(report.status);
    if gold.as_ref().is_some_and(|g| g["matches"] == json!(false)) {
        code = 1;
    }
    let status = match code {
        0 => "PASS",
        2 => "HYPOTHESES_FAILED",
        _ => "FAIL",
    };
    let v = json!({
        "scenario": sc.file.name,
        "prime": p,
        "prime_source": source,
        "tags": [-hw, hw],
        "status": status,
        "report": to_value(&report)?,
        "golden": gold,
    });
    Ok((v, code))
}

fn error_value(path: &Path, e: &CliError) -> Value {
    json!({ "scenario_file": path.display().to_string(), "status": "ERROR", "error": e.to_string() })
}

fn failure_reason(v: &Value) -> String {
    if let Some(e) = v["error"].as_str() {
        return e.to_string();
    }
    if let Some(f) = v["report"]["failure"].as_str() {
        return f.to_string();
    }
    if let Some(m) = v["golden"]["mismatches"].as_array() {
        return m.iter().filter_map(|x| x.as_str()).collect::<Vec<_>>().join("; ");
    }
    "see report".into()
}

fn worker_args(path: &Path, args: &VerifyArgs) -> Vec<String> {
    let mut a = vec!["verify".to_string(), "--worker".into(), "--scenario".into(), path.display().to_string()];
    if let Some(phi) = &args.phi {
        a.push(format!("--phi={phi}"));
    }
    if let Some(d) = args.d {
        a.push(format!("--d={d}"));
    }
    if let Some(o) = args.orth_bound {
        a.push(format!("--orth-bound={o}"));
    }
    if let Some(p) = args.prime.prime {
        a.push(format!("--prime={p}"));
    }
    a
}

fn run_workers(paths: &[PathBuf], args: &VerifyArgs) -> Result<Vec<(Value, u8)>, CliError> {
    let exe = std::env::current_exe().map_err(|e| CliError::Output(e.to_string()))?;
    let next = AtomicUsize::new(0);
    let out: Mutex<Vec<Option<(Value, u8)>>> = Mutex::new(vec![None; paths.len()]);
    std::thread::scope(|s| {
        for _ in 0..args.jobs.min(paths.len()) {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::SeqCst);
                if k >= paths.len() {
                    break;
                }
                let res = Command::new(&exe).args(worker_args(&paths[k], args)).output();
                let item = match res {
                    Ok(o) => {
                        let code = o.status.code().map_or(1, |c| c as u8);
                        match serde_json::from_slice::<Value>(&o.stdout) {
                            Ok(v) => (v, code),
                            Err(_) => (
                                error_value(&paths[k], &CliError::Output(String::from_utf8_lossy(&o.stderr).trim().to_string())),
                                1,
                            ),
                        }
                    }
                    Err(e) => (error_value(&paths[k], &CliError::Output(e.to_string())), 1),
                };
                out.lock().expect("no poisoned lock")[k] = Some(item);
            });
        }
    });
    Ok(out.into_inner().expect("no poisoned lock").into_iter().map(|x| x.expect("every job ran")).collect())
}

fn worst(codes: impl Iterator<Item = u8>) -> u8 {
    codes.fold(0, |acc, c| match (acc, c) {
        (1, _) | (_, 1) => 1,
        (2, _) | (_, 2) => 2,
        _ => 0,
    })
}

pub fn verify(args: &VerifyArgs) -> Result<u8, CliError> {
    if args.worker {
        let path = &args.scenario[0];
        let (v, code) = verify_one(path, args).unwrap_or_else(|e| (error_value(path, &e), 1));
        print_json(&v)?;
        return Ok(code);
    }
    if args.scenario.len() == 1 {
        let (v, code) = verify_one(&args.scenario[0], args)?;
        print_json(&v)?;
        if code == 1 {
            banner(&format!("scenario {}", v["scenario"]), &failure_reason(&v), true);
        }
        return Ok(code);
    }
    let results = if args.jobs <= 1 {
        args.scenario
            .iter()
            .map(|p| verify_one(p, args).unwrap_or_else(|e| (error_value(p, &e), 1)))
            .collect()
    } else {
        run_workers(&args.scenario, args)?
    };
    let values: Vec<Value> = results.iter().map(|(v, _)| v.clone()).collect();
    print_json(&Value::Array(values))?;
    for (v, code) in &results {
        if *code == 1 {
            banner(&format!("scenario {}", v.get("scenario").or(v.get("scenario_file")).unwrap_or(&Value::Null)), &failure_reason(v), v["status"] == json!("FAIL"));
        }
    }
    Ok(worst(results.iter().map(|(_, c)| *c)))
}

pub fn example5(n: usize, s: usize, orth_bound: i64, flag: Option<u64>) -> Result<u8, CliError> {
    let predict = |p: u64| -> Result<usize, CliError> { Ok(build_presented(n, s, p, false)?.0.dim()) };
    let (p, source) = choose_prime(flag, None, Some(predict))?;
    let r = greenforge_tilt::example5(n, s, p, orth_bound)?;
    let status = if r.passed { "PASS" } else { "FAIL" };
    print_json(&json!({ "n": n, "s": s, "prime": p, "prime_source": source, "status": status, "report": to_value(&r)? }))?;
    if r.passed {
        return Ok(0);
    }
    let mut why = Vec::new();
    if !r.presentation_check {
        why.push(format!(
            "presentation_check is false ({})",
            r.presentation.witness.clone().unwrap_or_default()
        ));
    }
    if !r.fingerprints_equal {
        why.push("fingerprints of the two sides differ".into());
    }
    if !r.cocone_matches_y {
        why.push("cocone does not match the expected complex".into());
    }
    if r.theorem.status != Status::Pass {
        why.push(format!("verification status {:?}", r.theorem.status));
    }
    banner(&format!("example5 --n {n} --s {s}"), &why.join("; "), false);
    Ok(1)
}
