//! The commands behind the `csm` binary.
//!
//! Each command returns a [`CommandOutput`] holding the JSON document, the
//! equivalent human-readable text, and the process exit status. Parsing of
//! the command line itself lives in the binary.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use num_traits::Signed;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::operator::h_matrix;
use crate::partitions::Partition;
use crate::scalars::rational::{factorial, parse_rational};
use crate::scalars::{coupling_from_lambda, Branch, Coupling, LambdaCoupling, Rational};
use crate::spectrum::{self, gauge_prefactor_eval, pseudo_momenta, predicted_offset};
use crate::states::{build_squeeze_graph, enumerate_sector, SectorState};
use crate::symfunc::{inner_product_psum, jack_from_eigenvector, jacks_from_sector, verify_torus_with, JackBasis};

/// Process exit status of a command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Exit {
    Success = 0,
    Usage = 1,
    Verification = 2,
    Degeneracy = 3,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn for_error(e: &Error) -> Exit {
        match e {
            Error::DegenerateDiagonal { .. } | Error::StructuralDegeneracy { .. } => Exit::Degeneracy,
            _ => Exit::Usage,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandOutput {
    pub json: Value,
    pub text: String,
    pub exit: Exit,
}

impl CommandOutput {
    fn ok(json: Value, text: String) -> Self {
        CommandOutput { json, text, exit: Exit::Success }
    }

    /// Structured error document.
    pub fn from_error(e: &Error) -> Self {
        let debug = format!("{e:?}");
        let kind: String = debug.chars().take_while(|c| c.is_alphanumeric()).collect();
        let json = json!({ "error": { "kind": kind, "message": e.to_string() } });
        CommandOutput { text: format!("error: {e}\n"), json, exit: Exit::for_error(e) }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
            OutputFormat::Text => self.text.clone(),
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// `"6,4,3,1"` → `[6, 4, 3, 1]`. Negative entries are allowed.
pub fn parse_list(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer list: {text}"))))
        .collect()
}

pub fn parse_state(text: &str) -> Result<SectorState> {
    SectorState::from_quantum_numbers(&parse_list(text)?)
}

/// A partition label; the empty string and `"0"` give the empty partition.
pub fn parse_partition(text: &str) -> Result<Partition> {
    if text.trim().is_empty() {
        return Ok(Partition::empty());
    }
    Partition::new(&parse_list(text)?)
}

/// `"symbolic"` or an exact rational such as `"2"`, `"1/2"`, `"0.5"`.
pub fn parse_coupling(text: &str) -> Result<Coupling> {
    match text.trim() {
        "symbolic" | "sym" | "A" => Ok(Coupling::Symbolic),
        t => Ok(Coupling::fixed(parse_rational(t)?)),
    }
}

/// A rational with denominator ≤ 1000 within `1e-12` of `x`, if there is one.
fn rational_near(x: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    // continued-fraction convergents
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut y = x;
    for _ in 0..40 {
        let a = y.floor();
        let ai = a as i64;
        let h2 = ai.checked_mul(h1)?.checked_add(h0)?;
        let k2 = ai.checked_mul(k1)?.checked_add(k0)?;
        if k2 > 1000 {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (x - h1 as f64 / k1 as f64).abs() < 1e-12 || (y - a).abs() < 1e-12 {
            break;
        }
        y = 1.0 / (y - a);
    }
    (k1 != 0 && (x - h1 as f64 / k1 as f64).abs() < 1e-12).then(|| Rational::new(h1.into(), k1.into()))
}

/// Resolves exactly one of `--coupling` or `--lambda`.
///
/// A coupling derived from `λ` is floating point; exact commands accept it only
/// when `A(λ)` is rational to working precision.
pub fn resolve_coupling(
    coupling: Option<&str>,
    lambda: Option<f64>,
    branch: Branch,
    default: Coupling,
) -> Result<(Coupling, Option<LambdaCoupling>)> {
    match (coupling, lambda) {
        (Some(_), Some(_)) => Err(Error::Parse("give either --coupling or --lambda, not both".into())),
        (Some(c), None) => Ok((parse_coupling(c)?, None)),
        (None, Some(l)) => {
            let lc = coupling_from_lambda(l, branch);
            let a = rational_near(lc.a).ok_or_else(|| {
                Error::Parse(format!("A(λ={l}) = {} is not rational; pass --coupling instead", lc.a))
            })?;
            Ok((Coupling::fixed(a), Some(lc)))
        }
        (None, None) => Ok((default, None)),
    }
}

/// Mother/daughter graph of a root: levels, edges and weights.
pub fn cmd_family(root: &SectorState, table: bool) -> CommandOutput {
    let g = build_squeeze_graph(root);
    let json = json!({
        "root": root,
        "nodes": g.nodes.iter().map(|n| json!({
            "state": n.state,
            "level": n.level,
            "index": n.index,
            "tag": n.tag(),
        })).collect::<Vec<_>>(),
        "edges": g.edges_in_table_order().iter().map(|e| json!({
            "from": g.nodes[e.from].tag(),
            "to": g.nodes[e.to].tag(),
            "w": e.weight,
            "multiplicities": [e.high_multiplicity, e.low_multiplicity],
        })).collect::<Vec<_>>(),
    });
    let text = if table {
        format!("{}\n{}", g.render_association_table(), g.render_weight_table())
    } else {
        g.render_levels()
    };
    CommandOutput::ok(json, text)
}

/// Diagonal energies and back-substitution eigenvectors of a root's family.
pub fn cmd_spectrum(root: &SectorState, coupling: &Coupling) -> CommandOutput {
    let run = || -> Result<CommandOutput> {
        let basis = enumerate_sector(root.n_particles(), root.total(), Some(root))?;
        let m = h_matrix(&basis, coupling)?;
        let mut entries = Vec::new();
        let mut text = String::new();
        let mut exit = Exit::Success;
        for ((state, energy), pair) in spectrum::eigenvalues(&m).into_iter().zip(spectrum::all_eigenpairs(&m)) {
            let _ = writeln!(text, "{state}  E = {energy}");
            match pair {
                Ok(p) => {
                    for (s, c) in p.vector.iter().rev() {
                        let _ = writeln!(text, "    {s}: {c}");
                    }
                    entries.push(to_value(&p));
                }
                Err(e) => {
                    exit = exit.max_severity(Exit::for_error(&e));
                    let _ = writeln!(text, "    error: {e}");
                    let err = CommandOutput::from_error(&e).json["error"].clone();
                    entries.push(json!({ "state": state, "energy": energy, "error": err }));
                }
            }
        }
        Ok(CommandOutput { json: Value::Array(entries), text, exit })
    };
    run().unwrap_or_else(|e| CommandOutput::from_error(&e))
}

impl Exit {
    fn max_severity(self, other: Exit) -> Exit {
        if other.code() > self.code() {
            other
        } else {
            self
        }
    }
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(o) if o.contains_key("text") && o.contains_key("num") => {
                        let _ = writeln!(out, "{pad}{k}: {}", o["text"].as_str().unwrap_or(""));
                    }
                    Value::Object(_) | Value::Array(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_value(x, indent + 1, out);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar_text(x));
                    }
                }
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            let _ = writeln!(out, "{pad}[{}]", parts.join(", "));
        }
        Value::Array(items) => {
            for x in items {
                let _ = writeln!(out, "{pad}-");
                render_value(x, indent + 1, out);
            }
        }
        x => {
            let _ = writeln!(out, "{pad}{}", scalar_text(x));
        }
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.strip_suffix("/1").unwrap_or(s).to_string(),
        other => other.to_string(),
    }
}

/// Generic `key: value` rendering of a JSON document; rational functions are
/// shown by their `text` field.
pub fn render_json_text(v: &Value) -> String {
    let mut out = String::new();
    render_value(v, 0, &mut out);
    out
}

const SCHEMA_VERSION: u64 = 1;

/// One JSON file per `(kind, key)` under a directory, written atomically.
#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, kind: &str, key: &str) -> PathBuf {
        let digest = hex::encode(Sha256::digest(key.as_bytes()));
        self.dir.join(format!("{kind}-{digest}.json"))
    }

    /// The stored value, or `None` on a miss, a key collision or a stale schema.
    pub fn get(&self, kind: &str, key: &str) -> Option<Value> {
        let text = fs::read_to_string(self.path(kind, key)).ok()?;
        let doc: Value = serde_json::from_str(&text).ok()?;
        (doc["schema_version"] == SCHEMA_VERSION && doc["key"] == key).then(|| doc["value"].clone())
    }

    pub fn put(&self, kind: &str, key: &str, value: &Value) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(kind, key);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let doc = json!({ "schema_version": SCHEMA_VERSION, "key": key, "value": value });
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(serde_json::to_string(&doc)?.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(tmp, path)
    }
}

fn jack_document(label: &Partition, coupling: &Coupling, n: Option<usize>) -> Result<Value> {
    coupling.require_nonzero()?;
    let basis = JackBasis::new(label.weight(), coupling)?;
    let jack = basis.get(label).expect("label has the basis weight");
    let f = jack.as_symfunc();
    let norm = inner_product_psum(&f, &f, coupling)?;
    let hook_norm = label.hook_products(coupling)?.norm;
    let mut doc = json!({
        "label": label,
        "coupling": coupling.to_string(),
        "normalization": "J",
        "coeffs": to_value(jack)["coeffs"],
        "norm": norm,
        "hook_norm": hook_norm,
        "match": norm == hook_norm,
    });
    if let Some(n) = n {
        let from_eigenvector = jack_from_eigenvector(label, coupling, n)?;
        let agrees = from_eigenvector.coeffs.iter().all(|(p, c)| jack.coeffs.get(p) == Some(c));
        doc["n_particles"] = json!(n);
        doc["eigenvector_match"] = json!(agrees);
    }
    Ok(doc)
}

/// Jack polynomial of a label with its norm and the hook-product norm.
///
/// With a cache, the document is looked up by `(label, coupling, n)` and
/// stored after a cold computation.
pub fn cmd_jack(label: &Partition, coupling: &Coupling, n: Option<usize>, cache: Option<&Cache>) -> CommandOutput {
    let key = format!("jack|{}|{coupling}|{n:?}|J", label.label());
    let cached = cache.and_then(|c| c.get("jack", &key));
    let doc = match cached {
        Some(v) => v,
        None => match jack_document(label, coupling, n) {
            Ok(v) => {
                if let Some(c) = cache {
                    // a failed write only costs a recomputation next time
                    let _ = c.put("jack", &key, &v);
                }
                v
            }
            Err(e) => return CommandOutput::from_error(&e),
        },
    };
    let ok = doc["match"] == true && doc.get("eigenvector_match").is_none_or(|v| v == true);
    let text = render_json_text(&doc);
    CommandOutput { json: doc, text, exit: if ok { Exit::Success } else { Exit::Verification } }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: &str, failures: Vec<String>) -> Self {
        Check { name: name.into(), passed: failures.is_empty(), failures }
    }
}

/// Largest weight for which `verify` also builds the Hamiltonian on `|k|`
/// variables.
pub const VERIFY_EIGENVECTOR_MAX_WEIGHT: usize = crate::oracle::MAX_VARIABLES;

fn verify_checks(weight: usize, coupling: &Coupling, torus: Option<usize>) -> Result<Vec<Check>> {
    coupling.require_nonzero()?;
    let basis = JackBasis::new(weight, coupling)?;
    let p_factorial = coupling.constant(factorial(weight as u64));
    let column = Partition::column(weight);

    let mut orthogonality = Vec::new();
    for (i, a) in basis.jacks.iter().enumerate() {
        for b in &basis.jacks[i + 1..] {
            let v = inner_product_psum(&a.as_symfunc(), &b.as_symfunc(), coupling)?;
            if !v.is_zero() {
                orthogonality.push(format!("<J{}, J{}> = {v}", a.label, b.label));
            }
        }
    }
    let triangularity = basis
        .jacks
        .iter()
        .filter(|j| !j.support_outside_down_set().is_empty())
        .map(|j| format!("J{} has support {:?}", j.label, j.support_outside_down_set()))
        .collect();
    let normalization = basis
        .jacks
        .iter()
        .filter(|j| j.coefficient(&column) != Some(&p_factorial))
        .map(|j| format!("J{}: coefficient of m{column} is not {weight}!", j.label))
        .collect();
    let mut hooks = Vec::new();
    for j in &basis.jacks {
        let f = j.as_symfunc();
        let norm = inner_product_psum(&f, &f, coupling)?;
        let hook = j.label.hook_products(coupling)?.norm;
        if norm != hook {
            hooks.push(format!("J{}: norm {norm} vs hook product {hook}", j.label));
        }
    }
    let mut checks = vec![
        Check::new("orthogonality", orthogonality),
        Check::new("triangularity", triangularity),
        Check::new("normalization", normalization),
        Check::new("hook_norm", hooks),
    ];
    if weight <= VERIFY_EIGENVECTOR_MAX_WEIGHT {
        let from_h = jacks_from_sector(weight, coupling, weight.max(1))?;
        let failures = from_h
            .iter()
            .filter(|j| basis.get(&j.label) != Some(*j))
            .map(|j| format!("eigenvector of {} differs from J{}", j.label, j.label))
            .collect();
        checks.push(Check::new("eigenvector", failures));
    }
    if let Some(n) = torus {
        let a = match coupling {
            Coupling::Fixed(a) if a.is_integer() && a.is_positive() => a.clone(),
            Coupling::Fixed(a) => return Err(Error::NonIntegerCoupling(a.clone())),
            Coupling::Symbolic => {
                return Err(Error::Parse("torus verification needs a positive integer --coupling".into()))
            }
        };
        let labels: Vec<&Partition> = basis.jacks.iter().map(|j| &j.label).filter(|p| p.len() <= n).collect();
        let mut failures = Vec::new();
        for &k in &labels {
            for &m in &labels {
                let r = verify_torus_with(&basis, k, m, n)?;
                if !r.matches {
                    failures.push(format!("<{k}|{m}> with A={a}, N={n}: lhs {} rhs {}", r.lhs, r.rhs));
                }
            }
        }
        checks.push(Check::new("torus", failures));
    }
    Ok(checks)
}

/// Jack properties, hook norms, eigenvector agreement and (optionally) torus
/// orthogonality for every partition of a weight.
pub fn cmd_verify(weight: usize, coupling: &Coupling, torus: Option<usize>) -> CommandOutput {
    match verify_checks(weight, coupling, torus) {
        Ok(checks) => {
            let passed = checks.iter().all(|c| c.passed);
            let json = json!({
                "weight": weight,
                "coupling": coupling.to_string(),
                "torus_n": torus,
                "checks": checks,
                "passed": passed,
            });
            let mut text = String::new();
            for c in &checks {
                let _ = writeln!(text, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
                for f in &c.failures {
                    let _ = writeln!(text, "    {f}");
                }
            }
            CommandOutput { json, text, exit: if passed { Exit::Success } else { Exit::Verification } }
        }
        Err(e) => CommandOutput::from_error(&e),
    }
}

/// Pseudo-momenta of a state and the offset between `Σk²` and `E⁰`.
pub fn cmd_pseudomomenta(state: &SectorState, a: &Rational) -> CommandOutput {
    let run = || -> Result<Value> {
        let pm = pseudo_momenta(state, a)?;
        let e0 = crate::operator::diagonal_energy(state, &Coupling::fixed(a.clone())).eval(a)?;
        let mut doc = to_value(&pm);
        doc["state"] = to_value(state);
        doc["coupling"] = json!(crate::scalars::rational::to_pq(a));
        doc["e0"] = json!(crate::scalars::rational::to_pq(&e0));
        doc["offset"] = json!(crate::scalars::rational::to_pq(&(&pm.energy - &e0)));
        doc["predicted_offset"] = json!(crate::scalars::rational::to_pq(&predicted_offset(state.n_particles(), a)));
        Ok(doc)
    };
    match run() {
        Ok(doc) => CommandOutput::ok(doc.clone(), render_json_text(&doc)),
        Err(e) => CommandOutput::from_error(&e),
    }
}

/// Gauge prefactor at given positions. Floating point; marked approximate.
pub fn cmd_prefactor(x: &[f64], lambda: f64, branch: Branch, length: f64) -> CommandOutput {
    match gauge_prefactor_eval(x, lambda, branch, length) {
        Ok(g) => {
            let mut doc = to_value(&g);
            doc["positions"] = json!(x);
            doc["length"] = json!(length);
            doc["approximate"] = json!(true);
            let text = render_json_text(&doc);
            CommandOutput::ok(doc, text)
        }
        Err(e) => CommandOutput::from_error(&e),
    }
}

/// Young diagram of a partition, its conjugate, and the conjugation identity.
pub fn cmd_young(p: &Partition) -> CommandOutput {
    let c = p.conjugate();
    let (lhs, rhs) = p.conjugation_identity();
    let json = json!({
        "partition": p,
        "diagram": p.young_diagram(),
        "conjugate": c,
        "conjugate_diagram": c.young_diagram(),
        "identity": [lhs, rhs],
    });
    let text = format!(
        "{p}\n{}\n\nconjugate {c}\n{}\n\nΣ(i-1)k_i = {lhs}, Σ C(k'_j, 2) = {rhs}\n",
        p.young_diagram(),
        c.young_diagram()
    );
    CommandOutput::ok(json, text)
}
