//! Executes session scripts and renders the JSON document
//! `{ring, tasks, results, timings, provenance}` with a fixed key order.

use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use crate::adeg::{
    adeg_local, adeg_report, biadeg_report, gmult_report, ladeg_report, verify, AdegEntry,
    AdegReport, AdegValue, ComponentData, Provenance, VerificationRecord, VerifyOptions,
};
use crate::combinatorics::{adeg_monomial, standard_pairs};
use crate::error::{Error, Result};
use crate::graded::gg_presentation;
use crate::groebner::{Caps, IdealHandle, ModulePresentation};
use crate::hilbert::{
    dimension, ee_vector, hilbert_polynomial, hilbert_samuel, hilbert_series, samuel_polynomial,
    HilbertPolynomial, WINDOW,
};
use crate::numerical::json_int;
use crate::poly::Polynomial;
use crate::ring::RingRef;
use crate::session::{CertKind, OrderName, SessionScript, Task, TaskKind};

/// Settings from the command line; they override script options.
#[derive(Clone, Debug, Default)]
pub struct RunConfig {
    pub order: Option<OrderName>,
    pub max_deg: Option<u32>,
    pub max_basis: Option<usize>,
    /// Wall-clock timings in the output. Off by default so that output is
    /// reproducible byte for byte.
    pub timings: bool,
    /// Where reproducers of failed verifications are written.
    pub cache_dir: Option<PathBuf>,
}

/// Process exit code for an error: 1 input, 2 bug, 3 resource cap.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TheoremViolation(_) | Error::InternalConsistency(_) => 2,
        Error::ResourceLimit { .. } => 3,
        _ => 1,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::TheoremViolation(_) => "theorem-violation",
        Error::InternalConsistency(_) => "internal-consistency",
        Error::ResourceLimit { .. } => "resource-limit",
        Error::Parse { .. } => "parse",
        Error::Unsupported(_) => "unsupported",
        Error::NotHomogeneous(_) => "not-homogeneous",
        Error::WrongOracle(_) => "wrong-oracle",
        _ => "invalid-input",
    }
}

/// Worst of two exit codes: bugs first, then caps, then input errors.
pub fn worst(a: i32, b: i32) -> i32 {
    let rank = |c: i32| match c {
        2 => 3,
        3 => 2,
        1 => 1,
        _ => 0,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

#[derive(Clone, Debug)]
pub struct TaskOutcome {
    pub task: Task,
    pub value: std::result::Result<Value, String>,
    pub code: i32,
    pub millis: u128,
    /// Level-wise values for the CSV summary: `(i, value)`.
    pub rows: Vec<(String, String)>,
    pub reproducer: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub ring: String,
    pub outcomes: Vec<TaskOutcome>,
    pub caps: Caps,
    pub order: OrderName,
    pub timings: bool,
    pub code: i32,
}

impl RunReport {
    pub fn to_json(&self) -> Value {
        let mut top = Map::new();
        top.insert("ring".into(), Value::from(self.ring.clone()));
        top.insert(
            "tasks".into(),
            Value::Array(
                self.outcomes
                    .iter()
                    .map(|o| Value::from(o.task.to_string()))
                    .collect(),
            ),
        );
        let results = self
            .outcomes
            .iter()
            .map(|o| {
                let mut m = Map::new();
                m.insert("task".into(), Value::from(o.task.to_string()));
                match &o.value {
                    Ok(v) => {
                        m.insert("status".into(), Value::from("ok"));
                        if let Value::Object(inner) = v {
                            for (k, x) in inner {
                                m.insert(k.clone(), x.clone());
                            }
                        }
                    }
                    Err(msg) => {
                        m.insert("status".into(), Value::from("error"));
                        m.insert("error".into(), Value::from(msg.clone()));
                        if let Some(p) = &o.reproducer {
                            m.insert("reproducer".into(), Value::from(p.display().to_string()));
                        }
                    }
                }
                Value::Object(m)
            })
            .collect();
        top.insert("results".into(), Value::Array(results));
        let timings = if self.timings {
            let mut t = Map::new();
            t.insert(
                "total_ms".into(),
                json_int(self.outcomes.iter().map(|o| o.millis as i128).sum()),
            );
            t.insert(
                "tasks_ms".into(),
                Value::Array(
                    self.outcomes
                        .iter()
                        .map(|o| json_int(o.millis as i128))
                        .collect(),
                ),
            );
            Value::Object(t)
        } else {
            Value::Object(Map::new())
        };
        top.insert("timings".into(), timings);
        top.insert(
            "provenance".into(),
            json!({
                "tool": "adeg",
                "version": env!("CARGO_PKG_VERSION"),
                "order": self.order.as_str(),
                "caps": {"max_basis": self.caps.max_basis, "max_degree": self.caps.max_degree},
            }),
        );
        Value::Object(top)
    }
}

/// Pretty JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

struct Context<'a> {
    script: &'a SessionScript,
    ring: RingRef,
    order: OrderName,
}

impl Context<'_> {
    fn ideal(&self, name: &str) -> Result<IdealHandle> {
        let d = self
            .script
            .ideal(name)
            .ok_or_else(|| Error::InvalidArgument(format!("undeclared ideal '{name}'")))?;
        IdealHandle::new(&self.ring, d.gens.clone())
    }

    fn components(&self, name: &str) -> Result<Option<ComponentData>> {
        let Some(c) = self.script.components_of(name) else {
            return Ok(None);
        };
        let mut primes = Vec::new();
        for (p, l) in &c.parts {
            primes.push((self.ideal(p)?, *l));
        }
        Ok(Some(ComponentData { primes }))
    }

    fn require_local(&self, task: &Task) -> Result<()> {
        let j = &task.args[0];
        if !self.script.certified(CertKind::Origin, j) {
            return Err(Error::InvalidArgument(format!(
                "task {} needs the origin certificate: add 'certify origin {j};'",
                task.kind
            )));
        }
        for name in &task.args {
            for g in self.ideal(name)?.gens() {
                if g.terms().any(|(m, _)| m.is_one()) {
                    return Err(Error::InvalidArgument(format!(
                        "generator {g} of {name} does not vanish at the origin"
                    )));
                }
            }
        }
        if self.ideal(&task.args[1])?.is_zero() {
            return Err(Error::InvalidArgument(
                "the ideal I needs at least one generator".into(),
            ));
        }
        Ok(())
    }
}

fn report_json(key: &str, r: &AdegReport) -> Value {
    let mut m = Map::new();
    m.insert(key.into(), r.values_json());
    m.insert("provenance".into(), r.provenance_json());
    Value::Object(m)
}

fn report_rows(r: &AdegReport) -> Vec<(String, String)> {
    r.entries
        .iter()
        .map(|e| (e.level.to_string(), e.value.to_string()))
        .collect()
}

fn strings(ps: &[Polynomial]) -> Value {
    Value::Array(ps.iter().map(|p| Value::from(p.to_string())).collect())
}

/// Graded report for homogeneous input, local degrees at the origin otherwise.
fn adeg_any(m: &ModulePresentation) -> Result<AdegReport> {
    if m.ring().is_bigraded() {
        return biadeg_report(m);
    }
    if m.is_homogeneous() {
        return adeg_report(m);
    }
    let j = IdealHandle::new(
        m.ring(),
        m.relations().iter().map(|c| c[0].clone()).collect(),
    )?;
    let dim = crate::adeg::local_dimension(&j)?;
    let mut entries = Vec::new();
    for i in (0..=dim.max(-1)).rev() {
        entries.push(AdegEntry {
            level: i as usize,
            value: AdegValue::Integer(adeg_local(m, i as usize)?),
            provenance: Provenance::ExtRoute,
            checks: vec![],
        });
    }
    Ok(AdegReport { entries })
}

fn hilbert_json(m: &ModulePresentation) -> Result<(Value, Vec<(String, String)>)> {
    let mut out = Map::new();
    let mut rows = Vec::new();
    if !m.is_homogeneous() {
        // Hilbert-Samuel function at the origin.
        let (p, e) = samuel_polynomial(m, 1)?;
        let vals: Vec<Value> = (0..6)
            .map(|k| hilbert_samuel(m, k).map(json_int))
            .collect::<Result<_>>()?;
        out.insert("samuel_values".into(), Value::Array(vals));
        out.insert(
            "samuel_polynomial".into(),
            Value::Array(p.coeffs().iter().map(|c| json_int(*c)).collect()),
        );
        out.insert("multiplicity".into(), json_int(e));
        rows.push(("e".into(), e.to_string()));
        return Ok((Value::Object(out), rows));
    }
    let s = hilbert_series(m)?;
    let dim = dimension(m)?;
    out.insert("dimension".into(), json!(dim));
    let num: Vec<Value> = s
        .numerator
        .iter()
        .map(|(&(a, b), &c)| {
            if s.bigraded {
                json!([a, b, json_int(c)])
            } else {
                json!([a, json_int(c)])
            }
        })
        .collect();
    out.insert("numerator".into(), Value::Array(num));
    rows.push(("dim".into(), dim.to_string()));
    let (p, cert) = hilbert_polynomial(m)?;
    match p {
        HilbertPolynomial::Graded(p) => {
            out.insert("degree".into(), json_int(s.multiplicity()));
            out.insert(
                "polynomial".into(),
                Value::Array(p.coeffs().iter().map(|c| json_int(*c)).collect()),
            );
            let top = cert.threshold.0 + WINDOW as i64;
            let vals: Vec<Value> = (0..=top).map(|d| json_int(s.value(d, 0))).collect();
            out.insert("values".into(), Value::Array(vals));
            rows.push(("degree".into(), s.multiplicity().to_string()));
        }
        HilbertPolynomial::Bigraded(p) => {
            let coeffs: Vec<Value> = p
                .coefficients()
                .map(|((i, j), c)| json!([i, j, json_int(c)]))
                .collect();
            out.insert("polynomial".into(), Value::Array(coeffs));
            if dim >= 0 {
                let ee = ee_vector(m, dim as usize)?;
                rows.push(("ee".into(), ee.to_string()));
                out.insert("ee".into(), AdegValue::Vector(ee).to_json());
            }
        }
    }
    out.insert(
        "threshold".into(),
        json!([cert.threshold.0, cert.threshold.1]),
    );
    Ok((Value::Object(out), rows))
}

fn run_task(
    cx: &Context<'_>,
    task: &Task,
) -> Result<(
    Value,
    Vec<(String, String)>,
    Option<(VerificationRecord, Vec<String>)>,
)> {
    let j = cx.ideal(&task.args[0])?;
    let i = match task.args.get(1) {
        Some(n) => Some(cx.ideal(n)?),
        None => None,
    };
    if task.kind.needs_origin() {
        cx.require_local(task)?;
    }
    let i_gens = || i.as_ref().map(|x| x.gens().to_vec()).unwrap_or_default();
    let module = ModulePresentation::cyclic(&j);
    let mut failed = None;
    let (v, rows) = match task.kind {
        TaskKind::Gb => {
            let gb = j.groebner_basis(&cx.order.term_order())?;
            let rows = vec![("size".to_string(), gb.len().to_string())];
            (
                json!({"order": cx.order.as_str(), "basis": strings(gb.elements())}),
                rows,
            )
        }
        TaskKind::Hilbert => hilbert_json(&module)?,
        TaskKind::StdPairs => {
            let names = cx.ring.names();
            let pairs = standard_pairs(&j)?;
            let adeg = adeg_monomial(&j)?;
            let mut by_level = Map::new();
            let mut rows = Vec::new();
            for (lvl, v) in adeg.iter().enumerate().rev() {
                if *v != 0 {
                    by_level.insert(lvl.to_string(), json_int(*v));
                    rows.push((lvl.to_string(), v.to_string()));
                }
            }
            let shown: Vec<Value> = pairs
                .iter()
                .map(|p| Value::from(p.display(names)))
                .collect();
            (json!({"pairs": shown, "adeg": by_level}), rows)
        }
        TaskKind::Adeg => {
            let r = adeg_any(&module)?;
            let key = if cx.ring.is_bigraded() {
                "biadeg"
            } else {
                "adeg"
            };
            (report_json(key, &r), report_rows(&r))
        }
        TaskKind::Gg => {
            let gg = gg_presentation(&j, &i_gens())?;
            let s = gg.series()?;
            let (a, b) = gg.checked;
            let table: Vec<Value> = (0..=a.max(3))
                .map(|p| Value::Array((0..=b.max(3)).map(|q| json_int(s.value(p, q))).collect()))
                .collect();
            let rels: Vec<Polynomial> =
                gg.module.relations().iter().map(|c| c[0].clone()).collect();
            let mut rows = Vec::new();
            for (p, row) in table.iter().enumerate() {
                rows.push((format!("row{p}"), row.to_string()));
            }
            (
                json!({
                    "ring": gg.ring.to_string(),
                    "relations": strings(&rels),
                    "checked": [a, b],
                    "table": table,
                }),
                rows,
            )
        }
        TaskKind::Gmult => {
            let r = gmult_report(&j, &i_gens())?;
            (report_json("gmult", &r), report_rows(&r))
        }
        TaskKind::Ladeg => {
            let comps = cx.components(&task.args[0])?;
            let r = ladeg_report(&j, &i_gens(), comps.as_ref())?;
            (report_json("ladeg", &r), report_rows(&r))
        }
        TaskKind::Verify => {
            let opts = VerifyOptions {
                components: cx.components(&task.args[0])?,
                equidimensional: cx
                    .script
                    .certified(CertKind::Equidimensional, &task.args[0])
                    .then_some(true),
            };
            let rec = verify(&j, &i_gens(), &opts)?;
            let rows = rec
                .theorem
                .iter()
                .map(|c| (c.level.to_string(), format!("{} >= {}", c.lhs, c.rhs)))
                .collect();
            let v = json!({"record": rec.to_json()});
            if !rec.pass {
                failed = Some((rec.clone(), rec.failures()));
            }
            (v, rows)
        }
    };
    Ok((v, rows, failed))
}

/// Script text for a single `verify J I` with the declarations it needs.
fn reproducer_script(
    script: &SessionScript,
    task: &Task,
    j_gens: &[Polynomial],
    i_gens: &[Polynomial],
) -> String {
    let mut s = script.clone();
    s.options = Default::default();
    let (jn, iname) = (&task.args[0], &task.args[1]);
    let mut keep: Vec<String> = vec![jn.clone(), iname.clone()];
    if let Some(c) = script.components_of(jn) {
        keep.extend(c.parts.iter().map(|(p, _)| p.clone()));
    }
    s.ideals.retain(|d| keep.contains(&d.name));
    for d in &mut s.ideals {
        if &d.name == jn {
            d.gens = j_gens.to_vec();
        } else if &d.name == iname {
            d.gens = i_gens.to_vec();
        }
    }
    s.certificates.retain(|c| &c.ideal == jn);
    s.components.retain(|c| &c.ideal == jn);
    s.tasks = vec![task.clone()];
    s.emit()
}

/// Greedily drops generators of `J` and `I` while verification keeps failing.
fn minimize(
    j: &IdealHandle,
    i: &IdealHandle,
    opts: &VerifyOptions,
) -> (Vec<Polynomial>, Vec<Polynomial>) {
    let fails = |jg: &[Polynomial], ig: &[Polynomial]| -> bool {
        if ig.is_empty() {
            return false;
        }
        let Ok(jj) = IdealHandle::new(j.ring(), jg.to_vec()) else {
            return false;
        };
        matches!(verify(&jj, ig, opts), Ok(r) if !r.pass)
    };
    let mut jg = j.gens().to_vec();
    let mut ig = i.gens().to_vec();
    let mut k = 0;
    while k < jg.len() {
        let mut trial = jg.clone();
        trial.remove(k);
        if fails(&trial, &ig) {
            jg = trial;
        } else {
            k += 1;
        }
    }
    let mut k = 0;
    while k < ig.len() {
        let mut trial = ig.clone();
        trial.remove(k);
        if fails(&jg, &trial) {
            ig = trial;
        } else {
            k += 1;
        }
    }
    (jg, ig)
}

fn write_reproducer(dir: &Path, text: &str) -> std::io::Result<PathBuf> {
    use std::collections::hash_map::DefaultHasher;
    use std::hash::{Hash, Hasher};
    std::fs::create_dir_all(dir)?;
    let mut h = DefaultHasher::new();
    text.hash(&mut h);
    let path = dir.join(format!("repro-{:016x}.adeg", h.finish()));
    std::fs::write(&path, text)?;
    Ok(path)
}

/// Milliseconds since the call; always 0 in the browser, which has no clock
/// in `std`.
fn stopwatch() -> impl Fn() -> u128 {
    #[cfg(not(target_arch = "wasm32"))]
    {
        let start = std::time::Instant::now();
        move || start.elapsed().as_millis()
    }
    #[cfg(target_arch = "wasm32")]
    {
        || 0
    }
}

/// Default reproducer directory when none is configured.
pub fn default_cache_dir() -> PathBuf {
    std::env::temp_dir().join("adeg-cache")
}

/// Runs every task of the script in order. Failures are recorded per task;
/// `code` is the worst exit code among them.
pub fn run_script(script: &SessionScript, cfg: &RunConfig) -> Result<RunReport> {
    let ring = script.ring.build()?;
    let order = cfg
        .order
        .or(script.options.order)
        .unwrap_or(OrderName::Degrevlex);
    let defaults = Caps::default();
    let caps = Caps {
        max_basis: cfg
            .max_basis
            .or(script.options.max_basis)
            .unwrap_or(defaults.max_basis),
        max_degree: cfg
            .max_deg
            .or(script.options.max_deg)
            .unwrap_or(defaults.max_degree),
    };
    let cx = Context {
        script,
        ring: ring.clone(),
        order,
    };
    let mut outcomes = Vec::new();
    let mut code = 0;
    for task in &script.tasks {
        let elapsed = stopwatch();
        let res = Caps::scope(caps, || run_task(&cx, task));
        let millis = elapsed();
        let outcome = match res {
            Ok((v, rows, None)) => TaskOutcome {
                task: task.clone(),
                value: Ok(v),
                code: 0,
                millis,
                rows,
                reproducer: None,
            },
            Ok((_, rows, Some((rec, failures)))) => {
                let j = cx.ideal(&task.args[0])?;
                let i = cx.ideal(&task.args[1])?;
                let opts = VerifyOptions {
                    components: cx.components(&task.args[0])?,
                    equidimensional: script
                        .certified(CertKind::Equidimensional, &task.args[0])
                        .then_some(true),
                };
                let (jg, ig) = Caps::scope(caps, || minimize(&j, &i, &opts));
                let text = reproducer_script(script, task, &jg, &ig);
                let dir = cfg.cache_dir.clone().unwrap_or_else(default_cache_dir);
                let reproducer = write_reproducer(&dir, &text).ok();
                let _ = rec;
                TaskOutcome {
                    task: task.clone(),
                    value: Err(format!("theorem-violation: {}", failures.join("; "))),
                    code: 2,
                    millis,
                    rows,
                    reproducer,
                }
            }
            Err(e) => TaskOutcome {
                task: task.clone(),
                value: Err(format!("{}: {e}", error_kind(&e))),
                code: exit_code(&e),
                millis,
                rows: Vec::new(),
                reproducer: None,
            },
        };
        code = worst(code, outcome.code);
        outcomes.push(outcome);
    }
    Ok(RunReport {
        ring: format!("{} = {}", script.ring.name, script.ring),
        outcomes,
        caps,
        order,
        timings: cfg.timings,
        code,
    })
}

#[cfg(test)]
mod tests;
