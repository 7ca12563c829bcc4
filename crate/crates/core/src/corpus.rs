//! The bundled corpus: worked examples, seeded random monomial ideals, the
//! cusps `y^2 - x^(2k+1)` and the embedded families `(x^a, x^b y)`. Each
//! expected value names the oracle it came from.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::combinatorics::adeg_monomial;
use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::monomial::Monomial;
use crate::poly::format_monomial;
use crate::ring::Ring;
use crate::run::{run_script, worst, RunConfig, RunReport};
use crate::session::{parse_session, CertKind, SessionScript};

/// Seed of the random part of the corpus.
pub const SEED: u64 = 20_240_611;

/// A value a task must produce, addressed by a JSON pointer into its result.
#[derive(Clone, Debug)]
pub struct Expectation {
    pub task: usize,
    pub pointer: String,
    pub value: Value,
    pub source: String,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: String,
    pub script: String,
    pub expected: Vec<Expectation>,
}

impl CorpusEntry {
    fn new(id: impl Into<String>, script: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            script: script.into(),
            expected: Vec::new(),
        }
    }

    fn expect(mut self, task: usize, pointer: &str, value: Value, source: &str) -> Self {
        self.expected.push(Expectation {
            task,
            pointer: pointer.into(),
            value,
            source: source.into(),
        });
        self
    }

    /// Parses the script and checks the metadata invariants: expected values
    /// point at existing tasks and local tasks carry the origin certificate.
    pub fn parse(&self) -> Result<SessionScript> {
        let s = parse_session(&self.script)?;
        for t in &s.tasks {
            if t.kind.needs_origin() && !s.certified(CertKind::Origin, &t.args[0]) {
                return Err(Error::InvalidArgument(format!(
                    "{}: task {t} lacks the origin certificate",
                    self.id
                )));
            }
        }
        for e in &self.expected {
            if e.task >= s.tasks.len() || e.source.is_empty() {
                return Err(Error::InvalidArgument(format!(
                    "{}: malformed expectation {}",
                    self.id, e.pointer
                )));
            }
        }
        Ok(s)
    }
}

const MONO: &str = "derived: standard pairs";
const WORKED: &str = "worked example";
const SAMUEL: &str = "derived: Hilbert-Samuel interpolation";

fn worked_examples() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry::new(
            "adeg-x2-xy",
            "ring S = Q[x, y];\nideal J = x^2, x*y;\nideal m = x, y;\ncertify origin J;\n\
             task adeg J;\ntask stdpairs J;\ntask ladeg J m;\ntask verify J m;\n",
        )
        .expect(0, "/adeg", json!({"1": 1, "0": 1}), MONO)
        .expect(2, "/ladeg/0", json!([1]), "derived: M<=0 = (x)/(x^2,xy) has length 1")
        .expect(3, "/record/corollary2/embedded_gr", json!([0]), MONO),
        CorpusEntry::new("adeg-xy", "ring S = Q[x, y];\nideal J = x*y;\ntask adeg J;\ntask hilbert J;\n")
            .expect(0, "/adeg", json!({"1": 2, "0": 0}), MONO)
            .expect(1, "/degree", json!(2), MONO),
        CorpusEntry::new("adeg-free", "ring S = Q[x, y, z];\nideal J = 0;\ntask adeg J;\n")
            .expect(0, "/adeg", json!({"3": 1, "2": 0, "1": 0, "0": 0}), "trivial: free module"),
        CorpusEntry::new(
            "hilbert-x2-xy",
            "ring S = Q[x, y];\nideal J = x^2, x*y;\ntask hilbert J;\n",
        )
        .expect(0, "/values/0", json!(1), MONO)
        .expect(0, "/values/1", json!(2), MONO)
        .expect(0, "/values/2", json!(1), MONO)
        .expect(0, "/polynomial", json!([1]), MONO),
        CorpusEntry::new("biadeg-free", "ring T = Q[x | y];\nideal J = 0;\ntask adeg J;\n")
            .expect(0, "/biadeg/2", json!([0, 1, 0]), "derived: ee of the free module"),
        CorpusEntry::new("biadeg-x2", "ring T = Q[x | y];\nideal J = x^2;\ntask adeg J;\n")
            .expect(0, "/biadeg/1", json!([2, 0]), WORKED),
        CorpusEntry::new(
            "strict-line",
            "ring S = Q[x];\nideal J = 0;\nideal I = x^2;\ncertify origin J;\n\
             task gg J I;\ntask gmult J I;\ntask verify J I;\n",
        )
        .expect(0, "/relations", json!(["x^2"]), WORKED)
        .expect(1, "/gmult/1", json!([2, 0]), WORKED)
        .expect(2, "/record/corollary1/1/lhs", json!(2), WORKED)
        .expect(2, "/record/corollary1/1/rhs", json!(1), WORKED)
        .expect(2, "/record/prop_clad/samuel", json!(2), SAMUEL),
        CorpusEntry::new(
            "cusp-equality",
            "ring S = Q[x, y];\nideal J = y^2 - x^3;\nideal m = x, y;\ncertify origin J;\n\
             task gg J m;\ntask verify J m;\n",
        )
        .expect(0, "/relations", json!(["y", "x", "u2^2"]), "derived: gr_m of the cusp is k[u1, u2]/(u2^2)")
        .expect(1, "/record/corollary1/1/lhs", json!(2), MONO)
        .expect(1, "/record/corollary1/1/rhs", json!(2), SAMUEL),
        CorpusEntry::new(
            "clad-x2-y3",
            "ring S = Q[x, y];\nideal J = 0;\nideal I = x^2, y^3;\ncertify origin J;\ntask verify J I;\n",
        )
        .expect(0, "/record/prop_clad/samuel", json!(6), SAMUEL)
        .expect(0, "/record/gmult/2", json!([6, 0, 0]), SAMUEL),
        CorpusEntry::new(
            "clad-m2",
            "ring S = Q[x, y];\nideal J = 0;\nideal I = x^2, x*y, y^2;\ncertify origin J;\ntask verify J I;\n",
        )
        .expect(0, "/record/prop_clad/samuel", json!(4), SAMUEL),
        CorpusEntry::new(
            "node",
            "ring S = Q[x, y];\nideal J = y^2 - x^2 - x^3;\nideal m = x, y;\nideal I = y;\ncertify origin J;\n\
             task adeg J;\ntask verify J m;\ntask verify J I;\n",
        )
        .expect(0, "/adeg/1", json!(2), SAMUEL),
        CorpusEntry::new(
            "three-lines",
            "ring S = Q[x, y];\nideal J = x*y*(x + y);\nideal m = x, y;\nideal I = x;\ncertify origin J;\n\
             task adeg J;\ntask verify J m;\ntask verify J I;\n",
        )
        .expect(0, "/adeg", json!({"1": 3, "0": 0}), "derived: degree of a plane cubic"),
        CorpusEntry::new(
            "embedded-sheared",
            "ring S = Q[x, y];\nideal J = (x + y)^2, (x + y)*y;\nideal P = x + y;\nideal m = x, y;\n\
             certify origin J;\ncertify equidimensional J;\ncomponents J = P:1, m:1;\n\
             task adeg J;\ntask ladeg J m;\ntask verify J m;\n",
        )
        .expect(0, "/adeg", json!({"1": 1, "0": 1}), "derived: linear change of (x^2, xy)")
        .expect(1, "/provenance/0/0", json!("definition"), "supplied components"),
        CorpusEntry::new(
            "space-curve-embedded",
            "ring S = Q[x, y, z];\nideal J = x^2, x*y, x*z;\nideal m = x, y, z;\nideal I = y, z;\ncertify origin J;\n\
             task adeg J;\ntask verify J m;\ntask verify J I;\n",
        )
        .expect(0, "/adeg", json!({"2": 1, "1": 0, "0": 1}), MONO),
    ]
}

fn cusps() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for k in 1..=4 {
        let e = 2 * k + 1;
        out.push(
            CorpusEntry::new(
                format!("cusp-{e}"),
                format!(
                    "ring S = Q[x, y];\nideal J = y^2 - x^{e};\nideal m = x, y;\ncertify origin J;\n\
                     task hilbert J;\ntask verify J m;\n"
                ),
            )
            .expect(0, "/multiplicity", json!(2), SAMUEL)
            .expect(1, "/record/theorem/1/rhs", json!(2), SAMUEL),
        );
    }
    for (k, i) in [(1, "x"), (1, "y"), (2, "x^2, y")] {
        let e = 2 * k + 1;
        let id = format!("cusp-{e}-I-{}", i.replace(", ", "-").replace('^', ""));
        out.push(CorpusEntry::new(
            id,
            format!(
                "ring S = Q[x, y];\nideal J = y^2 - x^{e};\nideal I = {i};\ncertify origin J;\n\
                 task gmult J I;\ntask verify J I;\n"
            ),
        ));
    }
    out
}

fn embedded_family() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for a in 2..=4 {
        for b in 1..a {
            let source = "derived: pairs (x^i, {y}) for i < b and (x^i, {}) for b <= i < a";
            let mut e = CorpusEntry::new(
                format!("embedded-x{a}-x{b}y"),
                format!(
                    "ring S = Q[x, y];\nideal J = x^{a}, x^{b}*y;\nideal m = x, y;\nideal I = x;\ncertify origin J;\n\
                     task adeg J;\ntask verify J m;\ntask verify J I;\n"
                ),
            )
            .expect(0, "/adeg", json!({"1": b, "0": a - b}), source);
            e = e.expect(1, "/record/corollary2/embedded_gr", json!([0]), MONO);
            out.push(e);
        }
    }
    out
}

fn random_monomial_ideal(rng: &mut ChaCha8Rng, n: usize) -> Vec<Monomial> {
    let k = rng.gen_range(1..=4);
    let mut gens = Vec::new();
    while gens.len() < k {
        let deg = rng.gen_range(1..=4u32);
        let mut e = vec![0u32; n];
        for _ in 0..deg {
            e[rng.gen_range(0..n)] += 1;
        }
        let m = Monomial::from_exponents(&e);
        if !gens.contains(&m) {
            gens.push(m);
        }
    }
    gens
}

/// Seeded random monomial ideals in 2 to 4 variables, generator degree at
/// most 4. Expected arithmetic degrees come from the standard pairs.
pub fn random_monomial_entries(count: usize, seed: u64) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names = ["x", "y", "z", "w"];
    let mut out = Vec::new();
    for k in 0..count {
        let n = 2 + k % 3;
        let vars = &names[..n];
        let gens = random_monomial_ideal(&mut rng, n);
        let ring = Ring::standard(vars, crate::field::Field::Rational).expect("small ring");
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let text: Vec<String> = gens.iter().map(|m| format_monomial(m, &names)).collect();
        let oracle =
            adeg_monomial(&IdealHandle::from_monomials(&ring, &gens)).expect("monomial input");
        let dim = crate::hilbert::monomial_dimension(&gens, n);
        let mut expected = Map::new();
        for i in (0..=dim.max(0) as usize).rev() {
            expected.insert(i.to_string(), json!(oracle[i]));
        }
        let mut script = format!(
            "ring S = Q[{}];\nideal J = {};\nideal m = {};\ncertify origin J;\ntask adeg J;\ntask stdpairs J;\n",
            vars.join(", "),
            text.join(", "),
            vars.join(", ")
        );
        if n <= 3 {
            script += "task verify J m;\n";
        }
        out.push(CorpusEntry::new(format!("random-{k:02}"), script).expect(
            0,
            "/adeg",
            Value::Object(expected),
            MONO,
        ));
    }
    out
}

/// Every bundled entry, in a fixed order.
pub fn bundled() -> Vec<CorpusEntry> {
    let mut out = worked_examples();
    out.extend(cusps());
    out.extend(embedded_family());
    out.extend(random_monomial_entries(12, SEED));
    out
}

#[derive(Clone, Debug)]
pub struct ExpectationResult {
    pub expectation: Expectation,
    pub actual: Value,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct EntryResult {
    pub id: String,
    pub report: std::result::Result<RunReport, String>,
    pub checks: Vec<ExpectationResult>,
    pub code: i32,
}

impl EntryResult {
    pub fn pass(&self) -> bool {
        self.code == 0 && self.checks.iter().all(|c| c.pass)
    }
}

fn run_entry(e: &CorpusEntry, cfg: &RunConfig) -> EntryResult {
    let script = match e.parse() {
        Ok(s) => s,
        Err(err) => {
            return EntryResult {
                id: e.id.clone(),
                report: Err(err.to_string()),
                checks: Vec::new(),
                code: 1,
            }
        }
    };
    let report = match run_script(&script, cfg) {
        Ok(r) => r,
        Err(err) => {
            return EntryResult {
                id: e.id.clone(),
                report: Err(err.to_string()),
                checks: Vec::new(),
                code: crate::run::exit_code(&err),
            }
        }
    };
    let json = report.to_json();
    let checks = e
        .expected
        .iter()
        .map(|x| {
            let actual = json["results"][x.task]
                .pointer(&x.pointer)
                .cloned()
                .unwrap_or(Value::Null);
            ExpectationResult {
                pass: actual == x.value,
                actual,
                expectation: x.clone(),
            }
        })
        .collect();
    EntryResult {
        id: e.id.clone(),
        code: report.code,
        report: Ok(report),
        checks,
    }
}

#[derive(Clone, Debug)]
pub struct CorpusRun {
    pub entries: Vec<EntryResult>,
    pub code: i32,
}

/// Runs the entries on `parallel` worker threads. Results come back in entry
/// order whatever the completion order.
pub fn run_corpus(entries: &[CorpusEntry], cfg: &RunConfig, parallel: usize) -> Result<CorpusRun> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallel.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let results: Vec<EntryResult> =
        pool.install(|| entries.par_iter().map(|e| run_entry(e, cfg)).collect());
    let mut code = 0;
    for r in &results {
        let c = if r.code == 0 && !r.pass() { 2 } else { r.code };
        code = worst(code, c);
    }
    Ok(CorpusRun {
        entries: results,
        code,
    })
}

impl CorpusRun {
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.pass()).count()
    }

    pub fn to_json(&self) -> Value {
        let results: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                let mut m = Map::new();
                m.insert("id".into(), Value::from(e.id.clone()));
                match &e.report {
                    Ok(r) => {
                        let v = r.to_json();
                        m.insert("ring".into(), v["ring"].clone());
                        m.insert("tasks".into(), v["tasks"].clone());
                        m.insert("results".into(), v["results"].clone());
                    }
                    Err(msg) => {
                        m.insert("error".into(), Value::from(msg.clone()));
                    }
                }
                let checks: Vec<Value> = e
                    .checks
                    .iter()
                    .map(|c| {
                        json!({
                            "task": c.expectation.task,
                            "pointer": c.expectation.pointer,
                            "expected": c.expectation.value,
                            "actual": c.actual,
                            "source": c.expectation.source,
                            "pass": c.pass,
                        })
                    })
                    .collect();
                m.insert("expected".into(), Value::Array(checks));
                m.insert("pass".into(), Value::from(e.pass()));
                Value::Object(m)
            })
            .collect();
        let timings: Map<String, Value> = Map::new();
        json!({
            "ring": Value::Null,
            "tasks": self.entries.iter().map(|e| e.id.clone()).collect::<Vec<_>>(),
            "results": results,
            "timings": timings,
            "provenance": {
                "tool": "adeg",
                "version": env!("CARGO_PKG_VERSION"),
                "seed": SEED,
                "entries": self.entries.len(),
                "passed": self.passed(),
            },
        })
    }

    /// `entry,task,i,value,status`: one row per level of every task, then one
    /// per expected value (`i` is then the JSON pointer).
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::InvalidArgument(format!("csv: {e}"));
        w.write_record(["entry", "task", "i", "value", "status"])
            .map_err(io)?;
        for e in &self.entries {
            match &e.report {
                Ok(r) => {
                    for o in &r.outcomes {
                        let status = if o.value.is_ok() { "pass" } else { "fail" };
                        let task = o.task.to_string();
                        if o.rows.is_empty() {
                            w.write_record([e.id.as_str(), &task, "", "", status])
                                .map_err(io)?;
                        }
                        for (i, v) in &o.rows {
                            w.write_record([e.id.as_str(), &task, i, v, status])
                                .map_err(io)?;
                        }
                    }
                    for c in &e.checks {
                        let task = r.outcomes[c.expectation.task].task.to_string();
                        let status = if c.pass { "pass" } else { "fail" };
                        w.write_record([
                            e.id.as_str(),
                            &task,
                            &c.expectation.pointer,
                            &c.actual.to_string(),
                            status,
                        ])
                        .map_err(io)?;
                    }
                }
                Err(msg) => {
                    w.write_record([e.id.as_str(), "", "", msg.as_str(), "fail"])
                        .map_err(io)?;
                }
            }
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}

#[cfg(test)]
mod tests;
