//! Invariant suites behind `adeg check` and the acceptance tests. Each suite
//! counts its cases and collects a message per failure; a suite passes when
//! nothing failed and it reached its minimum case count.

use std::fmt;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::adeg::{adeg_graded, gmult, verify, ComponentData, VerifyOptions};
use crate::combinatorics::{adeg_monomial, standard_pairs};
use crate::corpus::{bundled, run_corpus, CorpusEntry};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{gg_presentation, samuel_multiplicity, Bifiltration};
use crate::groebner::{IdealHandle, ModulePresentation};
use crate::hilbert::{ee_vector, hilbert_polynomial, hilbert_value, p11};
use crate::monomial::{Monomial, TermOrder};
use crate::numerical::{NumericalPoly2, SumAxes};
use crate::oracle::hilbert_value_brute;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingRef};
use crate::run::{render, RunConfig};
use crate::session::{CertKind, SessionScript, TaskKind};

pub const SEED: u64 = 0x5eed_ade9;

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub required: usize,
    pub failures: Vec<String>,
    pub millis: u128,
}

impl SuiteResult {
    fn new(name: &'static str, required: usize) -> Self {
        Self {
            name,
            cases: 0,
            required,
            failures: Vec::new(),
            millis: 0,
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty() && self.cases >= self.required
    }

    fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn timed(mut self, start: Instant) -> Self {
        self.millis = start.elapsed().as_millis();
        self
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} cases (need {}), {} failures, {} ms",
            self.name,
            self.cases,
            self.required,
            self.failures.len(),
            self.millis
        )?;
        for m in self.failures.iter().take(5) {
            write!(f, "\n    {m}")?;
        }
        Ok(())
    }
}

const NAMES: [&str; 4] = ["x", "y", "z", "w"];

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> Monomial {
    let deg = rng.gen_range(0..=max_deg);
    let mut m = Monomial::one();
    for _ in 0..deg {
        let v = rng.gen_range(0..n);
        m.set_exp(v, m.exp(v) + 1);
    }
    m
}

fn random_polynomial(rng: &mut ChaCha8Rng, ring: &RingRef, max_deg: u32) -> Polynomial {
    let n = ring.nvars();
    let field = ring.field();
    let terms = rng.gen_range(1..=3);
    let mut p = Polynomial::zero(ring);
    for _ in 0..terms {
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-5..=5);
        }
        p.add_term(random_monomial(rng, n, max_deg), &field.from_i64(c));
    }
    p
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &TermOrder) -> Result<Polynomial> {
    let (mf, cf) = f.leading_term(ord)?;
    let (mg, cg) = g.leading_term(ord)?;
    let l = mf.lcm(&mg);
    let a = f.mul_term(&mf.quotient_of(&l).expect("lcm"), &cf.inv());
    let b = g.mul_term(&mg.quotient_of(&l).expect("lcm"), &cg.inv());
    Ok(&a - &b)
}

/// Buchberger soundness on seeded random ideals: S-polynomials of the
/// returned basis reduce to zero, inputs lie in the ideal, normal forms are
/// idempotent.
pub fn gb_soundness(count: usize, seed: u64) -> SuiteResult {
    let start = Instant::now();
    let mut out = SuiteResult::new("groebner-soundness", count);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    while out.cases < count && attempts < 4 * count {
        attempts += 1;
        let n = rng.gen_range(1..=4);
        let field = if attempts % 2 == 0 {
            Field::Rational
        } else {
            Field::Prime(32003)
        };
        let ring = Ring::standard(&NAMES[..n], field).expect("ring");
        let k = rng.gen_range(1..=4);
        let gens: Vec<Polynomial> = (0..k)
            .map(|_| random_polynomial(&mut rng, &ring, 4))
            .collect();
        let ord = if n <= 3 && attempts % 3 == 0 {
            TermOrder::Lex
        } else {
            TermOrder::Degrevlex
        };
        let gb = match crate::groebner::groebner_basis(&ring, &gens, &ord) {
            Ok(gb) => gb,
            Err(Error::ResourceLimit { .. }) => continue,
            Err(e) => {
                out.fail(format!("{gens:?}: {e}"));
                continue;
            }
        };
        let els = gb.elements();
        let mut ok = true;
        for a in 0..els.len() {
            for b in a + 1..els.len() {
                let s = s_polynomial(&els[a], &els[b], &ord).and_then(|s| gb.normal_form(&s));
                ok &= matches!(s, Ok(ref r) if r.is_zero());
            }
        }
        for g in &gens {
            ok &= matches!(gb.normal_form(g), Ok(ref r) if r.is_zero());
        }
        for _ in 0..3 {
            let f = random_polynomial(&mut rng, &ring, 5);
            let once = gb.normal_form(&f);
            let twice = once.as_ref().ok().map(|r| gb.normal_form(r));
            ok &= matches!((once, twice), (Ok(a), Some(Ok(b))) if a == b);
        }
        out.check(ok, || format!("basis of {gens:?} under {ord:?} is unsound"));
    }
    out.timed(start)
}

/// Parsed ring and ideals of a corpus entry.
pub struct ParsedEntry {
    pub id: String,
    pub script: SessionScript,
    pub ring: RingRef,
}

impl ParsedEntry {
    pub fn ideal(&self, name: &str) -> Result<IdealHandle> {
        let d = self
            .script
            .ideal(name)
            .ok_or_else(|| Error::InvalidArgument(format!("undeclared ideal '{name}'")))?;
        IdealHandle::new(&self.ring, d.gens.clone())
    }

    pub fn options(&self, j: &str) -> Result<VerifyOptions> {
        let components = match self.script.components_of(j) {
            Some(c) => {
                let mut primes = Vec::new();
                for (p, l) in &c.parts {
                    primes.push((self.ideal(p)?, *l));
                }
                Some(ComponentData { primes })
            }
            None => None,
        };
        Ok(VerifyOptions {
            components,
            equidimensional: self
                .script
                .certified(CertKind::Equidimensional, j)
                .then_some(true),
        })
    }
}

pub fn parse_entries(entries: &[CorpusEntry]) -> Result<Vec<ParsedEntry>> {
    entries
        .iter()
        .map(|e| {
            let script = e.parse()?;
            let ring = script.ring.build()?;
            Ok(ParsedEntry {
                id: e.id.clone(),
                script,
                ring,
            })
        })
        .collect()
}

/// A local pair `(J, I)` named by some gg, gmult, ladeg or verify task.
pub struct CorpusPair {
    pub label: String,
    pub j: IdealHandle,
    pub i: Vec<Polynomial>,
    pub options: VerifyOptions,
}

pub fn corpus_pairs(parsed: &[ParsedEntry]) -> Result<Vec<CorpusPair>> {
    let mut out: Vec<CorpusPair> = Vec::new();
    for p in parsed {
        let mut seen: Vec<(String, String)> = Vec::new();
        for t in &p.script.tasks {
            if !t.kind.needs_origin() || t.args.len() < 2 {
                continue;
            }
            let key = (t.args[0].clone(), t.args[1].clone());
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            out.push(CorpusPair {
                label: format!("{} ({}, {})", p.id, t.args[0], t.args[1]),
                j: p.ideal(&t.args[0])?,
                i: p.ideal(&t.args[1])?.gens().to_vec(),
                options: p.options(&t.args[0])?,
            });
        }
    }
    Ok(out)
}

/// Every distinct homogeneous quotient `S/J` over a standard or bigraded
/// ring among the declared ideals of the corpus.
pub fn corpus_modules(parsed: &[ParsedEntry]) -> Result<Vec<(String, ModulePresentation)>> {
    let mut out = Vec::new();
    let mut seen: Vec<String> = Vec::new();
    for p in parsed {
        for d in &p.script.ideals {
            let j = p.ideal(&d.name)?;
            let key = format!("{} {:?}", p.script.ring, j.gens());
            if seen.contains(&key) || !j.is_homogeneous()? || j.is_unit()? {
                continue;
            }
            seen.push(key);
            out.push((
                format!("{}:{}", p.id, d.name),
                ModulePresentation::cyclic(&j),
            ));
        }
    }
    Ok(out)
}

/// Staircase Hilbert values against brute-force enumeration up to twice the
/// stabilization threshold.
pub fn hilbert_oracle(modules: &[(String, ModulePresentation)], required: usize) -> SuiteResult {
    let start = Instant::now();
    let mut out = SuiteResult::new("hilbert-oracle", required);
    for (label, m) in modules {
        if !m.ring().is_standard() {
            continue;
        }
        let threshold = match hilbert_polynomial(m) {
            Ok((_, cert)) => cert.threshold.0.max(1),
            Err(e) => {
                out.fail(format!("{label}: {e}"));
                continue;
            }
        };
        let mut bad = Vec::new();
        for d in 0..=2 * threshold as i32 {
            let fast = hilbert_value(m, [d, 0]);
            let slow = hilbert_value_brute(m, [d, 0]);
            match (fast, slow) {
                (Ok(a), Ok(b)) if a == b => {}
                (a, b) => bad.push(format!("degree {d}: {a:?} vs {b:?}")),
            }
        }
        out.check(bad.is_empty(), || format!("{label}: {}", bad.join(", ")));
    }
    out.timed(start)
}

fn random_poly2(rng: &mut ChaCha8Rng) -> NumericalPoly2 {
    let (a, b) = (rng.gen_range(0..5u32), rng.gen_range(0..5u32));
    let support: Vec<(u32, u32)> = (0..=a).flat_map(|i| (0..=b).map(move |j| (i, j))).collect();
    NumericalPoly2::new(
        support
            .into_iter()
            .map(|ij| (ij, rng.gen_range(-5..=5i128))),
    )
}

/// Composition of differences on random numerical polynomials, the pointwise
/// meaning of `Δ^{(1,0)}` and `Δ^{(0,1)}`, and the top coefficients of
/// `P^{(1,1)}` as differences on the bigraded modules.
pub fn delta_calculus(
    count: usize,
    seed: u64,
    modules: &[(String, ModulePresentation)],
) -> SuiteResult {
    let start = Instant::now();
    let mut out = SuiteResult::new("delta-calculus", count);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let p = random_poly2(&mut rng);
        let (r, s, m, n) = (
            rng.gen_range(0..4i64),
            rng.gen_range(0..4i64),
            rng.gen_range(0..4i64),
            rng.gen_range(0..4i64),
        );
        let lhs = p.difference(m, n).and_then(|q| q.difference(r, s));
        let rhs = p.difference(r + m, s + n);
        let mut ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
        let dx = p.difference(1, 0).expect("non-negative");
        let dy = p.difference(0, 1).expect("non-negative");
        for u in -3..6 {
            for v in -3..6 {
                ok &= dx.eval(u, v) == p.eval(u, v) - p.eval(u - 1, v);
                ok &= dy.eval(u, v) == p.eval(u, v) - p.eval(u, v - 1);
            }
        }
        out.check(ok, || {
            format!("Δ composition fails for ({r},{s})+({m},{n}) on {p:?}")
        });
    }
    for (label, m) in modules {
        if !m.ring().is_bigraded() {
            continue;
        }
        let res = (|| -> Result<bool> {
            let (p, _) = p11(m)?;
            let Some(q) = p.degree() else { return Ok(true) };
            let ee = ee_vector(m, q as usize)?;
            let mut ok = true;
            for t in 0..=q {
                let d = p.difference(t as i64, (q - t) as i64)?;
                ok &= d.degree().unwrap_or(0) == 0 && d.eval(0, 0) == ee.components[t as usize];
            }
            // P^{(1,1)} is the double sum of the plain Hilbert polynomial.
            let s = crate::hilbert::hilbert_series(m)?;
            for u in 0..4 {
                ok &= p.eval(20 + u, 20) == s.summed_value(20 + u, 20, SumAxes::Both);
            }
            Ok(ok)
        })();
        match res {
            Ok(ok) => out.check(ok, || {
                format!("{label}: top coefficients of P11 disagree with ee")
            }),
            Err(e) => out.fail(format!("{label}: {e}")),
        }
    }
    out.timed(start)
}

fn random_monomial_gens(rng: &mut ChaCha8Rng, n: usize) -> Vec<Monomial> {
    let k = rng.gen_range(1..=4);
    let mut gens = Vec::new();
    while gens.len() < k {
        let m = random_monomial(rng, n, 4);
        if !m.is_one() && !gens.contains(&m) {
            gens.push(m);
        }
    }
    gens
}

/// Ext-route arithmetic degrees against standard pairs on monomial ideals,
/// starting with `(x^2, xy)` and `(xy)`.
pub fn monomial_adeg(count: usize, seed: u64) -> SuiteResult {
    let start = Instant::now();
    let mut out = SuiteResult::new("monomial-adeg", count);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fixed = [
        vec![
            Monomial::from_exponents(&[2, 0]),
            Monomial::from_exponents(&[1, 1]),
        ],
        vec![Monomial::from_exponents(&[1, 1])],
    ];
    let expected_fixed = [vec![1i128, 1, 0], vec![0, 2, 0]];
    for k in 0..count {
        let (n, gens) = if k < fixed.len() {
            (2, fixed[k].clone())
        } else {
            let n = rng.gen_range(2..=4);
            (n, random_monomial_gens(&mut rng, n))
        };
        let ring = Ring::standard(&NAMES[..n], Field::Rational).expect("ring");
        let ideal = IdealHandle::from_monomials(&ring, &gens);
        let res = (|| -> Result<(Vec<i128>, Vec<i128>)> {
            let oracle = adeg_monomial(&ideal)?;
            let m = ModulePresentation::cyclic(&ideal);
            let ext = (0..=n)
                .map(|i| adeg_graded(&m, i))
                .collect::<Result<Vec<_>>>()?;
            Ok((ext, oracle))
        })();
        match res {
            Ok((ext, oracle)) => {
                let fixed_ok = k >= fixed.len() || oracle == expected_fixed[k];
                let pairs_ok = standard_pairs(&ideal)
                    .map(|p| p.len() as i128 == oracle.iter().sum::<i128>())
                    .unwrap_or(false);
                out.check(ext == oracle && fixed_ok && pairs_ok, || {
                    format!("{gens:?}: Ext {ext:?} vs pairs {oracle:?}")
                });
            }
            Err(Error::ResourceLimit { .. }) => {}
            Err(e) => out.fail(format!("{gens:?}: {e}")),
        }
    }
    out.timed(start)
}

/// `m`-primary monomial `I`: gmult at the top level is `(e(I; A), 0, ..., 0)`
/// with `e` interpolated from the Samuel function.
pub fn clad_degeneration() -> SuiteResult {
    let start = Instant::now();
    let cases: &[(&[&str], &str, &[&str])] = &[
        (&["x"], "0", &["x^2"]),
        (&["x"], "0", &["x^3"]),
        (&["x", "y"], "0", &["x", "y"]),
        (&["x", "y"], "0", &["x^2", "x*y", "y^2"]),
        (&["x", "y"], "0", &["x^3", "x^2*y", "x*y^2", "y^3"]),
        (&["x", "y"], "0", &["x^2", "y^3"]),
        (&["x", "y"], "0", &["x^2", "x*y", "y^3"]),
        (&["x", "y"], "0", &["x^3", "y^2", "x*y"]),
        (&["x", "y", "z"], "0", &["x", "y", "z"]),
        (&["x", "y", "z"], "0", &["x^2", "y", "z^2"]),
        (&["x", "y"], "y^2 - x^3", &["x", "y"]),
        (&["x", "y"], "x*y", &["x^2", "y^2"]),
        (&["x", "y", "z"], "x*y - z^2", &["x", "y", "z"]),
    ];
    let mut out = SuiteResult::new("clad-degeneration", 10);
    for (vars, j, i) in cases {
        let label = format!("J = ({j}), I = ({})", i.join(", "));
        let res = (|| -> Result<bool> {
            let ring = Ring::standard(vars, Field::Rational)?;
            let parse = |s: &str| crate::parse::parse_polynomial(&ring, s);
            let jgens = if *j == "0" {
                Vec::new()
            } else {
                vec![parse(j)?]
            };
            let jd = IdealHandle::new(&ring, jgens)?;
            let igens = i.iter().map(|s| parse(s)).collect::<Result<Vec<_>>>()?;
            let (_, e) = samuel_multiplicity(&jd, &igens)?;
            let d = crate::adeg::local_dimension(&jd)? as usize;
            let g = gmult(&jd, &igens, d)?;
            let rest_zero = g.components.iter().skip(1).all(|&c| c == 0);
            Ok(g.components[0] == e && rest_zero && e > 0)
        })();
        match res {
            Ok(ok) => out.check(ok, || {
                format!("{label}: gmult differs from the Samuel multiplicity")
            }),
            Err(e) => out.fail(format!("{label}: {e}")),
        }
    }
    out.timed(start)
}

/// The sum identity on every corpus pair, read off the verification record.
pub fn prop_sum(pairs: &[CorpusPair]) -> SuiteResult {
    let start = Instant::now();
    let mut out = SuiteResult::new("sum-identity", pairs.len());
    for p in pairs {
        match verify(&p.j, &p.i, &p.options) {
            Ok(rec) => {
                let ok = !rec.prop_sum.is_empty() && rec.prop_sum.iter().all(|c| c.holds);
                out.check(ok, || format!("{}: {:?}", p.label, rec.prop_sum));
            }
            Err(e) => out.fail(format!("{}: {e}", p.label)),
        }
    }
    out.timed(start)
}

/// Every verification task in the corpus passes and every expected value
/// matches; the strict and equality cases are checked by name.
pub fn corpus_verification(entries: &[CorpusEntry], parallel: usize) -> SuiteResult {
    let start = Instant::now();
    let verify_tasks: usize = entries
        .iter()
        .filter_map(|e| e.parse().ok())
        .map(|s| {
            s.tasks
                .iter()
                .filter(|t| t.kind == TaskKind::Verify)
                .count()
        })
        .sum();
    let mut out = SuiteResult::new("corpus-verification", verify_tasks.max(1));
    let run = match run_corpus(entries, &RunConfig::default(), parallel) {
        Ok(r) => r,
        Err(e) => {
            out.fail(e.to_string());
            return out.timed(start);
        }
    };
    for e in &run.entries {
        match &e.report {
            Ok(r) => {
                for o in &r.outcomes {
                    if o.task.kind == TaskKind::Verify {
                        out.check(o.value.is_ok(), || {
                            format!("{} {}: {:?}", e.id, o.task, o.value.as_ref().err())
                        });
                    } else if let Err(m) = &o.value {
                        out.fail(format!("{} {}: {m}", e.id, o.task));
                    }
                }
            }
            Err(m) => out.fail(format!("{}: {m}", e.id)),
        }
        for c in e.checks.iter().filter(|c| !c.pass) {
            out.fail(format!(
                "{} {}: expected {} got {}",
                e.id, c.expectation.pointer, c.expectation.value, c.actual
            ));
        }
    }
    let named = [
        ("strict-line", "/record/corollary1/1", (2, 1)),
        ("cusp-equality", "/record/corollary1/1", (2, 2)),
    ];
    for (id, ptr, (l, r)) in named {
        let found = run
            .entries
            .iter()
            .find(|e| e.id == id)
            .and_then(|e| e.report.as_ref().ok())
            .and_then(|r| {
                r.outcomes
                    .iter()
                    .find(|o| o.task.kind == TaskKind::Verify)
                    .and_then(|o| o.value.as_ref().ok().cloned())
            });
        let ok = found
            .as_ref()
            .and_then(|v| v.pointer(ptr))
            .is_some_and(|c| c["lhs"] == l && c["rhs"] == r);
        if !ok {
            out.fail(format!("{id}: expected {l} against {r} at {ptr}"));
        }
    }
    out.timed(start)
}

/// The GG presentation of every corpus pair against the bifiltration, both
/// as Hilbert values and as double sums, over the checked rectangle.
pub fn gg_gate(pairs: &[CorpusPair]) -> SuiteResult {
    let start = Instant::now();
    let mut out = SuiteResult::new("gg-gate", pairs.len());
    for p in pairs {
        let res = (|| -> Result<Vec<String>> {
            let g = gg_presentation(&p.j, &p.i)?;
            let series = g.series()?;
            let mut bif = Bifiltration::new(&p.j, &p.i)?;
            let mut bad = Vec::new();
            for a in 0..=g.checked.0 {
                for b in 0..=g.checked.1 {
                    let direct = bif.gg_value(a as u32, b as u32)?;
                    if series.value(a, b) != direct {
                        bad.push(format!(
                            "value at ({a}, {b}): {} vs {direct}",
                            series.value(a, b)
                        ));
                    }
                    let h = bif.h11(a as u32, b as u32)?;
                    if series.summed_value(a, b, SumAxes::Both) != h {
                        bad.push(format!("h11 at ({a}, {b})"));
                    }
                }
            }
            Ok(bad)
        })();
        match res {
            Ok(bad) => out.check(bad.is_empty(), || {
                format!("{}: {}", p.label, bad.join("; "))
            }),
            Err(e) => out.fail(format!("{}: {e}", p.label)),
        }
    }
    out.timed(start)
}

/// Two sequential corpus runs render to the same bytes, and a parallel run
/// assembles the same document.
pub fn determinism(entries: &[CorpusEntry], parallel: usize) -> SuiteResult {
    let start = Instant::now();
    let mut out = SuiteResult::new("determinism", 2);
    let render_run = |k: usize| -> Result<String> {
        Ok(render(
            &run_corpus(entries, &RunConfig::default(), k)?.to_json(),
        ))
    };
    match (render_run(1), render_run(1), render_run(parallel.max(2))) {
        (Ok(a), Ok(b), Ok(c)) => {
            out.check(a == b, || "two --parallel 1 runs differ".into());
            out.check(a == c, || {
                format!("--parallel {} differs from --parallel 1", parallel.max(2))
            });
        }
        (a, b, c) => out.fail(format!("{:?}", [a.err(), b.err(), c.err()])),
    }
    out.timed(start)
}

/// Every suite at the sizes used by the acceptance tests.
pub fn all_suites(parallel: usize) -> Result<Vec<SuiteResult>> {
    let entries = bundled();
    let parsed = parse_entries(&entries)?;
    let pairs = corpus_pairs(&parsed)?;
    let modules = corpus_modules(&parsed)?;
    Ok(vec![
        gb_soundness(200, SEED),
        hilbert_oracle(&modules, 30),
        delta_calculus(100, SEED, &modules),
        monomial_adeg(50, SEED),
        clad_degeneration(),
        prop_sum(&pairs),
        corpus_verification(&entries, parallel),
        gg_gate(&pairs),
        determinism(&entries, parallel),
    ])
}

#[cfg(test)]
mod tests;
