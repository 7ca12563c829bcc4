//! Arithmetic degrees: graded `adeg_i` through Ext, bigraded `biadeg_i`,
//! the local `gmult_i` / `ladeg_i` of a pair `(J, I)`, and the harness that
//! checks the inequalities relating `A = S/J` to `gr_I(A)` and `GG(A)`.
//!
//! Every value records the pipeline that produced it and the independent
//! pipelines that agreed with it. A disagreement between pipelines is an
//! internal bug and surfaces as [`Error::InternalConsistency`].

use std::fmt;

use serde_json::{json, Map, Value};

use crate::combinatorics::{adeg_monomial, local_lengths, m_leq_monomial, monomial_gens};
use crate::error::{Error, Result};
use crate::graded::{
    assoc_graded, gg_module, gg_of_module, gg_presentation, lowest_forms, samuel_multiplicity,
    tangent_cone, BigradedPresentation,
};
use crate::groebner::{ext_presentation, IdealHandle, ModulePresentation};
use crate::hilbert::{classical_multiplicity, dimension, ee_vector, ideal_dimension};
use crate::numerical::{json_int, MultiplicityVector};
use crate::poly::Polynomial;
use crate::ring::RingRef;

/// Which computation produced (or confirmed) a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    /// Multiplicities of `Ext^{n-i}(M, S)`.
    ExtRoute,
    /// Standard pairs of a monomial ideal.
    MonomialOracle,
    /// `gmult_i(I, M_{<=i})` with `M_{<=i} = J_i / J`.
    Remark,
    /// Local lengths times `ee_i(GG(S/p))`, summed over primes of dimension `i`.
    Definition,
    /// `ee_i(GG(Ext^{n-i}(M, S)))`.
    LocalDuality,
    /// Interpolated Hilbert-Samuel functions.
    Samuel,
    /// Lowest forms and the multiplicity of the tangent cone.
    TangentCone,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::ExtRoute => "ext-route",
            Provenance::MonomialOracle => "monomial-oracle",
            Provenance::Remark => "remark",
            Provenance::Definition => "definition",
            Provenance::LocalDuality => "local-duality",
            Provenance::Samuel => "samuel",
            Provenance::TangentCone => "tangent-cone",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdegValue {
    Integer(i128),
    Vector(MultiplicityVector),
}

impl AdegValue {
    pub fn to_json(&self) -> Value {
        match self {
            AdegValue::Integer(v) => json_int(*v),
            AdegValue::Vector(v) => {
                Value::Array(v.components.iter().map(|c| json_int(*c)).collect())
            }
        }
    }

    fn is_negative(&self) -> bool {
        match self {
            AdegValue::Integer(v) => *v < 0,
            AdegValue::Vector(v) => v.components.iter().any(|c| *c < 0),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            AdegValue::Integer(v) => *v == 0,
            AdegValue::Vector(v) => v.is_zero(),
        }
    }
}

impl fmt::Display for AdegValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdegValue::Integer(v) => write!(f, "{v}"),
            AdegValue::Vector(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdegEntry {
    pub level: usize,
    pub value: AdegValue,
    pub provenance: Provenance,
    /// Pipelines that recomputed the value and agreed.
    pub checks: Vec<Provenance>,
}

/// Table `i -> adeg_i`, highest level first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdegReport {
    pub entries: Vec<AdegEntry>,
}

impl AdegReport {
    pub fn get(&self, level: usize) -> Option<&AdegValue> {
        self.entries
            .iter()
            .find(|e| e.level == level)
            .map(|e| &e.value)
    }

    /// `{"1": 1, "0": 1}`.
    pub fn values_json(&self) -> Value {
        let mut m = Map::new();
        for e in &self.entries {
            m.insert(e.level.to_string(), e.value.to_json());
        }
        Value::Object(m)
    }

    pub fn provenance_json(&self) -> Value {
        let mut m = Map::new();
        for e in &self.entries {
            let mut tags = vec![Value::from(e.provenance.as_str())];
            tags.extend(e.checks.iter().map(|c| Value::from(c.as_str())));
            m.insert(e.level.to_string(), Value::Array(tags));
        }
        Value::Object(m)
    }

    fn validate(&self, dim: i64) -> Result<()> {
        for e in &self.entries {
            if e.value.is_negative() {
                return Err(Error::InternalConsistency(format!(
                    "negative arithmetic degree at level {}",
                    e.level
                )));
            }
            if e.level as i64 == dim && e.value.is_zero() {
                return Err(Error::InternalConsistency(format!(
                    "arithmetic degree vanishes at the top level {dim}"
                )));
            }
        }
        Ok(())
    }
}

fn disagree(what: &str, level: usize, a: impl fmt::Display, b: impl fmt::Display) -> Error {
    Error::InternalConsistency(format!("{what} at level {level}: {a} vs {b}"))
}

/// Regrading of a (bi)graded module by total degree.
fn flattened(m: &ModulePresentation) -> ModulePresentation {
    if m.ring().is_bigraded() {
        m.regraded(&m.ring().standard_regrading(), |d| [d[0] + d[1], 0])
    } else {
        m.clone()
    }
}

/// Monomial generators of a cyclic module `S/J` with its generator in degree 0.
fn cyclic_monomial(m: &ModulePresentation) -> Option<IdealHandle> {
    if m.rank() != 1 || m.shifts()[0] != [0, 0] {
        return None;
    }
    let gens: Vec<Polynomial> = m.relations().iter().map(|c| c[0].clone()).collect();
    let ideal = IdealHandle::new(m.ring(), gens).ok()?;
    monomial_gens(&ideal).ok().map(|_| ideal)
}

/// `adeg_i(M) = e_i(Ext^{n-i}_S(M, S))` for a homogeneous module over a
/// standard graded ring.
pub fn adeg_graded(m: &ModulePresentation, i: usize) -> Result<i128> {
    if m.ring().is_bigraded() || !m.ring().is_standard() {
        return Err(Error::Unsupported(
            "graded arithmetic degree needs a standard grading".into(),
        ));
    }
    if !m.is_homogeneous() {
        return Err(Error::NotHomogeneous("module presentation".into()));
    }
    let n = m.ring().nvars();
    if i > n {
        return Ok(0);
    }
    let ext = ext_presentation(m, n - i)?;
    if ext.rank() == 0 {
        return Ok(0);
    }
    classical_multiplicity(&ext, i)
}

/// `adeg_i(M)` for `i = dim M, ..., 0`, with the monomial oracle as a check
/// whenever `M = S/J` for a monomial `J`.
pub fn adeg_report(m: &ModulePresentation) -> Result<AdegReport> {
    let m = flattened(m);
    let dim = dimension(&m)?;
    let oracle = match cyclic_monomial(&m) {
        Some(j) => Some(adeg_monomial(&j)?),
        None => None,
    };
    let mut entries = Vec::new();
    for i in (0..=dim.max(-1)).rev() {
        let i = i as usize;
        let v = adeg_graded(&m, i)?;
        let mut checks = Vec::new();
        if let Some(o) = &oracle {
            if o[i] != v {
                return Err(disagree(
                    "Ext route and standard pairs disagree",
                    i,
                    v,
                    o[i],
                ));
            }
            checks.push(Provenance::MonomialOracle);
        }
        entries.push(AdegEntry {
            level: i,
            value: AdegValue::Integer(v),
            provenance: Provenance::ExtRoute,
            checks,
        });
    }
    let report = AdegReport { entries };
    report.validate(dim)?;
    Ok(report)
}

/// `biadeg_i(M) = ee_i(Ext^{N-i}(M, S))` over a bigraded ring with `N`
/// variables.
pub fn biadeg(m: &ModulePresentation, i: usize) -> Result<MultiplicityVector> {
    if !m.ring().is_bigraded() {
        return Err(Error::NotBigraded);
    }
    if !m.is_homogeneous() {
        return Err(Error::NotHomogeneous("bigraded presentation".into()));
    }
    let n = m.ring().nvars();
    if i > n {
        return Ok(MultiplicityVector::zero(i));
    }
    let ext = ext_presentation(m, n - i)?;
    if ext.rank() == 0 {
        return Ok(MultiplicityVector::zero(i));
    }
    ee_vector(&ext, i)
}

pub fn biadeg_report(m: &ModulePresentation) -> Result<AdegReport> {
    let dim = dimension(m)?;
    let mut entries = Vec::new();
    for i in (0..=dim.max(-1)).rev() {
        entries.push(AdegEntry {
            level: i as usize,
            value: AdegValue::Vector(biadeg(m, i as usize)?),
            provenance: Provenance::ExtRoute,
            checks: Vec::new(),
        });
    }
    Ok(AdegReport { entries })
}

/// `gmult_i(I, S/J) = ee_i(GG(S/J))`.
pub fn gmult(j: &IdealHandle, i: &[Polynomial], level: usize) -> Result<MultiplicityVector> {
    ee_vector(&gg_presentation(j, i)?.module, level)
}

pub fn gmult_report(j: &IdealHandle, i: &[Polynomial]) -> Result<AdegReport> {
    let gg = gg_presentation(j, i)?;
    let dim = dimension(&gg.module)?;
    let mut entries = Vec::new();
    for q in (0..=dim.max(-1)).rev() {
        entries.push(AdegEntry {
            level: q as usize,
            value: AdegValue::Vector(ee_vector(&gg.module, q as usize)?),
            provenance: Provenance::Definition,
            checks: Vec::new(),
        });
    }
    Ok(AdegReport { entries })
}

/// Associated primes of `S/J` with their local lengths, supplied from outside
/// (a corpus entry) when `J` is not monomial.
#[derive(Clone, Debug)]
pub struct ComponentData {
    pub primes: Vec<(IdealHandle, i128)>,
}

/// `(prime, length, dimension)` from the monomial oracle or supplied data.
fn primes_with_lengths(
    j: &IdealHandle,
    supplied: Option<&ComponentData>,
) -> Result<Option<Vec<(IdealHandle, i128, usize)>>> {
    if let Some(c) = supplied {
        let mut out = Vec::with_capacity(c.primes.len());
        for (p, l) in &c.primes {
            let d = ideal_dimension(p)?;
            if d < 0 {
                return Err(Error::InvalidArgument(
                    "a supplied prime is the unit ideal".into(),
                ));
            }
            out.push((p.clone(), *l, d as usize));
        }
        return Ok(Some(out));
    }
    if monomial_gens(j).is_err() {
        return Ok(None);
    }
    let ring = j.ring();
    let n = ring.nvars();
    let out = local_lengths(j)?
        .into_iter()
        .map(|(vars, l)| (IdealHandle::variables(ring, &vars), l, n - vars.len()))
        .collect();
    Ok(Some(out))
}

/// A `ladeg_i` value with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladeg {
    pub level: usize,
    pub value: MultiplicityVector,
    pub provenance: Provenance,
    pub checks: Vec<Provenance>,
}

/// `ee_i(GG(Ext^{n-i}(S/J, S)))`.
fn ladeg_local_duality(
    j: &IdealHandle,
    i: &[Polynomial],
    level: usize,
) -> Result<MultiplicityVector> {
    let n = j.ring().nvars();
    if level > n {
        return Ok(MultiplicityVector::zero(level));
    }
    let ext = ext_presentation(&ModulePresentation::cyclic(j), n - level)?;
    if ext.rank() == 0 || ext.is_zero_module()? {
        return Ok(MultiplicityVector::zero(level));
    }
    ee_vector(&gg_of_module(&ext, i)?.module, level)
}

fn ladeg_definition(
    i: &[Polynomial],
    level: usize,
    primes: &[(IdealHandle, i128, usize)],
) -> Result<MultiplicityVector> {
    let mut acc = MultiplicityVector::zero(level);
    for (p, l, d) in primes {
        if *d == level {
            acc = acc.add(&gmult(p, i, level)?.scaled(*l));
        }
    }
    Ok(acc)
}

/// `ladeg_i(I, S/J)`. The primary route is `gmult_i(I, J_i/J)` for monomial
/// `J`, the sum over supplied components otherwise, and local duality when
/// neither is available. Every other route that applies is computed too and
/// must agree.
pub fn ladeg(
    j: &IdealHandle,
    i: &[Polynomial],
    level: usize,
    supplied: Option<&ComponentData>,
) -> Result<Ladeg> {
    let monomial = monomial_gens(j).is_ok();
    let primes = primes_with_lengths(j, supplied)?;
    let mut values: Vec<(Provenance, MultiplicityVector)> = Vec::new();
    if monomial {
        let ji = m_leq_monomial(j, level)?;
        let v = if j.contains_ideal(&ji)? {
            MultiplicityVector::zero(level)
        } else {
            ee_vector(&gg_module(j, i, ji.gens())?.module, level)?
        };
        values.push((Provenance::Remark, v));
    }
    if let Some(p) = &primes {
        values.push((Provenance::Definition, ladeg_definition(i, level, p)?));
    }
    match ladeg_local_duality(j, i, level) {
        Ok(v) => values.push((Provenance::LocalDuality, v)),
        Err(e @ Error::ResourceLimit { .. }) if !values.is_empty() => {
            // The cross-check is optional; the primary value stands.
            let _ = e;
        }
        Err(e) => return Err(e),
    }
    let (provenance, value) = values[0].clone();
    for (p, v) in &values[1..] {
        if *v != value {
            return Err(disagree(
                &format!("ladeg routes {provenance} and {p} disagree"),
                level,
                &value,
                v,
            ));
        }
    }
    Ok(Ladeg {
        level,
        value,
        provenance,
        checks: values[1..].iter().map(|(p, _)| *p).collect(),
    })
}

pub fn ladeg_report(
    j: &IdealHandle,
    i: &[Polynomial],
    supplied: Option<&ComponentData>,
) -> Result<AdegReport> {
    let dim = local_dimension(j)?;
    let mut entries = Vec::new();
    for q in (0..=dim.max(-1)).rev() {
        let l = ladeg(j, i, q as usize, supplied)?;
        entries.push(AdegEntry {
            level: l.level,
            value: AdegValue::Vector(l.value),
            provenance: l.provenance,
            checks: l.checks,
        });
    }
    Ok(AdegReport { entries })
}

/// Dimension of `S/J` localized at the origin: the dimension of its tangent
/// cone.
pub fn local_dimension(j: &IdealHandle) -> Result<i64> {
    if j.is_homogeneous()? {
        return ideal_dimension(j);
    }
    ideal_dimension(&tangent_cone(j)?)
}

/// `gr_m` of a finitely presented module: lowest forms of its relations,
/// every generator in degree 0.
fn module_tangent_cone(m: &ModulePresentation) -> Result<ModulePresentation> {
    let ring = m.ring();
    let all: Vec<usize> = (0..ring.nvars()).collect();
    let low = lowest_forms(ring, &all, m.rank(), m.relations())?;
    ModulePresentation::new(ring, m.rank(), vec![[0, 0]; m.rank()], low)
}

/// Arithmetic degree of `M` localized at the origin, with respect to the
/// maximal ideal: `e_i` of `gr_m(Ext^{n-i}(M, S))`. For homogeneous input
/// this is the graded `adeg_i`.
pub fn adeg_local(m: &ModulePresentation, i: usize) -> Result<i128> {
    let m = flattened(m);
    if m.is_homogeneous() {
        return adeg_graded(&m, i);
    }
    let n = m.ring().nvars();
    if i > n {
        return Ok(0);
    }
    let ext = ext_presentation(&m, n - i)?;
    if ext.rank() == 0 {
        return Ok(0);
    }
    classical_multiplicity(&module_tangent_cone(&ext)?, i)
}

/// One inequality (or equality) at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub level: usize,
    pub lhs: i128,
    pub rhs: i128,
    pub holds: bool,
}

impl Comparison {
    fn at_least(level: usize, lhs: i128, rhs: i128) -> Self {
        Self {
            level,
            lhs,
            rhs,
            holds: lhs >= rhs,
        }
    }

    fn equal(level: usize, lhs: i128, rhs: i128) -> Self {
        Self {
            level,
            lhs,
            rhs,
            holds: lhs == rhs,
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "i": self.level,
            "lhs": json_int(self.lhs),
            "rhs": json_int(self.rhs),
            "holds": self.holds,
        })
    }
}

/// Embedded primes of `A` and `gr_I(A)` by dimension, for equidimensional `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedCheck {
    /// `None` when equidimensionality is unknown; the check is then skipped.
    pub equidimensional: Option<bool>,
    pub embedded_a: Vec<usize>,
    pub embedded_gr: Vec<usize>,
    pub holds: bool,
}

/// `(gmult_d)_0 = e(I; A)` and the other components vanish, for `m`-primary `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CladCheck {
    pub samuel: i128,
    pub gmult: MultiplicityVector,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRecord {
    pub dim: usize,
    /// `adeg_r(gr_M(gr_I A)) >= sum_k (ladeg_r)_k`.
    pub theorem: Vec<Comparison>,
    /// `adeg_i(gr_I A) >= adeg_i(A)`.
    pub corollary1: Vec<Comparison>,
    pub corollary2: EmbeddedCheck,
    /// `e_i(gr_I A) = sum_k (gmult_i)_k`.
    pub prop_sum: Vec<Comparison>,
    pub prop_clad: Option<CladCheck>,
    /// `(dim A, dim gr_I A)`.
    pub dimension_transfer: (i64, i64),
    pub ladeg: Vec<Ladeg>,
    pub gmult: Vec<MultiplicityVector>,
    pub pass: bool,
}

impl VerificationRecord {
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for c in self.theorem.iter().filter(|c| !c.holds) {
            out.push(format!("theorem at r = {}: {} < {}", c.level, c.lhs, c.rhs));
        }
        for c in self.corollary1.iter().filter(|c| !c.holds) {
            out.push(format!(
                "corollary 1 at i = {}: {} < {}",
                c.level, c.lhs, c.rhs
            ));
        }
        if !self.corollary2.holds {
            out.push(format!(
                "embedded primes of A in dimensions {:?} but of gr only in {:?}",
                self.corollary2.embedded_a, self.corollary2.embedded_gr
            ));
        }
        for c in self.prop_sum.iter().filter(|c| !c.holds) {
            out.push(format!(
                "sum identity at i = {}: {} != {}",
                c.level, c.lhs, c.rhs
            ));
        }
        if let Some(c) = self.prop_clad.as_ref().filter(|c| !c.holds) {
            out.push(format!(
                "m-primary degeneration: e = {} but gmult = {}",
                c.samuel, c.gmult
            ));
        }
        let (a, b) = self.dimension_transfer;
        if a != b {
            out.push(format!("dim A = {a} but dim gr_I A = {b}"));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let list = |v: &[Comparison]| Value::Array(v.iter().map(Comparison::to_json).collect());
        let mut m = Map::new();
        m.insert("dim".into(), json!(self.dim));
        m.insert("theorem".into(), list(&self.theorem));
        m.insert("corollary1".into(), list(&self.corollary1));
        m.insert(
            "corollary2".into(),
            json!({
                "equidimensional": self.corollary2.equidimensional,
                "embedded_a": self.corollary2.embedded_a,
                "embedded_gr": self.corollary2.embedded_gr,
                "holds": self.corollary2.holds,
            }),
        );
        m.insert("prop_sum".into(), list(&self.prop_sum));
        m.insert(
            "prop_clad".into(),
            match &self.prop_clad {
                None => Value::Null,
                Some(c) => json!({
                    "samuel": json_int(c.samuel),
                    "gmult": AdegValue::Vector(c.gmult.clone()).to_json(),
                    "holds": c.holds,
                }),
            },
        );
        m.insert(
            "dimension_transfer".into(),
            json!([self.dimension_transfer.0, self.dimension_transfer.1]),
        );
        let mut ladeg = Map::new();
        for l in self.ladeg.iter().rev() {
            ladeg.insert(
                l.level.to_string(),
                json!({
                    "value": AdegValue::Vector(l.value.clone()).to_json(),
                    "provenance": l.provenance.as_str(),
                    "checks": l.checks.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
                }),
            );
        }
        m.insert("ladeg".into(), Value::Object(ladeg));
        let mut gm = Map::new();
        for (q, v) in self.gmult.iter().enumerate().rev() {
            gm.insert(q.to_string(), AdegValue::Vector(v.clone()).to_json());
        }
        m.insert("gmult".into(), Value::Object(gm));
        m.insert("pass".into(), json!(self.pass));
        Value::Object(m)
    }
}

/// Options of a verification run beyond `(J, I)`.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub components: Option<ComponentData>,
    /// Asserted equidimensionality of `A`, for inputs without a decomposition.
    pub equidimensional: Option<bool>,
}

fn is_m_primary(j: &IdealHandle, i: &[Polynomial]) -> Result<bool> {
    let sum = j.sum(&IdealHandle::new(j.ring(), i.to_vec())?)?;
    Ok(local_dimension(&sum)? == 0)
}

/// Total-degree regrading of the defining ideal of `gr_I(A)`.
fn gr_standard(graded: &crate::graded::AssocGraded) -> Result<IdealHandle> {
    let flat: RingRef = graded.ideal.ring().standard_regrading();
    IdealHandle::new(
        &flat,
        graded.ideal.gens().iter().map(|g| g.embed(&flat)).collect(),
    )
}

/// Runs every check on `(J, I)`. A failed check leaves `pass = false`; use
/// [`verify_strict`] to turn that into an error.
pub fn verify(
    j: &IdealHandle,
    i: &[Polynomial],
    opts: &VerifyOptions,
) -> Result<VerificationRecord> {
    let dim_a = local_dimension(j)?;
    if dim_a < 0 {
        return Err(Error::InvalidArgument(
            "A = S/J is zero at the origin".into(),
        ));
    }
    let d = dim_a as usize;
    let gg: BigradedPresentation = gg_presentation(j, i)?;
    let total = gg.total();
    let graded = assoc_graded(j, i)?;
    let gr = gr_standard(&graded)?;
    let gr_cone = tangent_cone(&gr)?;
    let dim_gr = ideal_dimension(&gr_cone)?;

    // Theorem: left side through Ext on GG, monomial oracle when GG is monomial.
    let lhs = adeg_report(&total)?;
    let mut theorem = Vec::new();
    let mut ladegs = Vec::new();
    for r in 0..=d {
        let l = ladeg(j, i, r, opts.components.as_ref())?;
        let left = match lhs.get(r) {
            Some(AdegValue::Integer(v)) => *v,
            _ => 0,
        };
        theorem.push(Comparison::at_least(r, left, l.value.sum()));
        ladegs.push(l);
    }

    // Corollary 1 at the maximal homogeneous ideal of gr_I(A) and at m.
    let gr_mod = ModulePresentation::cyclic(&gr);
    let a_mod = ModulePresentation::cyclic(j);
    let oracle_a = if monomial_gens(j).is_ok() {
        Some(adeg_monomial(j)?)
    } else {
        None
    };
    let mut corollary1 = Vec::new();
    let mut adeg_a = Vec::new();
    let mut adeg_gr = Vec::new();
    for q in 0..=d {
        let left = adeg_local(&gr_mod, q)?;
        let right = adeg_local(&a_mod, q)?;
        if let Some(o) = &oracle_a {
            if o[q] != right {
                return Err(disagree(
                    "local adeg of A and standard pairs disagree",
                    q,
                    right,
                    o[q],
                ));
            }
        }
        // m-adic reading of the ladeg sum.
        let m_gens = IdealHandle::maximal(j.ring()).gens().to_vec();
        let via_ladeg = ladeg(j, &m_gens, q, opts.components.as_ref())?.value.sum();
        if via_ladeg != right {
            return Err(disagree(
                "local adeg of A and the m-adic ladeg disagree",
                q,
                right,
                via_ladeg,
            ));
        }
        corollary1.push(Comparison::at_least(q, left, right));
        adeg_a.push(right);
        adeg_gr.push(left);
    }

    // Corollary 2.
    let equidimensional = match (&opts.equidimensional, monomial_gens(j).is_ok()) {
        (Some(e), _) => Some(*e),
        (None, true) => Some(crate::combinatorics::decompose(j)?.is_equidimensional()),
        (None, false) => opts.components.as_ref().map(|c| {
            // Minimal primes of the supplied data: those containing no other.
            let dims: Vec<(usize, &IdealHandle)> = c
                .primes
                .iter()
                .map(|(p, _)| (ideal_dimension(p).unwrap_or(0) as usize, p))
                .collect();
            dims.iter().all(|(dp, p)| {
                *dp == d
                    || dims
                        .iter()
                        .any(|(dq, q)| dq > dp && p.contains_ideal(q).unwrap_or(false))
            })
        }),
    };
    let embedded_a: Vec<usize> = (0..d).filter(|&q| adeg_a[q] > 0).collect();
    let embedded_gr: Vec<usize> = (0..d).filter(|&q| adeg_gr[q] > 0).collect();
    let holds2 = match equidimensional {
        Some(true) => embedded_a.iter().all(|q| embedded_gr.contains(q)),
        _ => true,
    };
    let corollary2 = EmbeddedCheck {
        equidimensional,
        embedded_a,
        embedded_gr,
        holds: holds2,
    };

    // Sum identity: e_i(gr_I A) from the tangent cone of gr_I A at the
    // homogeneous maximal ideal, against the GG vector.
    let cone_mod = ModulePresentation::cyclic(&gr_cone);
    let mut prop_sum = Vec::new();
    let mut gmults = Vec::new();
    for q in 0..=d {
        let g = ee_vector(&gg.module, q)?;
        prop_sum.push(Comparison::equal(
            q,
            classical_multiplicity(&cone_mod, q)?,
            g.sum(),
        ));
        gmults.push(g);
    }

    let prop_clad = if is_m_primary(j, i)? {
        let (_, e) = samuel_multiplicity(j, i)?;
        let g = gmults[d].clone();
        let holds = g.components[0] == e && g.components[1..].iter().all(|c| *c == 0);
        Some(CladCheck {
            samuel: e,
            gmult: g,
            holds,
        })
    } else {
        None
    };

    let mut rec = VerificationRecord {
        dim: d,
        theorem,
        corollary1,
        corollary2,
        prop_sum,
        prop_clad,
        dimension_transfer: (dim_a, dim_gr),
        ladeg: ladegs,
        gmult: gmults,
        pass: true,
    };
    rec.pass = rec.failures().is_empty();
    Ok(rec)
}

/// [`verify`], with any failed check reported as a theorem violation.
pub fn verify_strict(
    j: &IdealHandle,
    i: &[Polynomial],
    opts: &VerifyOptions,
) -> Result<VerificationRecord> {
    let rec = verify(j, i, opts)?;
    if !rec.pass {
        return Err(Error::TheoremViolation(rec.failures().join("; ")));
    }
    Ok(rec)
}

/// Samuel-based local arithmetic degree from supplied components:
/// `sum_p l_p e(S/p)` over primes of dimension `i`.
pub fn adeg_from_components(c: &ComponentData, level: usize) -> Result<i128> {
    let mut acc = 0;
    for (p, l) in &c.primes {
        if ideal_dimension(p)? == level as i64 {
            let m = IdealHandle::maximal(p.ring()).gens().to_vec();
            acc += l * samuel_multiplicity(p, &m)?.1;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests;
