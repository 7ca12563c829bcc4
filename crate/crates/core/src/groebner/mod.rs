//! Gröbner bases, ideal arithmetic, syzygies, resolutions and Ext.

mod engine;
mod ext;
mod module;
mod resolution;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::monomial::{ModuleOrder, Monomial, TermOrder};
use crate::poly::Polynomial;
use crate::ring::{RingRef, VarDegree};

pub use engine::Caps;
pub use ext::ext_presentation;
pub use module::{module_groebner_basis, ModuleBasis, ModulePresentation};
pub use resolution::{free_resolution, syzygies, ChainComplex};

pub(crate) use engine::{groebner, reduce, Vector};
pub(crate) use module::kernel;

/// A reduced Gröbner basis of an ideal.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: RingRef,
    order: TermOrder,
    elements: Vec<Polynomial>,
    vectors: Vec<Vector>,
}

impl GroebnerBasis {
    fn from_vectors(ring: &RingRef, order: TermOrder, vectors: Vec<Vector>) -> Self {
        let elements = vectors
            .iter()
            .map(|v| v.to_columns(ring, 1).pop().unwrap())
            .collect();
        Self {
            ring: ring.clone(),
            order,
            elements,
            vectors,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Basis elements, monic, ascending by leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.vectors.iter().map(|v| v.lead().mono).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.vectors.iter().any(|v| v.lead().mono.is_one())
    }

    /// Remainder of `f` on division by the basis; no term of it is divisible
    /// by a leading monomial.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().same_as(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let ord = ModuleOrder::pot(self.order.clone());
        let v = Vector::from_columns(std::slice::from_ref(f), &ord);
        let refs: Vec<&Vector> = self.vectors.iter().collect();
        Ok(reduce(&v, &refs, &ord)
            .to_columns(&self.ring, 1)
            .pop()
            .unwrap())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis(
    ring: &RingRef,
    gens: &[Polynomial],
    order: &TermOrder,
) -> Result<GroebnerBasis> {
    if gens.iter().any(|g| !g.ring().same_as(ring)) {
        return Err(Error::RingMismatch);
    }
    let ord = ModuleOrder::pot(order.clone());
    let vecs: Vec<Vector> = gens
        .iter()
        .map(|g| Vector::from_columns(std::slice::from_ref(g), &ord))
        .collect();
    let basis = groebner(vecs, &ord, true)?;
    Ok(GroebnerBasis::from_vectors(ring, order.clone(), basis))
}

/// Remainder of `f` modulo a Gröbner basis.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    basis.normal_form(f)
}

/// An ideal given by generators, with reduced Gröbner bases cached per order.
pub struct IdealHandle {
    ring: RingRef,
    gens: Vec<Polynomial>,
    cache: RwLock<HashMap<TermOrder, Arc<GroebnerBasis>>>,
}

impl Clone for IdealHandle {
    fn clone(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: RwLock::new(self.cache.read().clone()),
        }
    }
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.gens)
    }
}

impl fmt::Display for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl IdealHandle {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| !g.ring().same_as(ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Self {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn zero(ring: &RingRef) -> Self {
        Self::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &RingRef) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    /// The ideal generated by the given variables.
    pub fn variables(ring: &RingRef, vars: &[usize]) -> Self {
        Self::new(
            ring,
            vars.iter().map(|&v| Polynomial::var(ring, v)).collect(),
        )
        .unwrap()
    }

    /// The homogeneous maximal ideal.
    pub fn maximal(ring: &RingRef) -> Self {
        let all: Vec<usize> = (0..ring.nvars()).collect();
        Self::variables(ring, &all)
    }

    pub fn from_monomials(ring: &RingRef, monos: &[Monomial]) -> Self {
        let one = ring.field().one();
        Self::new(
            ring,
            monos
                .iter()
                .map(|m| Polynomial::monomial(ring, *m, one.clone()))
                .collect(),
        )
        .unwrap()
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn groebner_basis(&self, order: &TermOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.read().get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(groebner_basis(&self.ring, &self.gens, order)?);
        self.cache.write().insert(order.clone(), gb.clone());
        Ok(gb)
    }

    fn degrevlex(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner_basis(&TermOrder::Degrevlex)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.degrevlex()?.normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.degrevlex()?.contains(f)
    }

    pub fn contains_ideal(&self, other: &IdealHandle) -> Result<bool> {
        let gb = self.degrevlex()?;
        for g in &other.gens {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &IdealHandle) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.degrevlex()?.is_unit())
    }

    /// Reduced degrevlex basis, which is also a generating set.
    pub fn reduced(&self) -> Result<IdealHandle> {
        let gb = self.degrevlex()?;
        let out = IdealHandle::new(&self.ring, gb.elements().to_vec())?;
        out.cache.write().insert(TermOrder::Degrevlex, gb);
        Ok(out)
    }

    pub fn is_homogeneous(&self) -> Result<bool> {
        if self.gens.iter().all(|g| g.is_homogeneous()) {
            return Ok(true);
        }
        Ok(self
            .degrevlex()?
            .elements()
            .iter()
            .all(|g| g.is_homogeneous()))
    }

    /// Some generating set consists of monomials.
    pub fn is_monomial(&self) -> Result<bool> {
        if self.gens.iter().all(|g| g.is_monomial()) {
            return Ok(true);
        }
        Ok(self.degrevlex()?.elements().iter().all(|g| g.is_monomial()))
    }

    /// Minimal monomial generators, if the ideal is monomial.
    pub fn monomial_generators(&self) -> Result<Option<Vec<Monomial>>> {
        if !self.is_monomial()? {
            return Ok(None);
        }
        Ok(Some(self.degrevlex()?.leading_monomials()))
    }

    pub fn sum(&self, other: &IdealHandle) -> Result<IdealHandle> {
        if !self.ring.same_as(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        IdealHandle::new(&self.ring, gens)
    }

    pub fn product(&self, other: &IdealHandle) -> Result<IdealHandle> {
        if !self.ring.same_as(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        IdealHandle::new(&self.ring, gens)?.reduced()
    }

    pub fn power(&self, k: u32) -> Result<IdealHandle> {
        let mut acc = IdealHandle::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(I : f)` through `I ∩ (f) = f (I : f)`.
    pub fn quotient(&self, f: &Polynomial) -> Result<IdealHandle> {
        if !f.ring().same_as(&self.ring) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::InvalidDivisor(
                "division by the zero polynomial".into(),
            ));
        }
        let principal = IdealHandle::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gens
            .iter()
            .map(|g| exact_divide(g, f))
            .collect::<Result<Vec<_>>>()?;
        IdealHandle::new(&self.ring, gens)?.reduced()
    }

    /// `(I : f^∞)` as `(I + (1 - z f)) ∩ k[x]`.
    pub fn saturate(&self, f: &Polynomial) -> Result<IdealHandle> {
        if !f.ring().same_as(&self.ring) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::InvalidDivisor(
                "saturation by the zero polynomial".into(),
            ));
        }
        let ext = aux_ring(&self.ring, "z")?;
        let z = Polynomial::var(&ext, self.ring.nvars());
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.embed(&ext)).collect();
        gens.push(&Polynomial::one(&ext) - &(&z * &f.embed(&ext)));
        let big = IdealHandle::new(&ext, gens)?;
        let elim = big.eliminate(&[self.ring.nvars()])?;
        let back = elim.gens.iter().map(|g| g.embed(&self.ring)).collect();
        IdealHandle::new(&self.ring, back)?.reduced()
    }

    /// Quotient or saturation by a single element.
    pub fn quotient_or_saturation(&self, f: &Polynomial, saturate: bool) -> Result<IdealHandle> {
        if saturate {
            self.saturate(f)
        } else {
            self.quotient(f)
        }
    }

    /// `(I : J)` as the intersection of the quotients by generators of `J`.
    pub fn quotient_ideal(&self, j: &IdealHandle) -> Result<IdealHandle> {
        let mut acc = IdealHandle::unit(&self.ring);
        for g in &j.gens {
            acc = acc.intersect(&self.quotient(g)?)?;
        }
        Ok(acc)
    }

    /// `(I : J^∞)` as the intersection of the saturations by generators of `J`.
    pub fn saturate_ideal(&self, j: &IdealHandle) -> Result<IdealHandle> {
        let mut acc = IdealHandle::unit(&self.ring);
        for g in &j.gens {
            acc = acc.intersect(&self.saturate(g)?)?;
        }
        Ok(acc)
    }

    /// `I ∩ k[remaining variables]`, as an ideal of the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<IdealHandle> {
        if vars.iter().any(|&v| v >= self.ring.nvars()) {
            return Err(Error::InvalidArgument("variable index out of range".into()));
        }
        if vars.is_empty() {
            return Ok(self.clone());
        }
        let gb = self.groebner_basis(&TermOrder::elimination(vars.to_vec()))?;
        let kept = gb
            .elements()
            .iter()
            .filter(|g| g.support_vars().iter().all(|v| !vars.contains(v)))
            .cloned()
            .collect();
        IdealHandle::new(&self.ring, kept)
    }

    /// `I ∩ J` via `(t I + (1 - t) J) ∩ k[x]`.
    pub fn intersect(&self, other: &IdealHandle) -> Result<IdealHandle> {
        if !self.ring.same_as(&other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.is_unit()? {
            return Ok(other.clone());
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        let ext = aux_ring(&self.ring, "t")?;
        let t = Polynomial::var(&ext, self.ring.nvars());
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| &t * &g.embed(&ext)).collect();
        gens.extend(other.gens.iter().map(|g| &one_minus_t * &g.embed(&ext)));
        let big = IdealHandle::new(&ext, gens)?;
        let elim = big.eliminate(&[self.ring.nvars()])?;
        let back = elim.gens.iter().map(|g| g.embed(&self.ring)).collect();
        IdealHandle::new(&self.ring, back)?.reduced()
    }

    /// Image under a ring map given by the images of the variables.
    pub fn map(&self, target: &RingRef, images: &[Polynomial]) -> Result<IdealHandle> {
        if images.len() != self.ring.nvars() {
            return Err(Error::InvalidArgument("one image per variable".into()));
        }
        IdealHandle::new(
            target,
            self.gens
                .iter()
                .map(|g| g.substitute(target, images))
                .collect(),
        )
    }
}

/// The ring with one extra variable appended; gradings are dropped since
/// only the term order matters for eliminations.
fn aux_ring(ring: &RingRef, name: &str) -> Result<RingRef> {
    ring.standard_regrading()
        .extended(&[(name, VarDegree::Weight(1))])
}

/// `g / f` when `f` divides `g`.
pub fn exact_divide(g: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    let ord = ModuleOrder::pot(TermOrder::Degrevlex);
    let fv = Vector::from_columns(std::slice::from_ref(f), &ord);
    let gv = Vector::from_columns(std::slice::from_ref(g), &ord);
    let (rem, steps) = engine::reduce_tracking(&gv, std::slice::from_ref(&fv), &ord);
    if !rem.is_zero() {
        return Err(Error::InternalConsistency(
            "inexact polynomial division".into(),
        ));
    }
    let mut q = Polynomial::zero(g.ring());
    for s in steps {
        q.add_term(s.mono, &s.coeff);
    }
    Ok(q)
}

/// Ideal quotient or saturation of `i` by `f`.
pub fn ideal_quotient_or_saturation(
    i: &IdealHandle,
    f: &Polynomial,
    saturate: bool,
) -> Result<IdealHandle> {
    i.quotient_or_saturation(f, saturate)
}

pub fn eliminate(i: &IdealHandle, vars: &[usize]) -> Result<IdealHandle> {
    i.eliminate(vars)
}

pub fn intersect(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    i.intersect(j)
}

#[cfg(test)]
mod tests;
