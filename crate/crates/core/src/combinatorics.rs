//! Monomial ideals by pure combinatorics: standard pairs, irreducible and
//! primary decompositions, and the submodules `M_{<=i}` of `S / I`.
//!
//! Nothing here touches a Gröbner basis beyond reading off minimal generators,
//! which is what makes these routines usable as ground truth for the Ext
//! pipeline.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::hilbert::minimal_monomials;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::format_monomial;
use crate::ring::RingRef;

/// Box size above which standard-pair enumeration gives up.
const PAIR_BUDGET: u64 = 20_000_000;

/// `u * k[Z]` with `u` supported off `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardPair {
    pub u: Monomial,
    /// Sorted variable indices.
    pub z: Vec<usize>,
}

impl StandardPair {
    /// Renders as `(x*y, {z, w})` with the ring's variable names.
    pub fn display(&self, names: &[String]) -> String {
        let z: Vec<&str> = self.z.iter().map(|&v| names[v].as_str()).collect();
        let u = if self.u.is_one() {
            "1".to_string()
        } else {
            format_monomial(&self.u, names)
        };
        format!("({u}, {{{}}})", z.join(", "))
    }

    /// True when `m` lies in `u * k[Z]`.
    pub fn covers(&self, m: &Monomial) -> bool {
        match self.u.quotient_of(m) {
            Some(q) => q.support().iter().all(|v| self.z.contains(v)),
            None => false,
        }
    }
}

/// Minimal monomial generators, or the wrong-oracle error.
pub fn monomial_gens(i: &IdealHandle) -> Result<Vec<Monomial>> {
    match i.monomial_generators()? {
        Some(g) => Ok(minimal_monomials(&g)),
        None => Err(Error::WrongOracle(
            "the combinatorial routines only accept monomial ideals".into(),
        )),
    }
}

fn mask_vars(z: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|v| z & (1 << v) != 0).collect()
}

/// `u * k[Z]` misses the ideal iff no generator, with its `Z`-part erased,
/// divides `u`.
fn admissible(gens: &[Monomial], u: &Monomial, z: &[usize]) -> bool {
    !gens.iter().any(|g| g.without(z).divides(u))
}

/// Standard pairs of a monomial ideal, sorted by `|Z|` descending, then `u`
/// lexicographically, then `Z`.
///
/// An admissible pair `(u, Z)` is standard iff no pair `(u without x_j,
/// Z + j)` is admissible for `j` off `Z`: any strictly larger pair dominates
/// one of these. That bounds `u_j` below the largest exponent of `x_j` among
/// the generators, so the search box is finite.
pub fn standard_pairs(i: &IdealHandle) -> Result<Vec<StandardPair>> {
    let gens = monomial_gens(i)?;
    standard_pairs_of(&gens, i.ring().nvars())
}

pub fn standard_pairs_of(gens: &[Monomial], n: usize) -> Result<Vec<StandardPair>> {
    let gens = minimal_monomials(gens);
    if gens.iter().any(|g| g.is_one()) {
        return Ok(Vec::new());
    }
    let bound: Vec<u32> = (0..n)
        .map(|v| gens.iter().map(|g| g.exp(v)).max().unwrap_or(0))
        .collect();
    let mut out = Vec::new();
    for zmask in 0u32..1 << n {
        let z = mask_vars(zmask, n);
        let off: Vec<usize> = (0..n).filter(|v| zmask & (1 << v) == 0).collect();
        // A generator living inside k[Z] kills every pair on Z.
        if gens.iter().any(|g| g.without(&z).is_one()) {
            continue;
        }
        if off.iter().any(|&v| bound[v] == 0) {
            continue;
        }
        let size: u64 = off.iter().map(|&v| bound[v] as u64).product();
        if size > PAIR_BUDGET {
            return Err(Error::resource(
                "standard pair search box",
                0,
                size.min(u32::MAX as u64) as u32,
            ));
        }
        let mut digits = vec![0u32; off.len()];
        loop {
            let mut u = Monomial::one();
            for (k, &v) in off.iter().enumerate() {
                u.set_exp(v, digits[k]);
            }
            if admissible(&gens, &u, &z) {
                let maximal = off.iter().all(|&j| {
                    let mut shorter = u;
                    shorter.set_exp(j, 0);
                    let mut wider = z.clone();
                    wider.push(j);
                    !admissible(&gens, &shorter, &wider)
                });
                if maximal {
                    out.push(StandardPair { u, z: z.clone() });
                }
            }
            // Odometer over the box.
            let mut k = 0;
            loop {
                if k == off.len() {
                    break;
                }
                digits[k] += 1;
                if digits[k] < bound[off[k]] {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
            if k == off.len() {
                break;
            }
        }
    }
    out.sort_by(|a, b| {
        Reverse(a.z.len())
            .cmp(&Reverse(b.z.len()))
            .then_with(|| TermOrder::Lex.cmp(&a.u, &b.u))
            .then_with(|| a.z.cmp(&b.z))
    });
    Ok(out)
}

/// `adeg_i(S / I)` for `i = 0..=n`: the number of standard pairs with `|Z| = i`.
pub fn adeg_monomial(i: &IdealHandle) -> Result<Vec<i128>> {
    let n = i.ring().nvars();
    let mut out = vec![0i128; n + 1];
    for p in standard_pairs(i)? {
        out[p.z.len()] += 1;
    }
    Ok(out)
}

/// Local length of `S / I` at each associated prime `(x_j : j not in Z)`, read
/// off the standard pairs: the number of pairs on `Z`.
pub fn local_lengths(i: &IdealHandle) -> Result<BTreeMap<Vec<usize>, i128>> {
    let n = i.ring().nvars();
    let mut out = BTreeMap::new();
    for p in standard_pairs(i)? {
        let prime: Vec<usize> = (0..n).filter(|v| !p.z.contains(v)).collect();
        *out.entry(prime).or_insert(0) += 1;
    }
    Ok(out)
}

/// `(x_v^{b_v})` over the bounded variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreducibleComponent {
    pub bounds: BTreeMap<usize, u32>,
}

impl IrreducibleComponent {
    pub fn generators(&self) -> Vec<Monomial> {
        self.bounds
            .iter()
            .map(|(&v, &b)| Monomial::var(v, b))
            .collect()
    }

    /// Variables of the radical.
    pub fn prime(&self) -> Vec<usize> {
        self.bounds.keys().copied().collect()
    }

    pub fn dimension(&self, n: usize) -> usize {
        n - self.bounds.len()
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &IrreducibleComponent) -> bool {
        other
            .bounds
            .iter()
            .all(|(v, &b)| self.bounds.get(v).is_some_and(|&c| c <= b))
    }
}

/// A primary component with its prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub prime: Vec<usize>,
    pub generators: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub irreducible: Vec<IrreducibleComponent>,
    pub primary: Vec<PrimaryComponent>,
    pub associated: Vec<Vec<usize>>,
    pub embedded: Vec<Vec<usize>>,
}

impl Decomposition {
    pub fn minimal_primes(&self) -> Vec<Vec<usize>> {
        self.associated
            .iter()
            .filter(|p| !self.embedded.contains(p))
            .cloned()
            .collect()
    }

    /// All minimal primes have the same dimension.
    pub fn is_equidimensional(&self) -> bool {
        let mut sizes = self.minimal_primes().into_iter().map(|p| p.len());
        match sizes.next() {
            None => true,
            Some(s) => sizes.all(|t| t == s),
        }
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .bounds
            .iter()
            .map(|(v, b)| format!("x{v}^{b}"))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Splitting recursion: a minimal generator `x_v^a * h` with `h != 1` gives
/// `I = (I + x_v^a) ∩ (I + h)`.
fn split(gens: Vec<Monomial>, out: &mut Vec<IrreducibleComponent>) {
    let gens = minimal_monomials(&gens);
    if gens.iter().any(|g| g.is_one()) {
        return;
    }
    match gens.iter().find(|g| g.support().len() >= 2) {
        None => {
            let bounds = gens
                .iter()
                .map(|g| {
                    let v = g.support()[0];
                    (v, g.exp(v))
                })
                .collect();
            out.push(IrreducibleComponent { bounds });
        }
        Some(g) => {
            let v = g.support()[0];
            let pure = Monomial::var(v, g.exp(v));
            let mut rest = *g;
            rest.set_exp(v, 0);
            let mut a = gens.clone();
            a.push(pure);
            let mut b = gens.clone();
            b.push(rest);
            split(a, out);
            split(b, out);
        }
    }
}

/// Generators of the intersection of two monomial ideals.
pub fn intersect_monomial(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.lcm(y));
        }
    }
    minimal_monomials(&out)
}

/// Intersection of several monomial ideals; `None` means the unit ideal.
fn intersect_all<'a>(parts: impl IntoIterator<Item = &'a [Monomial]>) -> Option<Vec<Monomial>> {
    let mut acc: Option<Vec<Monomial>> = None;
    for p in parts {
        acc = Some(match acc {
            None => minimal_monomials(p),
            Some(a) => intersect_monomial(&a, p),
        });
    }
    acc
}

/// Irredundant irreducible decomposition, its primary grouping, associated and
/// embedded primes. Every result is checked exactly against the input.
pub fn decompose(i: &IdealHandle) -> Result<Decomposition> {
    let gens = monomial_gens(i)?;
    decompose_monomials(&gens)
}

pub fn decompose_monomials(gens: &[Monomial]) -> Result<Decomposition> {
    let gens = minimal_monomials(gens);
    let mut comps = Vec::new();
    split(gens.clone(), &mut comps);
    comps.sort();
    comps.dedup();
    // Drop any component containing another one.
    let irreducible: Vec<IrreducibleComponent> = comps
        .iter()
        .enumerate()
        .filter(|(k, c)| {
            !comps
                .iter()
                .enumerate()
                .any(|(l, d)| l != *k && c.contains(d))
        })
        .map(|(_, c)| c.clone())
        .collect();

    let gen_lists: Vec<Vec<Monomial>> = irreducible.iter().map(|c| c.generators()).collect();
    let back = intersect_all(gen_lists.iter().map(|g| g.as_slice()));
    if !irreducible.is_empty() && back.as_deref() != Some(gens.as_slice()) {
        return Err(Error::InternalConsistency(
            "irreducible components do not intersect back to the ideal".into(),
        ));
    }

    let mut groups: BTreeMap<Vec<usize>, Vec<Monomial>> = BTreeMap::new();
    for c in &irreducible {
        let g = c.generators();
        groups
            .entry(c.prime())
            .and_modify(|acc| *acc = intersect_monomial(acc, &g))
            .or_insert(g);
    }
    let primary: Vec<PrimaryComponent> = groups
        .into_iter()
        .map(|(prime, generators)| PrimaryComponent { prime, generators })
        .collect();
    // Omitting any primary component must change the intersection.
    if primary.len() > 1 {
        for k in 0..primary.len() {
            let others = intersect_all(
                primary
                    .iter()
                    .enumerate()
                    .filter(|(l, _)| *l != k)
                    .map(|(_, p)| p.generators.as_slice()),
            );
            if others.as_deref() == Some(gens.as_slice()) {
                return Err(Error::InternalConsistency(format!(
                    "primary component {k} is redundant"
                )));
            }
        }
    }
    let associated: Vec<Vec<usize>> = primary.iter().map(|p| p.prime.clone()).collect();
    let embedded = associated
        .iter()
        .filter(|p| {
            associated
                .iter()
                .any(|q| q.len() < p.len() && q.iter().all(|v| p.contains(v)))
        })
        .cloned()
        .collect();
    Ok(Decomposition {
        irreducible,
        primary,
        associated,
        embedded,
    })
}

/// `J_i` with `(S/I)_{<=i} = J_i / I`: the intersection of the primary
/// components of dimension greater than `i`, or the unit ideal.
pub fn m_leq_monomial(i: &IdealHandle, dim: usize) -> Result<IdealHandle> {
    let ring = i.ring();
    let dec = decompose(i)?;
    Ok(m_leq_from(ring, &dec, dim))
}

pub(crate) fn m_leq_from(ring: &RingRef, dec: &Decomposition, dim: usize) -> IdealHandle {
    let n = ring.nvars();
    let big = dec
        .primary
        .iter()
        .filter(|p| n - p.prime.len() > dim)
        .map(|p| p.generators.as_slice());
    match intersect_all(big) {
        Some(g) => IdealHandle::from_monomials(ring, &g),
        None => IdealHandle::unit(ring),
    }
}

#[cfg(test)]
mod tests;
