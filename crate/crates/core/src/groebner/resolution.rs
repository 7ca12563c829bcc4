//! Schreyer syzygies and free resolutions.
//!
//! Every level is a Gröbner basis for the Schreyer order induced by the level
//! below, with basis elements sorted so that, per position, leading monomials
//! descend lexicographically. Leading terms then lose one more variable at each
//! step, so the frame stops after at most `n + 1` levels.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::{ModuleOrder, Monomial, TermOrder};
use crate::poly::Polynomial;
use crate::ring::{Degree, RingRef};

use super::engine::{groebner, reduce_tracking, s_vector, Caps, Term, Vector};
use super::module::{eliminate_unit, find_unit, ModuleBasis, ModulePresentation};

/// `F_0 <- F_1 <- ... <- F_len`. `maps[i]` holds the columns of `d_{i+1}`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ring: RingRef,
    shifts: Vec<Vec<Degree>>,
    maps: Vec<Vec<Vec<Polynomial>>>,
    complete: bool,
}

impl ChainComplex {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// Index of the last free module.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.shifts.get(i).map_or(0, |s| s.len())
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.shifts.iter().map(|s| s.len()).collect()
    }

    /// Degrees of the generators of `F_i`.
    pub fn shifts(&self, i: usize) -> &[Degree] {
        self.shifts.get(i).map_or(&[], |s| s.as_slice())
    }

    /// Columns of `d_i : F_i -> F_{i-1}` for `i >= 1`; empty past the end.
    pub fn differential(&self, i: usize) -> &[Vec<Polynomial>] {
        assert!(i >= 1, "differentials start at d_1");
        self.maps.get(i - 1).map_or(&[], |m| m.as_slice())
    }

    /// False when the length cap cut the resolution short.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// `d_i d_{i+1} = 0` for every `i`, exactly.
    pub fn compositions_vanish(&self) -> bool {
        for i in 1..self.maps.len() {
            let (d, e) = (&self.maps[i - 1], &self.maps[i]);
            for col in e {
                let rows = self.rank(i - 1);
                for r in 0..rows {
                    let mut acc = Polynomial::zero(&self.ring);
                    for (k, entry) in col.iter().enumerate() {
                        if !entry.is_zero() && !d[k][r].is_zero() {
                            acc = &acc + &(entry * &d[k][r]);
                        }
                    }
                    if !acc.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// No differential has a unit entry.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| find_unit(m).is_none())
    }

    /// Graded Betti numbers: `(i, degree, count)` sorted.
    pub fn betti(&self) -> Vec<(usize, Degree, usize)> {
        let mut counts: HashMap<(usize, Degree), usize> = HashMap::new();
        for (i, s) in self.shifts.iter().enumerate() {
            for d in s {
                *counts.entry((i, *d)).or_default() += 1;
            }
        }
        let mut out: Vec<_> = counts.into_iter().map(|((i, d), c)| (i, d, c)).collect();
        out.sort();
        out
    }

    /// Splits off trivial summands `S --u--> S` until no unit entry remains.
    fn prune(&mut self) {
        loop {
            let hit = self
                .maps
                .iter()
                .enumerate()
                .find_map(|(i, m)| find_unit(m).map(|(c, r)| (i, c, r)));
            let Some((i, c, r)) = hit else { break };
            // d_{i+1} loses column c and row r.
            self.maps[i] = eliminate_unit(&self.maps[i], c, r);
            self.shifts[i + 1].remove(c);
            self.shifts[i].remove(r);
            if let Some(next) = self.maps.get_mut(i + 1) {
                for col in next.iter_mut() {
                    col.remove(c);
                }
            }
            if i > 0 {
                self.maps[i - 1].remove(r);
            }
        }
        while self.maps.last().is_some_and(|m| m.is_empty()) {
            self.maps.pop();
            self.shifts.pop();
        }
    }
}

fn lead_degree(ring: &RingRef, v: &Vector, shifts: &[Degree]) -> Degree {
    let t = v.lead();
    let d = ring.degree(&t.mono);
    [d[0] + shifts[t.pos][0], d[1] + shifts[t.pos][1]]
}

/// Sorts a basis by position, then lexicographically descending leading
/// monomials, as the termination argument requires.
fn schreyer_sort(basis: &mut [Vector]) {
    basis.sort_by(|a, b| {
        let (x, y) = (a.lead(), b.lead());
        x.pos
            .cmp(&y.pos)
            .then_with(|| TermOrder::Lex.cmp(&y.mono, &x.mono))
    });
}

/// Syzygies of a sorted Gröbner basis `basis` (for `ord`): one per pair with
/// a common leading position. They form a Gröbner basis for the Schreyer
/// order, which is returned alongside.
fn schreyer_level(basis: &[Vector], ord: &ModuleOrder) -> Result<(Vec<Vector>, ModuleOrder)> {
    let caps = Caps::current();
    let next = ord.schreyer(
        basis
            .iter()
            .map(|v| (v.lead().pos, v.lead().mono))
            .collect(),
    );
    let mut out: Vec<Vector> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (a, b) = (basis[i].lead(), basis[j].lead());
            if a.pos != b.pos {
                continue;
            }
            let l = a.mono.lcm(&b.mono);
            if l.degree() > caps.max_degree {
                return Err(Error::resource("syzygy degree cap", out.len(), l.degree()));
            }
            let s = s_vector(&basis[i], &basis[j], ord);
            let (rem, steps) = reduce_tracking(&s, basis, ord);
            if !rem.is_zero() {
                return Err(Error::InternalConsistency(
                    "syzygy input is not a Gröbner basis".into(),
                ));
            }
            let mut acc: HashMap<(usize, Monomial), FieldElement> = HashMap::new();
            let mut push = |pos: usize, m: Monomial, c: FieldElement| {
                let e = acc.entry((pos, m)).or_insert_with(|| c.field().zero());
                *e = e.add(&c);
            };
            push(i, a.mono.quotient_of(&l).unwrap(), a.coeff.inv());
            push(j, b.mono.quotient_of(&l).unwrap(), b.coeff.inv().neg());
            for st in steps {
                push(st.index, st.mono, st.coeff.neg());
            }
            let mut terms: Vec<Term> = acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((pos, mono), coeff)| Term { pos, mono, coeff })
                .collect();
            terms.sort_by(|x, y| next.cmp((y.pos, &y.mono), (x.pos, &x.mono)));
            let mut v = Vector { terms };
            v.make_monic();
            out.push(v);
            if out.len() > caps.max_basis {
                return Err(Error::resource("syzygy count cap", out.len(), l.degree()));
            }
        }
    }
    // Drop elements whose leading term is a multiple of another's.
    let mut keep = vec![true; out.len()];
    for x in 0..out.len() {
        for y in 0..out.len() {
            if x == y || !keep[y] {
                continue;
            }
            let (p, q) = (out[x].lead(), out[y].lead());
            if p.pos == q.pos && q.mono.divides(&p.mono) && (p.mono != q.mono || y < x) {
                keep[x] = false;
                break;
            }
        }
    }
    let out = out
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(v, _)| v)
        .collect();
    Ok((out, next))
}

/// First syzygies of a module Gröbner basis, as a submodule of `S^len`.
pub fn syzygies(basis: &ModuleBasis) -> Result<ModulePresentation> {
    let ring = basis.ring();
    let k = basis.len();
    let mut sorted: Vec<(usize, Vector)> = basis.vectors().iter().cloned().enumerate().collect();
    sorted.sort_by(|(_, a), (_, b)| {
        let (x, y) = (a.lead(), b.lead());
        x.pos
            .cmp(&y.pos)
            .then_with(|| TermOrder::Lex.cmp(&y.mono, &x.mono))
    });
    let perm: Vec<usize> = sorted.iter().map(|(i, _)| *i).collect();
    let vecs: Vec<Vector> = sorted.into_iter().map(|(_, v)| v).collect();
    let (syz, _) = schreyer_level(&vecs, basis.order())?;
    let cols = syz
        .iter()
        .map(|v| {
            let c = v.to_columns(ring, k);
            let mut orig = vec![Polynomial::zero(ring); k];
            for (slot, p) in c.into_iter().enumerate() {
                orig[perm[slot]] = p;
            }
            orig
        })
        .collect();
    let shifts = basis
        .vectors()
        .iter()
        .map(|v| lead_degree(ring, v, &vec![[0, 0]; basis.rank()]))
        .collect();
    ModulePresentation::new(ring, k, shifts, cols)
}

/// A free resolution of `m`, pruned of unit entries (hence minimal when `m`
/// is homogeneous). At most `max_length` differentials are computed.
pub fn free_resolution(m: &ModulePresentation, max_length: usize) -> Result<ChainComplex> {
    if max_length == 0 {
        return Err(Error::InvalidArgument(
            "resolution length must be at least 1".into(),
        ));
    }
    let ring = m.ring().clone();
    let n = ring.nvars();
    let mut ord = ModuleOrder::pot(TermOrder::Degrevlex);
    let vecs: Vec<Vector> = m
        .relations()
        .iter()
        .map(|c| Vector::from_columns(c, &ord))
        .collect();
    let mut level = groebner(vecs, &ord, m.rank() == 1)?;

    let mut shifts = vec![m.shifts().to_vec()];
    let mut maps = Vec::new();
    let mut complete = true;
    while !level.is_empty() {
        if maps.len() == max_length {
            complete = false;
            break;
        }
        if maps.len() > n {
            return Err(Error::InternalConsistency(
                "resolution did not stop within the syzygy bound".into(),
            ));
        }
        schreyer_sort(&mut level);
        let below = shifts.last().unwrap();
        let rank = below.len();
        shifts.push(level.iter().map(|v| lead_degree(&ring, v, below)).collect());
        maps.push(level.iter().map(|v| v.to_columns(&ring, rank)).collect());
        let (next, next_ord) = schreyer_level(&level, &ord)?;
        level = next;
        ord = next_ord;
    }
    let mut cx = ChainComplex {
        ring,
        shifts,
        maps,
        complete,
    };
    cx.prune();
    Ok(cx)
}
