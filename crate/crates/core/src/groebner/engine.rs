//! Buchberger's algorithm over free modules `S^r`.
//!
//! Ideals are the rank-one case. Vectors keep their terms sorted strictly
//! descending in the active [`ModuleOrder`], so leading terms are `terms[0]`
//! and subtraction is a linear merge.

use std::cell::Cell;
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::{ModuleOrder, Monomial};
use crate::poly::Polynomial;
use crate::ring::RingRef;

/// Resource caps for Gröbner computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_basis: usize,
    pub max_degree: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_basis: 2000,
            max_degree: 40,
        }
    }
}

thread_local! {
    static CAPS: Cell<Caps> = Cell::new(Caps::default());
}

impl Caps {
    /// Caps in force on this thread.
    pub fn current() -> Caps {
        CAPS.with(|c| c.get())
    }

    /// Runs `f` with `caps` in force on this thread.
    pub fn scope<T>(caps: Caps, f: impl FnOnce() -> T) -> T {
        let prev = CAPS.with(|c| c.replace(caps));
        struct Restore(Caps);
        impl Drop for Restore {
            fn drop(&mut self) {
                CAPS.with(|c| c.set(self.0));
            }
        }
        let _guard = Restore(prev);
        f()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: FieldElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn from_columns(entries: &[Polynomial], ord: &ModuleOrder) -> Self {
        let mut terms: Vec<Term> = entries
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| {
                p.terms().map(move |(m, c)| Term {
                    pos,
                    mono: *m,
                    coeff: c.clone(),
                })
            })
            .collect();
        terms.sort_by(|a, b| ord.cmp((b.pos, &b.mono), (a.pos, &a.mono)));
        Vector { terms }
    }

    pub fn to_columns(&self, ring: &RingRef, rank: usize) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(ring); rank];
        for t in &self.terms {
            out[t.pos].add_term(t.mono, &t.coeff);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term {
        &self.terms[0]
    }

    pub fn scale(&mut self, c: &FieldElement) {
        for t in &mut self.terms {
            t.coeff = t.coeff.mul(c);
        }
    }

    pub fn make_monic(&mut self) {
        if let Some(t) = self.terms.first() {
            if !t.coeff.is_one() {
                let inv = t.coeff.inv();
                self.scale(&inv);
            }
        }
    }

    /// `self - c * m * other`, merging in order.
    pub fn sub_mul(
        &self,
        other: &Vector,
        m: &Monomial,
        c: &FieldElement,
        ord: &ModuleOrder,
    ) -> Vector {
        self.sub_mul_from(0, other, m, c, ord)
    }

    /// Like [`Vector::sub_mul`] but ignores the first `skip` terms of `self`.
    pub fn sub_mul_from(
        &self,
        skip: usize,
        other: &Vector,
        m: &Monomial,
        c: &FieldElement,
        ord: &ModuleOrder,
    ) -> Vector {
        let a = &self.terms[skip..];
        let mut out = Vec::with_capacity(a.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < other.terms.len() {
            let bt = &other.terms[j];
            let bm = bt.mono.mul(m);
            match ord.cmp((a[i].pos, &a[i].mono), (bt.pos, &bm)) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        pos: bt.pos,
                        mono: bm,
                        coeff: bt.coeff.mul(c).neg(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = a[i].coeff.sub(&bt.coeff.mul(c));
                    if !coeff.is_zero() {
                        out.push(Term {
                            pos: a[i].pos,
                            mono: a[i].mono,
                            coeff,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for bt in &other.terms[j..] {
            out.push(Term {
                pos: bt.pos,
                mono: bt.mono.mul(m),
                coeff: bt.coeff.mul(c).neg(),
            });
        }
        Vector { terms: out }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &FieldElement) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    pos: t.pos,
                    mono: t.mono.mul(m),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.mono.degree())
            .max()
            .unwrap_or(0)
    }
}

/// A record of one reduction step: `quotient * basis[index]` was subtracted.
pub(crate) struct Step {
    pub index: usize,
    pub mono: Monomial,
    pub coeff: FieldElement,
}

fn find_reducer(basis: &[Vector], t: &Term) -> Option<usize> {
    basis.iter().position(|g| {
        let l = g.lead();
        l.pos == t.pos && l.mono.divides(&t.mono)
    })
}

/// Full reduction of `v` modulo `basis` (tails reduced too).
pub(crate) fn reduce(v: &Vector, basis: &[&Vector], ord: &ModuleOrder) -> Vector {
    let mut rem: Vec<Term> = Vec::new();
    let mut p = v.clone();
    let mut skip = 0;
    while skip < p.terms.len() {
        let t = p.terms[skip].clone();
        let hit = basis.iter().find(|g| {
            let l = g.lead();
            l.pos == t.pos && l.mono.divides(&t.mono)
        });
        match hit {
            Some(g) => {
                let l = g.lead();
                let m = l.mono.quotient_of(&t.mono).expect("divides");
                let c = t.coeff.div(&l.coeff);
                p = p.sub_mul_from(skip, g, &m, &c, ord);
                skip = 0;
            }
            None => {
                rem.push(t);
                skip += 1;
            }
        }
    }
    rem.extend(p.terms.drain(skip..));
    Vector { terms: rem }
}

/// Top-reduction with quotient tracking; used for Schreyer syzygies.
pub(crate) fn reduce_tracking(
    v: &Vector,
    basis: &[Vector],
    ord: &ModuleOrder,
) -> (Vector, Vec<Step>) {
    let mut p = v.clone();
    let mut steps = Vec::new();
    let mut rem = Vec::new();
    while !p.is_zero() {
        let t = p.lead().clone();
        match find_reducer(basis, &t) {
            Some(k) => {
                let l = basis[k].lead();
                let m = l.mono.quotient_of(&t.mono).expect("divides");
                let c = t.coeff.div(&l.coeff);
                p = p.sub_mul(&basis[k], &m, &c, ord);
                steps.push(Step {
                    index: k,
                    mono: m,
                    coeff: c,
                });
            }
            None => {
                rem.push(t);
                p.terms.remove(0);
            }
        }
    }
    (Vector { terms: rem }, steps)
}

pub(crate) fn s_vector(f: &Vector, g: &Vector, ord: &ModuleOrder) -> Vector {
    let (lf, lg) = (f.lead(), g.lead());
    debug_assert_eq!(lf.pos, lg.pos);
    let l = lf.mono.lcm(&lg.mono);
    let mf = lf.mono.quotient_of(&l).unwrap();
    let mg = lg.mono.quotient_of(&l).unwrap();
    let a = f.mul_monomial(&mf, &lf.coeff.inv());
    a.sub_mul(g, &mg, &lg.coeff.inv(), ord)
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the submodule generated by `gens`, sorted
/// ascending by leading term, every element monic.
pub(crate) fn groebner(
    gens: Vec<Vector>,
    ord: &ModuleOrder,
    rank_one: bool,
) -> Result<Vec<Vector>> {
    let caps = Caps::current();
    let mut all: Vec<Vector> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<Vector> = gens.into_iter().filter(|v| !v.is_zero()).collect();
    // Deterministic insertion: smallest leading terms first.
    input.sort_by(|a, b| {
        let (x, y) = (a.lead(), b.lead());
        ord.cmp((x.pos, &x.mono), (y.pos, &y.mono))
    });
    for mut v in input {
        let refs: Vec<&Vector> = all
            .iter()
            .zip(&active)
            .filter(|(_, &a)| a)
            .map(|(g, _)| g)
            .collect();
        v = reduce(&v, &refs, ord);
        if v.is_zero() {
            continue;
        }
        v.make_monic();
        insert(&mut all, &mut active, &mut pairs, v, rank_one, ord, caps)?;
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.lcm
                    .degree()
                    .cmp(&q.lcm.degree())
                    .then_with(|| {
                        ord.cmp((all[p.i].lead().pos, &p.lcm), (all[q.i].lead().pos, &q.lcm))
                    })
                    .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        if pair.lcm.degree() > caps.max_degree {
            return Err(Error::resource(
                "Gröbner basis degree cap",
                all.len(),
                pair.lcm.degree(),
            ));
        }
        let s = s_vector(&all[pair.i], &all[pair.j], ord);
        let refs: Vec<&Vector> = all
            .iter()
            .zip(&active)
            .filter(|(_, &a)| a)
            .map(|(g, _)| g)
            .collect();
        let mut h = reduce(&s, &refs, ord);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        insert(&mut all, &mut active, &mut pairs, h, rank_one, ord, caps)?;
    }

    // Interreduce the surviving elements.
    let mut basis: Vec<Vector> = all
        .into_iter()
        .zip(active)
        .filter(|(_, a)| *a)
        .map(|(g, _)| g)
        .collect();
    minimalize(&mut basis);
    let mut reduced = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<&Vector> = basis
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, g)| g)
            .collect();
        let head = Vector {
            terms: vec![basis[k].terms[0].clone()],
        };
        let tail = Vector {
            terms: basis[k].terms[1..].to_vec(),
        };
        let mut r = reduce(&tail, &others, ord);
        let mut terms = head.terms;
        terms.append(&mut r.terms);
        let mut v = Vector { terms };
        v.make_monic();
        reduced.push(v);
    }
    reduced.sort_by(|a, b| {
        let (x, y) = (a.lead(), b.lead());
        ord.cmp((x.pos, &x.mono), (y.pos, &y.mono))
    });
    Ok(reduced)
}

fn minimalize(basis: &mut Vec<Vector>) {
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (a, b) = (basis[i].lead(), basis[j].lead());
            if a.pos == b.pos && b.mono.divides(&a.mono) && (a.mono != b.mono || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut k = 0;
    basis.retain(|_| {
        k += 1;
        keep[k - 1]
    });
}

/// Gebauer–Möller update with the new element `h`.
#[allow(clippy::too_many_arguments)]
fn insert(
    all: &mut Vec<Vector>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    h: Vector,
    rank_one: bool,
    _ord: &ModuleOrder,
    caps: Caps,
) -> Result<()> {
    if all.len() + 1 > caps.max_basis {
        return Err(Error::resource(
            "Gröbner basis size cap",
            all.len() + 1,
            h.max_degree(),
        ));
    }
    let hn = all.len();
    let hl_pos = h.lead().pos;
    let hl_mono = h.lead().mono;

    let candidates: Vec<Pair> = (0..hn)
        .filter(|&g| active[g] && all[g].lead().pos == hl_pos)
        .map(|g| Pair {
            i: g,
            j: hn,
            lcm: all[g].lead().mono.lcm(&hl_mono),
        })
        .collect();
    let coprime =
        |p: &Pair, all: &Vec<Vector>| rank_one && all[p.i].lead().mono.is_coprime(&hl_mono);

    // Chain criterion among the new pairs.
    let mut pending: std::collections::VecDeque<Pair> = candidates.into();
    let mut kept: Vec<Pair> = Vec::new();
    while let Some(p) = pending.pop_front() {
        let divides = |q: &Pair| q.lcm.divides(&p.lcm);
        if coprime(&p, all) || (!pending.iter().any(divides) && !kept.iter().any(divides)) {
            kept.push(p);
        }
    }
    let new_pairs: Vec<Pair> = kept.into_iter().filter(|p| !coprime(p, all)).collect();

    // Drop old pairs made redundant by h.
    pairs.retain(|p| {
        if all[p.i].lead().pos != hl_pos {
            return true;
        }
        let l1 = all[p.i].lead().mono.lcm(&hl_mono);
        let l2 = all[p.j].lead().mono.lcm(&hl_mono);
        !(hl_mono.divides(&p.lcm) && l1 != p.lcm && l2 != p.lcm)
    });
    pairs.extend(new_pairs);

    for g in 0..hn {
        if active[g] {
            let l = all[g].lead();
            if l.pos == hl_pos && hl_mono.divides(&l.mono) {
                active[g] = false;
            }
        }
    }
    all.push(h);
    active.push(true);
    Ok(())
}
