//! Tangent cones, Rees algebras, associated graded rings and the bigraded
//! `GG(A) = gr_m(gr_I(A))`, each checked against exact length computations.
//!
//! Lowest forms come from Lazard's trick: homogenize in the filtered
//! variables with a fresh `t`, take a Gröbner basis for an order that prefers
//! high powers of `t` inside each degree, set `t = 1`. The lowest forms of
//! that standard basis generate the initial ideal (or module), and every
//! construction is gated on a length oracle before it is returned.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groebner::{kernel, IdealHandle, ModulePresentation};
use crate::hilbert::{hilbert_samuel, hilbert_series, monomials_up_to, HilbertSeries, WINDOW};
use crate::linalg::{Echelon, SparseRow};
use crate::monomial::{ModuleOrder, Monomial, TermOrder};
use crate::numerical::{NumericalPoly1, SumAxes};
use crate::poly::Polynomial;
use crate::ring::{Ring, RingRef, VarDegree};

/// Largest corner of the rectangle on which a GG presentation is checked.
const GATE_CAP: i64 = 3;
/// Samuel functions are fitted no further out than this.
const SAMUEL_CAP: u32 = 40;

fn fresh_names(base: &Ring, stem: &str, count: usize) -> Vec<String> {
    (1..=count)
        .map(|k| {
            let mut name = format!("{stem}{k}");
            while base.names().contains(&name) {
                name.push('_');
            }
            name
        })
        .collect()
}

fn require_standard(ring: &RingRef) -> Result<()> {
    if ring.is_bigraded() || !ring.is_standard() {
        return Err(Error::Unsupported(
            "graded constructions start from a standard graded polynomial ring".into(),
        ));
    }
    Ok(())
}

/// Standard basis lowest forms of a submodule of `R^rank`, filtered by the
/// degree in `block`.
pub fn lowest_forms(
    ring: &RingRef,
    block: &[usize],
    rank: usize,
    relations: &[Vec<Polynomial>],
) -> Result<Vec<Vec<Polynomial>>> {
    let n = ring.nvars();
    let ext = ring
        .standard_regrading()
        .extended(&[("t", VarDegree::Weight(1))])?;
    let t = n;
    let homogenized: Vec<Vec<Polynomial>> = relations
        .iter()
        .filter(|c| c.iter().any(|p| !p.is_zero()))
        .map(|col| {
            let top = col
                .iter()
                .flat_map(|p| p.terms().map(|(m, _)| m.degree_in(block)))
                .max()
                .unwrap_or(0);
            col.iter()
                .map(|p| {
                    Polynomial::from_terms(
                        &ext,
                        p.terms().map(|(m, c)| {
                            let mut k = *m;
                            k.set_exp(t, top - m.degree_in(block));
                            (k, c.clone())
                        }),
                    )
                })
                .collect()
        })
        .collect();
    if homogenized.is_empty() {
        return Ok(Vec::new());
    }
    let mut t_row = vec![0i64; n + 1];
    t_row[t] = 1;
    let order = ModuleOrder::top(TermOrder::WeightMatrix(vec![vec![1; n + 1], t_row]));
    let shifts = vec![[0, 0]; rank];
    let pres = ModulePresentation::new(&ext, rank, shifts, homogenized)?;
    let basis = pres.groebner_basis(&order)?;
    let mut out = Vec::with_capacity(basis.len());
    for col in basis.columns() {
        let col: Vec<Polynomial> = col.iter().map(|p| p.dehomogenize(t).embed(ring)).collect();
        let Some(low) = col
            .iter()
            .flat_map(|p| p.terms().map(|(m, _)| m.degree_in(block)))
            .min()
        else {
            continue;
        };
        out.push(
            col.iter()
                .map(|p| {
                    Polynomial::from_terms(
                        ring,
                        p.terms()
                            .filter(|(m, _)| m.degree_in(block) == low)
                            .map(|(m, c)| (*m, c.clone())),
                    )
                })
                .collect(),
        );
    }
    Ok(out)
}

/// Ideal of lowest forms of a possibly inhomogeneous ideal, validated by
/// `l(S / (J + m^{k+1})) = l(S / (tc(J) + m^{k+1}))` up to the largest
/// generator degree plus the window.
pub fn tangent_cone(j: &IdealHandle) -> Result<IdealHandle> {
    let ring = j.ring();
    require_standard(ring)?;
    let all: Vec<usize> = (0..ring.nvars()).collect();
    let cols: Vec<Vec<Polynomial>> = j.gens().iter().map(|g| vec![g.clone()]).collect();
    let gens: Vec<Polynomial> = lowest_forms(ring, &all, 1, &cols)?
        .into_iter()
        .map(|mut c| c.remove(0))
        .collect();
    let tc = IdealHandle::new(ring, gens)?.reduced()?;
    let top = tc
        .gens()
        .iter()
        .filter_map(|g| g.degree())
        .max()
        .unwrap_or(0);
    let series = hilbert_series(&ModulePresentation::cyclic(&tc))?;
    let orig = ModulePresentation::cyclic(j);
    let mut acc = 0i128;
    for k in 0..=top + WINDOW {
        acc += series.value(k as i64, 0);
        let direct = hilbert_samuel(&orig, k)?;
        if direct != acc {
            return Err(Error::InternalConsistency(format!(
                "tangent cone fails the length oracle at k = {k}: {direct} vs {acc}"
            )));
        }
    }
    Ok(tc)
}

/// `S[y] / K` with `K = ker(S[y] -> (S/J)[t], y_j -> t f_j)`.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    pub base: RingRef,
    /// `k[x | y]` with `x` in bidegree (1,0) and `y` in (0,1).
    pub ring: RingRef,
    pub kernel: IdealHandle,
    /// The `f_j`, in the base ring.
    pub images: Vec<Polynomial>,
}

impl ReesPresentation {
    pub fn x_block(&self) -> Vec<usize> {
        (0..self.base.nvars()).collect()
    }

    pub fn y_block(&self) -> Vec<usize> {
        (self.base.nvars()..self.ring.nvars()).collect()
    }

    /// Every kernel generator maps into `J (S[t])` under `y_j -> t f_j`.
    pub fn substitution_check(&self, j: &IdealHandle) -> Result<bool> {
        let st = self.base.extended(&[("t", VarDegree::Weight(1))])?;
        let t = Polynomial::var(&st, self.base.nvars());
        let mut images: Vec<Polynomial> = (0..self.base.nvars())
            .map(|v| Polynomial::var(&st, v))
            .collect();
        images.extend(self.images.iter().map(|f| &t * &f.embed(&st)));
        let jt = IdealHandle::new(&st, j.gens().iter().map(|g| g.embed(&st)).collect())?;
        for g in self.kernel.gens() {
            if !jt.contains(&g.substitute(&st, &images))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn rees_kernel(j: &IdealHandle, i: &[Polynomial]) -> Result<ReesPresentation> {
    let base = j.ring();
    require_standard(base)?;
    if i.is_empty() {
        return Err(Error::InvalidArgument(
            "the ideal I needs at least one generator".into(),
        ));
    }
    if i.iter().any(|f| !f.ring().same_as(base)) {
        return Err(Error::RingMismatch);
    }
    let n = base.nvars();
    let m = i.len();
    let ys = fresh_names(base, "u", m);
    let ring = Ring::bigraded(base.names(), &ys, base.field())?;
    let elim = ring
        .standard_regrading()
        .extended(&[("t", VarDegree::Weight(1))])?;
    let t = Polynomial::var(&elim, n + m);
    let mut gens: Vec<Polynomial> = i
        .iter()
        .enumerate()
        .map(|(k, f)| &Polynomial::var(&elim, n + k) - &(&t * &f.embed(&elim)))
        .collect();
    gens.extend(j.gens().iter().map(|g| g.embed(&elim)));
    let eliminated = IdealHandle::new(&elim, gens)?.eliminate(&[n + m])?;
    let kernel = IdealHandle::new(
        &ring,
        eliminated.gens().iter().map(|g| g.embed(&ring)).collect(),
    )?;
    let rees = ReesPresentation {
        base: base.clone(),
        ring,
        kernel,
        images: i.to_vec(),
    };
    if !rees.substitution_check(j)? {
        return Err(Error::InternalConsistency(
            "Rees kernel fails the substitution check".into(),
        ));
    }
    Ok(rees)
}

/// `gr_I(S/J) = k[x, y] / L` with `L = K + I S[y]`, graded by `y`-degree.
#[derive(Clone, Debug)]
pub struct AssocGraded {
    pub rees: ReesPresentation,
    pub ideal: IdealHandle,
}

pub fn assoc_graded(j: &IdealHandle, i: &[Polynomial]) -> Result<AssocGraded> {
    let rees = rees_kernel(j, i)?;
    let mut gens = rees.kernel.gens().to_vec();
    gens.extend(i.iter().map(|f| f.embed(&rees.ring)));
    gens.extend(j.gens().iter().map(|g| g.embed(&rees.ring)));
    let ideal = IdealHandle::new(&rees.ring, gens)?.reduced()?;
    Ok(AssocGraded { rees, ideal })
}

/// A bigraded module over `k[x | y]`, with the rectangle on which its
/// Hilbert function was checked against direct lengths.
#[derive(Clone, Debug)]
pub struct BigradedPresentation {
    pub ring: RingRef,
    pub module: ModulePresentation,
    /// Defining ideal when the module is cyclic.
    pub ideal: Option<IdealHandle>,
    pub checked: (i64, i64),
}

impl BigradedPresentation {
    /// The same module over the standard graded ring on all variables.
    pub fn total(&self) -> ModulePresentation {
        let flat = self.ring.standard_regrading();
        self.module.regraded(&flat, |d| [d[0] + d[1], 0])
    }

    pub fn series(&self) -> Result<HilbertSeries> {
        hilbert_series(&self.module)
    }
}

/// `GG(S/J)`, additionally checked against the double sum transform.
pub fn gg_presentation(j: &IdealHandle, i: &[Polynomial]) -> Result<BigradedPresentation> {
    let out = gg_of_module(&ModulePresentation::cyclic(j), i)?;
    let series = out.series()?;
    let mut bif = Bifiltration::new(j, i)?;
    for p in 0..=out.checked.0 {
        for q in 0..=out.checked.1 {
            let h = bif.h11(p as u32, q as u32)?;
            let s = series.summed_value(p, q, SumAxes::Both);
            if h != s {
                return Err(Error::InternalConsistency(format!(
                    "double sum transform disagrees at ({p}, {q}): {s} vs {h}"
                )));
            }
        }
    }
    Ok(out)
}

/// `J'/J` as a cokernel: one generator per element of `sub`, relations the
/// syzygies of `(sub | gens J)` cut down to the first entries.
pub fn submodule_presentation(j: &IdealHandle, sub: &[Polynomial]) -> Result<ModulePresentation> {
    let ring = j.ring();
    let mut cols: Vec<Vec<Polynomial>> = sub.iter().map(|g| vec![g.clone()]).collect();
    cols.extend(j.gens().iter().map(|g| vec![g.clone()]));
    let s = sub.len();
    let rels = kernel(ring, 1, &cols)?
        .into_iter()
        .map(|mut v| {
            v.truncate(s);
            v
        })
        .collect();
    ModulePresentation::new(ring, s, vec![[0, 0]; s], rels)
}

/// `GG(J'/J)` for the submodule of `S/J` generated by `sub`.
pub fn gg_module(
    j: &IdealHandle,
    i: &[Polynomial],
    sub: &[Polynomial],
) -> Result<BigradedPresentation> {
    let cyclic = sub.len() == 1 && sub[0].is_constant() && !sub[0].is_zero();
    if cyclic {
        return gg_presentation(j, i);
    }
    gg_of_module(&submodule_presentation(j, sub)?, i)
}

/// `GG(E) = gr_m(gr_I(E))` of a finitely presented `E = S^r / R`, generators
/// in bidegree (0,0); shifts of `E` are ignored. The Rees module comes from
/// eliminating `t` in `R + (y_j - t f_j) e_k`; it is validated against
/// `dim_k (m^a I^b E + I^{b+1} E) / (m^{a+1} I^b E + I^{b+1} E)` on a rectangle.
pub fn gg_of_module(e: &ModulePresentation, i: &[Polynomial]) -> Result<BigradedPresentation> {
    let base = e.ring();
    require_standard(base)?;
    if i.is_empty() {
        return Err(Error::InvalidArgument(
            "the ideal I needs at least one generator".into(),
        ));
    }
    if i.iter().any(|f| !f.ring().same_as(base)) {
        return Err(Error::RingMismatch);
    }
    let (n, m, r) = (base.nvars(), i.len(), e.rank());
    let ys = fresh_names(base, "u", m);
    let ring = Ring::bigraded(base.names(), &ys, base.field())?;
    let elim = ring
        .standard_regrading()
        .extended(&[("t", VarDegree::Weight(1))])?;
    let t = Polynomial::var(&elim, n + m);
    let zero = Polynomial::zero(&elim);
    let mut gens: Vec<Vec<Polynomial>> = e
        .relations()
        .iter()
        .map(|c| c.iter().map(|p| p.embed(&elim)).collect())
        .collect();
    for k in 0..r {
        for (jj, f) in i.iter().enumerate() {
            let mut col = vec![zero.clone(); r];
            col[k] = &Polynomial::var(&elim, n + jj) - &(&t * &f.embed(&elim));
            gens.push(col);
        }
    }
    let pres = ModulePresentation::new(&elim, r, vec![[0, 0]; r], gens)?;
    let gb = pres.groebner_basis(&ModuleOrder::top(TermOrder::elimination(vec![n + m])))?;
    let mut rels: Vec<Vec<Polynomial>> = gb
        .columns()
        .into_iter()
        .filter(|c| {
            c.iter()
                .all(|p| p.support_vars().iter().all(|&v| v != n + m))
        })
        .map(|c| c.iter().map(|p| p.embed(&ring)).collect())
        .collect();
    let rzero = Polynomial::zero(&ring);
    for k in 0..r {
        for f in i {
            let mut col = vec![rzero.clone(); r];
            col[k] = f.embed(&ring);
            rels.push(col);
        }
    }
    let xs: Vec<usize> = (0..n).collect();
    let low = lowest_forms(&ring, &xs, r, &rels)?;
    let module = ModulePresentation::new(&ring, r, vec![[0, 0]; r], low)?;
    if !module.is_homogeneous() {
        return Err(Error::InternalConsistency(
            "GG relations are not bihomogeneous".into(),
        ));
    }
    let ideal = if r == 1 {
        Some(IdealHandle::new(
            &ring,
            module.relations().iter().map(|c| c[0].clone()).collect(),
        )?)
    } else {
        None
    };
    let (mut a, mut b) = (1i64, 1i64);
    for c in module.relations() {
        if let Some(Some(d)) = module.column_degree(c) {
            a = a.max(d[0] as i64 + 1);
            b = b.max(d[1] as i64 + 1);
        }
    }
    let checked = (a.min(GATE_CAP), b.min(GATE_CAP));
    let out = BigradedPresentation {
        ring,
        module,
        ideal,
        checked,
    };
    let series = out.series()?;
    let mut bif = Bifiltration::for_module(e, i)?;
    for p in 0..=checked.0 {
        for q in 0..=checked.1 {
            let direct = bif.gg_value(p as u32, q as u32)?;
            let from = series.value(p, q);
            if direct != from {
                return Err(Error::InternalConsistency(format!(
                    "GG presentation disagrees with the bifiltration at ({p}, {q}): {from} vs {direct}"
                )));
            }
        }
    }
    Ok(out)
}

/// Exact lengths of quotients of `A = S/J` by the ideals `m^a + I^b` and
/// friends, with cached powers.
pub struct Bifiltration {
    ring: RingRef,
    j: IdealHandle,
    /// Relations of the module being filtered; `S/J` uses the generators of `J`.
    rank: usize,
    cols: Vec<Vec<Polynomial>>,
    i: IdealHandle,
    m: IdealHandle,
    i_pow: Vec<IdealHandle>,
    m_pow: Vec<IdealHandle>,
}

impl Bifiltration {
    pub fn new(j: &IdealHandle, i: &[Polynomial]) -> Result<Self> {
        let ring = j.ring().clone();
        require_standard(&ring)?;
        let unit = IdealHandle::unit(&ring);
        Ok(Self {
            m: IdealHandle::maximal(&ring),
            i: IdealHandle::new(&ring, i.to_vec())?,
            j: j.clone(),
            rank: 1,
            cols: j.gens().iter().map(|g| vec![g.clone()]).collect(),
            i_pow: vec![unit.clone()],
            m_pow: vec![unit],
            ring,
        })
    }

    /// Filtration of a finitely presented module; only `gg_value` is
    /// meaningful unless the module is cyclic.
    pub fn for_module(e: &ModulePresentation, i: &[Polynomial]) -> Result<Self> {
        let ring = e.ring().clone();
        let j = if e.rank() == 1 {
            IdealHandle::new(&ring, e.relations().iter().map(|c| c[0].clone()).collect())?
        } else {
            IdealHandle::zero(&ring)
        };
        let mut out = Self::new(&j, i)?;
        out.rank = e.rank();
        out.cols = e.relations().to_vec();
        Ok(out)
    }

    fn i_power(&mut self, k: u32) -> Result<IdealHandle> {
        while self.i_pow.len() <= k as usize {
            let next = self.i_pow.last().unwrap().product(&self.i)?;
            self.i_pow.push(next);
        }
        Ok(self.i_pow[k as usize].clone())
    }

    fn m_power(&mut self, k: u32) -> Result<IdealHandle> {
        while self.m_pow.len() <= k as usize {
            let next = self.m_pow.last().unwrap().product(&self.m)?;
            self.m_pow.push(next);
        }
        Ok(self.m_pow[k as usize].clone())
    }

    /// `l(A / (m^{a+1} + I^{b+1}) A)`.
    pub fn length(&mut self, a: u32, b: u32) -> Result<i128> {
        let (ma, ib) = (self.m_power(a + 1)?, self.i_power(b + 1)?);
        let ideal = self.j.sum(&ma)?.sum(&ib)?;
        colength(&ideal)
    }

    /// `dim_k GG(E)_{(a,b)}` straight from the definition.
    pub fn gg_value(&mut self, a: u32, b: u32) -> Result<i128> {
        let ib = self.i_power(b)?;
        let top = self.m_power(a)?.product(&ib)?;
        let low = self
            .m_power(a + 1)?
            .product(&ib)?
            .sum(&self.i_power(b + 1)?)?;
        let zero = Polynomial::zero(&self.ring);
        let unit = |k: usize, g: &Polynomial| {
            let mut col = vec![zero.clone(); self.rank];
            col[k] = g.clone();
            col
        };
        let mut q = self.cols.clone();
        let mut p = Vec::new();
        for k in 0..self.rank {
            q.extend(low.gens().iter().map(|g| unit(k, g)));
            p.extend(top.gens().iter().map(|g| unit(k, g)));
        }
        let pres = ModulePresentation::new(&self.ring, self.rank, vec![[0, 0]; self.rank], q)?;
        let gb = pres.groebner_basis(&ModuleOrder::pot(TermOrder::Degrevlex))?;
        let mut index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
        let mut ech = Echelon::new();
        for col in &p {
            let mut row = SparseRow::new();
            for (pos, f) in gb.normal_form(col)?.iter().enumerate() {
                for (mono, c) in f.terms() {
                    let k = index.len();
                    let key = *index.entry((pos, *mono)).or_insert(k);
                    row.insert(key, c.clone());
                }
            }
            ech.insert(row);
        }
        Ok(ech.rank() as i128)
    }

    /// `h^{(1,1)}(a, b)` of `GG(A)` by the two-summand length formula:
    /// `l(A/(m^{a+1} + I^{b+1})) + sum_{k<=b} l((I^k ∩ (m^{a+1} + I^{k+1})) / (m^{a+1} I^k + I^{k+1}))`.
    pub fn h11(&mut self, a: u32, b: u32) -> Result<i128> {
        let mut total = self.length(a, b)?;
        let ma = self.m_power(a + 1)?;
        for k in 0..=b {
            let ik = self.i_power(k)?.sum(&self.j)?;
            let ik1 = self.i_power(k + 1)?;
            let wide = ma.sum(&ik1)?.sum(&self.j)?;
            let meet = ik.intersect(&wide)?;
            let q = ma.product(&self.i_power(k)?)?.sum(&ik1)?.sum(&self.j)?;
            total += subquotient_length(meet.gens(), &q, a + 1)?;
        }
        Ok(total)
    }
}

/// `l(S / (J + m^{a+1} + I^{b+1}))`.
pub fn bifiltration_length(j: &IdealHandle, i: &[Polynomial], a: u32, b: u32) -> Result<i128> {
    Bifiltration::new(j, i)?.length(a, b)
}

/// `h^{(1,1)}` of `GG(S/J)` at `(a, b)`, computed from lengths only.
pub fn h11_direct(j: &IdealHandle, i: &[Polynomial], a: u32, b: u32) -> Result<i128> {
    Bifiltration::new(j, i)?.h11(a, b)
}

/// `dim_k S / I` for an ideal supported at finitely many points; the count of
/// standard monomials of a degrevlex basis.
pub fn colength(ideal: &IdealHandle) -> Result<i128> {
    let n = ideal.ring().nvars();
    let lead = ideal
        .groebner_basis(&TermOrder::Degrevlex)?
        .leading_monomials();
    for v in 0..n {
        if !lead.iter().any(|m| m.support() == [v] || m.is_one()) {
            return Err(Error::Unsupported(format!(
                "quotient has infinite length (no pure power of variable {v} in the initial ideal)"
            )));
        }
    }
    fn count(lead: &[Monomial], n: usize, var: usize, cur: &mut Monomial) -> i128 {
        if var == n {
            return 1;
        }
        let mut total = 0;
        loop {
            if lead.iter().any(|g| g.divides(cur)) {
                break;
            }
            total += count(lead, n, var + 1, cur);
            cur.set_exp(var, cur.exp(var) + 1);
        }
        cur.set_exp(var, 0);
        total
    }
    Ok(count(&lead, n, 0, &mut Monomial::one()))
}

/// Length of `S / Q` localized at the origin: `l(S / (Q + m^N))` once two
/// consecutive values agree (Nakayama makes the value stable from there on).
pub fn local_colength(q: &IdealHandle) -> Result<i128> {
    if q.is_homogeneous()? {
        return colength(q);
    }
    let ring = q.ring();
    let n = ring.nvars();
    let bump = |k: u32| -> Result<i128> {
        let mk = IdealHandle::from_monomials(ring, &crate::hilbert::monomials_of_degree(n, k));
        colength(&q.sum(&mk)?)
    };
    let mut k = 1u32;
    while k <= 4 * SAMUEL_CAP {
        if bump(k)? == bump(k + 1)? {
            return bump(k);
        }
        k *= 2;
    }
    Err(Error::resource("local length did not stabilize", 0, k))
}

/// `dim_k (P + Q) / Q` when `m^e P ⊆ Q`: the span of `w p` over monomials
/// `w` of degree below `e`, modulo `Q`.
pub fn subquotient_length(p: &[Polynomial], q: &IdealHandle, e: u32) -> Result<i128> {
    let Some(first) = p.first() else { return Ok(0) };
    let ring = first.ring().clone();
    let gb = q.groebner_basis(&TermOrder::Degrevlex)?;
    let mults = if e == 0 {
        Vec::new()
    } else {
        monomials_up_to(&ring, e - 1)
    };
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut ech = Echelon::new();
    let one = ring.field().one();
    for g in p {
        for w in &mults {
            let nf = gb.normal_form(&g.mul_term(w, &one))?;
            let mut row = SparseRow::new();
            for (m, c) in nf.terms() {
                let k = index.len();
                let key = *index.entry(*m).or_insert(k);
                row.insert(key, c.clone());
            }
            ech.insert(row);
        }
    }
    Ok(ech.rank() as i128)
}

/// Samuel function `k -> l(S / (J + I^{k+1}))` for `m`-primary `I`, fitted and
/// verified on a window; returns the polynomial and `e(I; S/J)`.
pub fn samuel_multiplicity(j: &IdealHandle, i: &[Polynomial]) -> Result<(NumericalPoly1, i128)> {
    let ring = j.ring();
    require_standard(ring)?;
    let ideal = IdealHandle::new(ring, i.to_vec())?;
    let deg = ring.nvars() as u32;
    let mut powers = vec![ideal.clone()];
    let mut length = |k: u32| -> Result<i128> {
        while powers.len() <= k as usize {
            let next = powers.last().unwrap().product(&ideal)?;
            powers.push(next);
        }
        local_colength(&j.sum(&powers[k as usize])?)
    };
    let mut d = 1u32;
    while d <= SAMUEL_CAP {
        let vals: Vec<i128> = (0..=deg + WINDOW)
            .map(|a| length(d + a))
            .collect::<Result<_>>()?;
        let p = NumericalPoly1::interpolate(d as i64, &vals[..=deg as usize]);
        if vals
            .iter()
            .enumerate()
            .all(|(a, v)| p.eval(d as i64 + a as i64) == *v)
        {
            let e = p.degree().map_or(0, |k| p.coefficient(k));
            return Ok((p, e));
        }
        d *= 2;
    }
    Err(Error::resource("Samuel function did not stabilize", 0, d))
}

#[cfg(test)]
mod tests;
