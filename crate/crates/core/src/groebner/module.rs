//! Finitely presented modules `F / im(relations)` and their Gröbner bases.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{ModuleOrder, Monomial, TermOrder};
use crate::poly::Polynomial;
use crate::ring::{Degree, RingRef};

use super::engine::{groebner, reduce, Vector};
use super::IdealHandle;

/// Cokernel of a relation matrix. Relations are stored as columns of length
/// `rank`; `shifts[k]` is the degree of the `k`-th free generator.
#[derive(Clone, PartialEq, Eq)]
pub struct ModulePresentation {
    ring: RingRef,
    rank: usize,
    shifts: Vec<Degree>,
    relations: Vec<Vec<Polynomial>>,
}

impl fmt::Debug for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModulePresentation")
            .field("rank", &self.rank)
            .field("shifts", &self.shifts)
            .field("relations", &self.relations)
            .finish()
    }
}

impl ModulePresentation {
    pub fn new(
        ring: &RingRef,
        rank: usize,
        shifts: Vec<Degree>,
        relations: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        if shifts.len() != rank {
            return Err(Error::InvalidArgument(
                "one shift per free generator".into(),
            ));
        }
        for col in &relations {
            if col.len() != rank {
                return Err(Error::InvalidArgument(format!(
                    "relation of length {} in a free module of rank {rank}",
                    col.len()
                )));
            }
            if col.iter().any(|p| !p.ring().same_as(ring)) {
                return Err(Error::RingMismatch);
            }
        }
        let relations = relations
            .into_iter()
            .filter(|c| c.iter().any(|p| !p.is_zero()))
            .collect();
        Ok(Self {
            ring: ring.clone(),
            rank,
            shifts,
            relations,
        })
    }

    pub fn free(ring: &RingRef, shifts: Vec<Degree>) -> Self {
        let rank = shifts.len();
        Self::new(ring, rank, shifts, Vec::new()).unwrap()
    }

    /// `S / I` with its generator in degree zero.
    pub fn cyclic(ideal: &IdealHandle) -> Self {
        let relations = ideal.gens().iter().map(|g| vec![g.clone()]).collect();
        Self::new(ideal.ring(), 1, vec![[0, 0]], relations).unwrap()
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn shifts(&self) -> &[Degree] {
        &self.shifts
    }

    pub fn relations(&self) -> &[Vec<Polynomial>] {
        &self.relations
    }

    /// Degree of a column, if it is homogeneous with respect to the shifts.
    pub fn column_degree(&self, col: &[Polynomial]) -> Option<Option<Degree>> {
        column_degree(col, &self.shifts)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.relations
            .iter()
            .all(|c| self.column_degree(c).is_some())
    }

    /// Same presentation read in another ring with the same variables.
    pub fn regraded(&self, ring: &RingRef, shift: impl Fn(Degree) -> Degree) -> Self {
        Self {
            ring: ring.clone(),
            rank: self.rank,
            shifts: self.shifts.iter().map(|&d| shift(d)).collect(),
            relations: self
                .relations
                .iter()
                .map(|c| c.iter().map(|p| p.embed(ring)).collect())
                .collect(),
        }
    }

    pub fn groebner_basis(&self, ord: &ModuleOrder) -> Result<ModuleBasis> {
        module_groebner_basis(self, ord)
    }

    /// True when the presented module is zero.
    pub fn is_zero_module(&self) -> Result<bool> {
        let gb = self.groebner_basis(&ModuleOrder::pot(TermOrder::Degrevlex))?;
        let mut hit = vec![false; self.rank];
        for (pos, m) in gb.leading_terms() {
            if m.is_one() {
                hit[pos] = true;
            }
        }
        Ok(hit.into_iter().all(|h| h))
    }

    pub fn direct_sum(&self, other: &ModulePresentation) -> Result<Self> {
        if !self.ring.same_as(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let rank = self.rank + other.rank;
        let mut shifts = self.shifts.clone();
        shifts.extend_from_slice(&other.shifts);
        let zero = Polynomial::zero(&self.ring);
        let mut relations = Vec::with_capacity(self.relations.len() + other.relations.len());
        for c in &self.relations {
            let mut col = c.clone();
            col.resize(rank, zero.clone());
            relations.push(col);
        }
        for c in &other.relations {
            let mut col = vec![zero.clone(); self.rank];
            col.extend(c.iter().cloned());
            relations.push(col);
        }
        Self::new(&self.ring, rank, shifts, relations)
    }

    /// Removes relations with a unit entry together with the generator they
    /// eliminate. Homogeneous presentations come out minimal in that respect.
    pub fn pruned(&self) -> Self {
        let mut cols = self.relations.clone();
        let mut shifts = self.shifts.clone();
        while let Some((c, r)) = find_unit(&cols) {
            cols = eliminate_unit(&cols, c, r);
            shifts.remove(r);
        }
        Self::new(&self.ring, shifts.len(), shifts, cols).unwrap()
    }
}

/// Degree of a column given generator shifts: `None` if inhomogeneous,
/// `Some(None)` for the zero column.
pub(crate) fn column_degree(col: &[Polynomial], shifts: &[Degree]) -> Option<Option<Degree>> {
    let mut found: Option<Degree> = None;
    for (p, s) in col.iter().zip(shifts) {
        match p.homogeneous_degree()? {
            None => {}
            Some(d) => {
                let d = [d[0] + s[0], d[1] + s[1]];
                match found {
                    None => found = Some(d),
                    Some(e) if e != d => return None,
                    _ => {}
                }
            }
        }
    }
    Some(found)
}

pub(crate) fn is_unit_entry(p: &Polynomial) -> bool {
    !p.is_zero() && p.is_constant()
}

/// First unit entry `(column, row)`.
pub(crate) fn find_unit(cols: &[Vec<Polynomial>]) -> Option<(usize, usize)> {
    for (c, col) in cols.iter().enumerate() {
        if let Some(r) = col.iter().position(is_unit_entry) {
            return Some((c, r));
        }
    }
    None
}

/// Column operations clearing row `r` with the unit in column `c`, then
/// dropping that row and column.
pub(crate) fn eliminate_unit(cols: &[Vec<Polynomial>], c: usize, r: usize) -> Vec<Vec<Polynomial>> {
    let pivot = &cols[c];
    let u_inv = pivot[r].terms().next().unwrap().1.inv();
    let mut out = Vec::with_capacity(cols.len().saturating_sub(1));
    for (k, col) in cols.iter().enumerate() {
        if k == c {
            continue;
        }
        let factor = col[r].scale(&u_inv);
        let mut new_col = Vec::with_capacity(col.len() - 1);
        for (row, entry) in col.iter().enumerate() {
            if row == r {
                continue;
            }
            if factor.is_zero() {
                new_col.push(entry.clone());
            } else {
                new_col.push(entry - &(&factor * &pivot[row]));
            }
        }
        out.push(new_col);
    }
    out
}

/// A reduced Gröbner basis of a submodule of `S^rank`.
#[derive(Clone, Debug)]
pub struct ModuleBasis {
    ring: RingRef,
    rank: usize,
    order: ModuleOrder,
    vectors: Vec<Vector>,
}

impl ModuleBasis {
    pub(crate) fn from_vectors(
        ring: &RingRef,
        rank: usize,
        order: ModuleOrder,
        vectors: Vec<Vector>,
    ) -> Self {
        Self {
            ring: ring.clone(),
            rank,
            order,
            vectors,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub(crate) fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        self.vectors
            .iter()
            .map(|v| v.to_columns(&self.ring, self.rank))
            .collect()
    }

    /// `(position, monomial)` of every leading term.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.vectors
            .iter()
            .map(|v| (v.lead().pos, v.lead().mono))
            .collect()
    }

    /// Leading monomials grouped by position: the initial module, one
    /// monomial ideal per free generator.
    pub fn initial_by_position(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.rank];
        for (p, m) in self.leading_terms() {
            out[p].push(m);
        }
        out
    }

    pub fn normal_form(&self, col: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if col.len() != self.rank {
            return Err(Error::InvalidArgument(
                "column length differs from rank".into(),
            ));
        }
        let v = Vector::from_columns(col, &self.order);
        let refs: Vec<&Vector> = self.vectors.iter().collect();
        Ok(reduce(&v, &refs, &self.order).to_columns(&self.ring, self.rank))
    }

    pub fn contains(&self, col: &[Polynomial]) -> Result<bool> {
        Ok(self.normal_form(col)?.iter().all(|p| p.is_zero()))
    }
}

/// Reduced Gröbner basis of the relation module of `m`.
pub fn module_groebner_basis(m: &ModulePresentation, ord: &ModuleOrder) -> Result<ModuleBasis> {
    let vecs: Vec<Vector> = m
        .relations
        .iter()
        .map(|c| Vector::from_columns(c, ord))
        .collect();
    let basis = groebner(vecs, ord, m.rank == 1)?;
    Ok(ModuleBasis::from_vectors(
        &m.ring,
        m.rank,
        ord.clone(),
        basis,
    ))
}

/// Generators of `{a : sum_j a_j cols[j] = 0}` where the columns have length
/// `rank`. Computed from a position-over-term basis of the graph module.
pub(crate) fn kernel(
    ring: &RingRef,
    rank: usize,
    cols: &[Vec<Polynomial>],
) -> Result<Vec<Vec<Polynomial>>> {
    let k = cols.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    let ord = ModuleOrder::pot(TermOrder::Degrevlex);
    let one = ring.field().one();
    let gens: Vec<Vector> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut entries = c.clone();
            entries.resize(rank + k, Polynomial::zero(ring));
            entries[rank + j] = Polynomial::constant(ring, one.clone());
            Vector::from_columns(&entries, &ord)
        })
        .collect();
    let basis = groebner(gens, &ord, false)?;
    Ok(basis
        .into_iter()
        .filter(|v| v.lead().pos >= rank)
        .map(|v| v.to_columns(ring, rank + k).split_off(rank))
        .collect())
}
