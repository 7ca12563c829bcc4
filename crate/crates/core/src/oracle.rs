//! Independent brute-force checks. Slow, simple, and never routed through the
//! staircase or Gröbner shortcuts they are meant to audit.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groebner::ModulePresentation;
use crate::hilbert::monomials_of_degree;
use crate::linalg::{Echelon, SparseRow};
use crate::monomial::Monomial;
use crate::ring::{Degree, Ring};

/// Monomials of a given (bi)degree.
fn monomials_in_degree(ring: &Ring, d: Degree) -> Vec<Monomial> {
    if d[0] < 0 || d[1] < 0 {
        return Vec::new();
    }
    if !ring.is_bigraded() {
        if !ring.is_standard() {
            return Vec::new();
        }
        return monomials_of_degree(ring.nvars(), d[0] as u32);
    }
    let xs = ring.x_block();
    let ys = ring.y_block();
    let mut out = Vec::new();
    for a in monomials_of_degree(xs.len(), d[0] as u32) {
        for b in monomials_of_degree(ys.len(), d[1] as u32) {
            let mut m = Monomial::one();
            for (k, &v) in xs.iter().enumerate() {
                m.set_exp(v, a.exp(k));
            }
            for (k, &v) in ys.iter().enumerate() {
                m.set_exp(v, b.exp(k));
            }
            out.push(m);
        }
    }
    out
}

/// `dim_k M_d` as `dim F_d - rank(relations in degree d)`, spanning the
/// relation module in degree `d` by monomial multiples of the columns.
pub fn hilbert_value_brute(m: &ModulePresentation, d: Degree) -> Result<i128> {
    let ring = m.ring();
    if !ring.is_standard() {
        return Err(Error::Unsupported(
            "brute-force Hilbert values need a standard grading".into(),
        ));
    }
    let mut index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    for (p, s) in m.shifts().iter().enumerate() {
        for mono in monomials_in_degree(ring, [d[0] - s[0], d[1] - s[1]]) {
            let k = index.len();
            index.insert((p, mono), k);
        }
    }
    let mut ech = Echelon::new();
    for col in m.relations() {
        let Some(Some(deg)) = m.column_degree(col) else {
            return Err(Error::NotHomogeneous("relation column".into()));
        };
        for mult in monomials_in_degree(ring, [d[0] - deg[0], d[1] - deg[1]]) {
            let mut row = SparseRow::new();
            for (pos, p) in col.iter().enumerate() {
                for (t, c) in p.terms() {
                    let key = index[&(pos, t.mul(&mult))];
                    let e = row.entry(key).or_insert_with(|| c.field().zero());
                    *e = e.add(c);
                }
            }
            row.retain(|_, v| !v.is_zero());
            ech.insert(row);
        }
    }
    Ok((index.len() - ech.rank()) as i128)
}

/// Every exponent vector in `[0, b]^n`.
pub fn exponent_box(n: usize, b: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for v in 0..n {
        let mut next = Vec::with_capacity(out.len() * (b as usize + 1));
        for m in &out {
            for e in 0..=b {
                let mut k = *m;
                k.set_exp(v, e);
                next.push(k);
            }
        }
        out = next;
    }
    out
}

fn in_monomial_ideal(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// Checks on the box `[0, b]^n` that the union of `u * k[Z]` is exactly the
/// set of standard monomials. Returns the first offending monomial.
pub fn pairs_cover_box(
    pairs: &[crate::combinatorics::StandardPair],
    gens: &[Monomial],
    n: usize,
    b: u32,
) -> std::result::Result<(), Monomial> {
    for m in exponent_box(n, b) {
        let standard = !in_monomial_ideal(gens, &m);
        let covered = pairs.iter().any(|p| p.covers(&m));
        if standard != covered {
            return Err(m);
        }
    }
    Ok(())
}

/// Standard pairs straight from the definition: admissible pairs with `u` in
/// the box, admissibility tested on every monomial of `u * k[Z]` in a box of
/// side `b`, then the maximal ones under `(u, Z) <= (v, W)` iff `v | u`,
/// `u / v in k[W]` and `Z ⊆ W`. Exponential; meant for three variables or so.
pub fn standard_pairs_brute(gens: &[Monomial], n: usize, b: u32) -> Vec<(Monomial, Vec<usize>)> {
    let cube = exponent_box(n, b);
    let mut adm: Vec<(Monomial, Vec<usize>)> = Vec::new();
    for zmask in 0u32..1 << n {
        let z: Vec<usize> = (0..n).filter(|v| zmask & (1 << v) != 0).collect();
        for u in &cube {
            if z.iter().any(|&v| u.exp(v) != 0) {
                continue;
            }
            let ok = cube.iter().all(|w| {
                if (0..n).any(|v| !z.contains(&v) && w.exp(v) != 0) {
                    return true;
                }
                !in_monomial_ideal(gens, &u.mul(w))
            });
            if ok {
                adm.push((*u, z.clone()));
            }
        }
    }
    let below = |(u, z): &(Monomial, Vec<usize>), (v, w): &(Monomial, Vec<usize>)| {
        v.quotient_of(u)
            .is_some_and(|q| q.support().iter().all(|x| w.contains(x)))
            && z.iter().all(|x| w.contains(x))
    };
    adm.iter()
        .filter(|p| !adm.iter().any(|q| q != *p && below(p, q)))
        .cloned()
        .collect()
}
