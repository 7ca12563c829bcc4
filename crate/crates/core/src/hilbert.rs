//! Graded and bigraded Hilbert functions and polynomials, dimensions and
//! multiplicities.
//!
//! Hilbert functions are read off the initial module: per free generator, the
//! numerator of the Hilbert series of a monomial quotient is computed by pivot
//! recursion, then shifted by the generator's degree.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groebner::{IdealHandle, ModulePresentation};
use crate::linalg::{Echelon, SparseRow};
use crate::monomial::{ModuleOrder, Monomial, TermOrder};
use crate::numerical::{binomial, MultiplicityVector, NumericalPoly1, NumericalPoly2};
use crate::ring::{Degree, Ring, RingRef};

/// Laurent polynomial in `s, t` with integer coefficients.
pub type Numerator = BTreeMap<(i32, i32), i128>;

fn num_add(acc: &mut Numerator, k: (i32, i32), v: i128) {
    if v == 0 {
        return;
    }
    let e = acc.entry(k).or_insert(0);
    *e += v;
    if *e == 0 {
        acc.remove(&k);
    }
}

fn num_shift(n: &Numerator, by: (i32, i32)) -> Numerator {
    n.iter()
        .map(|(&(a, b), &v)| ((a + by.0, b + by.1), v))
        .collect()
}

/// Hilbert series `N(s, t) / ((1 - s)^nx (1 - t)^ny)`. Singly graded series
/// use the first exponent only and `ny = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub bigraded: bool,
    pub nx: usize,
    pub ny: usize,
    pub numerator: Numerator,
}

/// Number of monomials of degree `k` in `n` variables.
fn count(k: i64, n: usize) -> i128 {
    if k < 0 {
        0
    } else if n == 0 {
        (k == 0) as i128
    } else {
        binomial(k + n as i64 - 1, n as u32 - 1)
    }
}

impl HilbertSeries {
    /// `h(i, j)`; for singly graded series `j` must be zero.
    pub fn value(&self, i: i64, j: i64) -> i128 {
        self.numerator
            .iter()
            .map(|(&(a, b), &v)| v * count(i - a as i64, self.nx) * count(j - b as i64, self.ny))
            .sum()
    }

    /// The series of `M[x', y']`: multiplies by `1 / ((1-s)^ex (1-t)^ey)`.
    pub fn with_extra_variables(&self, ex: usize, ey: usize) -> Self {
        Self {
            nx: self.nx + ex,
            ny: self.ny + ey,
            ..self.clone()
        }
    }

    /// Forgets the bigrading: `N(t, t) / (1 - t)^(nx + ny)`.
    pub fn total(&self) -> Self {
        let mut numerator = Numerator::new();
        for (&(a, b), &v) in &self.numerator {
            num_add(&mut numerator, (a + b, 0), v);
        }
        Self {
            bigraded: false,
            nx: self.nx + self.ny,
            ny: 0,
            numerator,
        }
    }

    /// `(dim, Q)` with `H(t) = Q(t) / (1 - t)^dim` and `Q(1) != 0`, for the
    /// total grading. `Q` is stored with exponents starting at the lowest one.
    fn reduced(&self) -> (i64, Vec<i128>, i32) {
        let tot = self.total();
        if tot.numerator.is_empty() {
            return (-1, Vec::new(), 0);
        }
        let lo = *tot.numerator.keys().map(|(a, _)| a).min().unwrap();
        let hi = *tot.numerator.keys().map(|(a, _)| a).max().unwrap();
        let mut q: Vec<i128> = (lo..=hi)
            .map(|e| tot.numerator.get(&(e, 0)).copied().unwrap_or(0))
            .collect();
        let mut dim = tot.nx as i64;
        while q.iter().sum::<i128>() == 0 {
            // Divide by (1 - t): partial sums.
            let mut acc = 0;
            let mut out = Vec::with_capacity(q.len() - 1);
            for c in &q[..q.len() - 1] {
                acc += c;
                out.push(acc);
            }
            q = out;
            dim -= 1;
        }
        (dim, q, lo)
    }

    /// Krull dimension (affine cone convention); `-1` for the zero module.
    pub fn dimension(&self) -> i64 {
        self.reduced().0
    }

    /// `Q(1)`: the degree of the module (its length if finite).
    pub fn multiplicity(&self) -> i128 {
        self.reduced().1.iter().sum()
    }

    fn lowest(&self) -> (i64, i64) {
        let a = self
            .numerator
            .keys()
            .map(|(a, _)| *a as i64)
            .min()
            .unwrap_or(0);
        let b = self
            .numerator
            .keys()
            .map(|(_, b)| *b as i64)
            .min()
            .unwrap_or(0);
        (a, b)
    }

    /// `sum_{u <= i} h(u, j)`, `sum_{v <= j} h(i, v)` or both, by cumulative
    /// sums of values.
    pub fn summed_value(&self, i: i64, j: i64, axes: crate::numerical::SumAxes) -> i128 {
        use crate::numerical::SumAxes::*;
        let (lo_i, lo_j) = self.lowest();
        match axes {
            First => (lo_i..=i).map(|u| self.value(u, j)).sum(),
            Second => (lo_j..=j).map(|v| self.value(i, v)).sum(),
            Both => (lo_i..=i)
                .flat_map(|u| (lo_j..=j).map(move |v| (u, v)))
                .map(|(u, v)| self.value(u, v))
                .sum(),
        }
    }
}

/// Numerator of `S / (gens)` for a monomial ideal, by pivot recursion:
/// `N(I) = N(I + (p)) + T^deg(p) N(I : p)`.
pub fn monomial_numerator(gens: &[Monomial], deg: &dyn Fn(&Monomial) -> (i32, i32)) -> Numerator {
    let gens = minimal_monomials(gens);
    let mut out = Numerator::new();
    if gens.is_empty() {
        out.insert((0, 0), 1);
        return out;
    }
    if gens.iter().any(|g| g.is_one()) {
        return out;
    }
    // Pairwise coprime generators: product of (1 - T^deg g).
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        out.insert((0, 0), 1);
        for g in &gens {
            let d = deg(g);
            let mut next = out.clone();
            for (&k, &v) in &out {
                num_add(&mut next, (k.0 + d.0, k.1 + d.1), -v);
            }
            out = next;
        }
        return out;
    }
    // Pivot on the most frequent variable of a generator with two or more
    // variables: a proper divisor of that generator, so not in the ideal.
    let mixed = gens
        .iter()
        .find(|g| g.support().len() >= 2)
        .expect("not coprime");
    let var = mixed
        .support()
        .into_iter()
        .max_by_key(|&v| {
            (
                gens.iter().filter(|g| g.exp(v) > 0).count(),
                std::cmp::Reverse(v),
            )
        })
        .unwrap();
    let pivot = Monomial::var(var, mixed.exp(var));
    let mut plus = gens.clone();
    plus.push(pivot);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| g.gcd(&pivot).quotient_of(g).unwrap())
        .collect();
    let mut out = monomial_numerator(&plus, deg);
    let d = deg(&pivot);
    for (k, v) in num_shift(&monomial_numerator(&colon, deg), d) {
        num_add(&mut out, k, v);
    }
    out
}

/// Minimal generators, sorted and deduplicated.
pub fn minimal_monomials(gens: &[Monomial]) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = gens.to_vec();
    v.sort_by(|a, b| TermOrder::Degrevlex.cmp(a, b));
    v.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in v {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn grading(ring: &RingRef) -> Result<impl Fn(&Monomial) -> (i32, i32) + '_> {
    if !ring.is_standard() {
        return Err(Error::Unsupported(
            "Hilbert functions need a standard grading (all weights one)".into(),
        ));
    }
    Ok(move |m: &Monomial| {
        let d = ring.degree(m);
        (d[0], d[1])
    })
}

/// Hilbert series of a homogeneous presentation.
pub fn hilbert_series(m: &ModulePresentation) -> Result<HilbertSeries> {
    let ring = m.ring();
    if !m.is_homogeneous() {
        return Err(Error::NotHomogeneous("module presentation".into()));
    }
    let deg = grading(ring)?;
    let gb = m.groebner_basis(&ModuleOrder::pot(TermOrder::Degrevlex))?;
    let mut numerator = Numerator::new();
    for (pos, monos) in gb.initial_by_position().into_iter().enumerate() {
        let s = m.shifts()[pos];
        for (k, v) in num_shift(&monomial_numerator(&monos, &deg), (s[0], s[1])) {
            num_add(&mut numerator, k, v);
        }
    }
    let bigraded = ring.is_bigraded();
    let (nx, ny) = if bigraded {
        (ring.x_block().len(), ring.y_block().len())
    } else {
        (ring.nvars(), 0)
    };
    Ok(HilbertSeries {
        bigraded,
        nx,
        ny,
        numerator,
    })
}

pub fn ideal_series(i: &IdealHandle) -> Result<HilbertSeries> {
    if !i.is_homogeneous()? {
        return Err(Error::NotHomogeneous("ideal".into()));
    }
    hilbert_series(&ModulePresentation::cyclic(&i.reduced()?))
}

/// Degree of a graded piece: `(d, 0)` for singly graded rings.
pub fn hilbert_value(m: &ModulePresentation, at: Degree) -> Result<i128> {
    let s = hilbert_series(m)?;
    if !s.bigraded && at[1] != 0 {
        return Err(Error::NotBigraded);
    }
    Ok(s.value(at[0] as i64, at[1] as i64))
}

/// Records how a Hilbert polynomial was certified.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct StabilizationCertificate {
    /// Lower corner of the fitted region.
    pub threshold: (i64, i64),
    /// Extra verification points per axis.
    pub window: u32,
    /// Every point checked against the polynomial, with its value.
    pub verified: Vec<((i64, i64), String)>,
}

pub const WINDOW: u32 = 3;
const THRESHOLD_CAP: i64 = 60;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HilbertPolynomial {
    Graded(NumericalPoly1),
    Bigraded(NumericalPoly2),
}

fn initial_threshold(m: &ModulePresentation) -> i64 {
    let top = m
        .relations()
        .iter()
        .filter_map(|c| m.column_degree(c).flatten())
        .map(|d| (d[0] + d[1]) as i64)
        .chain(m.shifts().iter().map(|d| (d[0] + d[1]) as i64))
        .max()
        .unwrap_or(0);
    top.max(0) + m.ring().nvars() as i64 + 2
}

/// Fits a polynomial to the series on `[D, D + deg + W]` (per axis) and
/// verifies every point of that window, doubling `D` on failure.
pub fn series_polynomial(
    s: &HilbertSeries,
    start: i64,
) -> Result<(HilbertPolynomial, StabilizationCertificate)> {
    let mut d = start.max(1);
    loop {
        if d > THRESHOLD_CAP {
            return Err(Error::resource(
                "Hilbert polynomial did not stabilize",
                0,
                d as u32,
            ));
        }
        let w = WINDOW as i64;
        if s.bigraded {
            let (bx, by) = (s.nx as i64, s.ny as i64);
            let vals: Vec<Vec<i128>> = (0..bx)
                .map(|a| (0..by).map(|b| s.value(d + a, d + b)).collect())
                .collect();
            let p = NumericalPoly2::interpolate((d, d), &vals);
            let mut verified = Vec::new();
            let mut ok = true;
            for a in 0..bx + w {
                for b in 0..by + w {
                    let v = s.value(d + a, d + b);
                    if p.eval(d + a, d + b) != v {
                        ok = false;
                    }
                    if a >= bx || b >= by {
                        verified.push(((d + a, d + b), v.to_string()));
                    }
                }
            }
            if ok {
                let cert = StabilizationCertificate {
                    threshold: (d, d),
                    window: WINDOW,
                    verified,
                };
                return Ok((HilbertPolynomial::Bigraded(p), cert));
            }
        } else {
            let n = s.nx as i64;
            let vals: Vec<i128> = (0..n.max(1)).map(|a| s.value(d + a, 0)).collect();
            let p = NumericalPoly1::interpolate(d, &vals);
            let mut verified = Vec::new();
            let mut ok = true;
            for a in 0..n.max(1) + w {
                let v = s.value(d + a, 0);
                if p.eval(d + a) != v {
                    ok = false;
                }
                if a >= n.max(1) {
                    verified.push(((d + a, 0), v.to_string()));
                }
            }
            if ok {
                let cert = StabilizationCertificate {
                    threshold: (d, 0),
                    window: WINDOW,
                    verified,
                };
                return Ok((HilbertPolynomial::Graded(p), cert));
            }
        }
        d *= 2;
    }
}

/// Hilbert polynomial `P_M` with its certificate.
pub fn hilbert_polynomial(
    m: &ModulePresentation,
) -> Result<(HilbertPolynomial, StabilizationCertificate)> {
    let s = hilbert_series(m)?;
    series_polynomial(&s, initial_threshold(m))
}

/// `P^{(1,1)}_M`, the polynomial of the double sum transform, through the
/// series of `M[x', y']`.
pub fn p11(m: &ModulePresentation) -> Result<(NumericalPoly2, StabilizationCertificate)> {
    let s = hilbert_series(m)?;
    if !s.bigraded {
        return Err(Error::NotBigraded);
    }
    match series_polynomial(&s.with_extra_variables(1, 1), initial_threshold(m))? {
        (HilbertPolynomial::Bigraded(p), c) => Ok((p, c)),
        _ => unreachable!(),
    }
}

/// Krull dimension of a monomial quotient `S / (gens)`: the largest set of
/// variables containing no generator's support.
pub fn monomial_dimension(gens: &[Monomial], nvars: usize) -> i64 {
    if gens.iter().any(|g| g.is_one()) {
        return -1;
    }
    let supports: Vec<u32> = gens
        .iter()
        .map(|g| g.support().iter().fold(0u32, |acc, &v| acc | 1 << v))
        .collect();
    (0u32..1 << nvars)
        .filter(|z| supports.iter().all(|s| s & !z != 0))
        .map(|z| z.count_ones() as i64)
        .max()
        .unwrap_or(-1)
}

/// Krull dimension from the staircase of the initial module; `-1` for zero.
/// Works for inhomogeneous presentations too.
pub fn dimension(m: &ModulePresentation) -> Result<i64> {
    let gb = m.groebner_basis(&ModuleOrder::pot(TermOrder::Degrevlex))?;
    Ok(gb
        .initial_by_position()
        .iter()
        .map(|monos| monomial_dimension(monos, m.ring().nvars()))
        .max()
        .unwrap_or(-1))
}

pub fn ideal_dimension(i: &IdealHandle) -> Result<i64> {
    dimension(&ModulePresentation::cyclic(i))
}

/// `dim A / (I : A_+^inf)`, `-1` when that quotient vanishes.
pub fn relevant_dimension(i: &IdealHandle) -> Result<i64> {
    let ring = i.ring();
    if !ring.is_bigraded() {
        return Err(Error::NotBigraded);
    }
    let plus = irrelevant_ideal(ring);
    let sat = i.saturate_ideal(&plus)?;
    ideal_dimension(&sat)
}

/// `A_+ = (x_i y_j)`.
pub fn irrelevant_ideal(ring: &RingRef) -> IdealHandle {
    let mut monos = Vec::new();
    for &x in &ring.x_block() {
        for &y in &ring.y_block() {
            monos.push(Monomial::var(x, 1).mul(&Monomial::var(y, 1)));
        }
    }
    IdealHandle::from_monomials(ring, &monos)
}

/// `ee_q(M)`: when `dim M = q`, the coefficients `c_{k, q-k}` of `P^{(1,1)}`;
/// otherwise zero.
pub fn ee_vector(m: &ModulePresentation, q: usize) -> Result<MultiplicityVector> {
    let s = hilbert_series(m)?;
    if !s.bigraded {
        return Err(Error::NotBigraded);
    }
    if s.dimension() != q as i64 {
        return Ok(MultiplicityVector::zero(q));
    }
    let (p, _) = series_polynomial(&s.with_extra_variables(1, 1), initial_threshold(m))?;
    let HilbertPolynomial::Bigraded(p) = p else {
        unreachable!()
    };
    if p.degree() != Some(q as u32) {
        return Err(Error::InternalConsistency(format!(
            "P11 has degree {:?} but the module has dimension {q}",
            p.degree()
        )));
    }
    Ok(MultiplicityVector::new(
        (0..=q as u32)
            .map(|k| p.coefficient(k, q as u32 - k))
            .collect(),
    ))
}

/// `e_i(M)` for a graded module: its degree when `i = dim M`, else zero.
pub fn classical_multiplicity(m: &ModulePresentation, i: usize) -> Result<i128> {
    let s = hilbert_series(m)?.total();
    Ok(if s.dimension() == i as i64 {
        s.multiplicity()
    } else {
        0
    })
}

/// `l(N / m^{k+1} N)` by linear algebra on the truncation `F / m^{k+1} F`.
pub fn hilbert_samuel(n: &ModulePresentation, k: u32) -> Result<i128> {
    let ring = n.ring();
    let monos = monomials_up_to(ring, k);
    let index: BTreeMap<(usize, Monomial), usize> = (0..n.rank())
        .flat_map(|p| monos.iter().map(move |m| (p, *m)))
        .enumerate()
        .map(|(i, key)| (key, i))
        .collect();
    let mut ech = Echelon::new();
    for col in n.relations() {
        let low = col.iter().filter_map(|p| p.order()).min().unwrap_or(0);
        for m in monos.iter().filter(|m| m.degree() + low <= k) {
            let mut row = SparseRow::new();
            for (pos, p) in col.iter().enumerate() {
                for (t, c) in p.terms() {
                    let prod = t.mul(m);
                    if prod.degree() <= k {
                        let key = index[&(pos, prod)];
                        let e = row.entry(key).or_insert_with(|| c.field().zero());
                        *e = e.add(c);
                    }
                }
            }
            row.retain(|_, v| !v.is_zero());
            ech.insert(row);
        }
    }
    Ok((index.len() - ech.rank()) as i128)
}

/// Monomials of standard degree at most `k`.
pub fn monomials_up_to(ring: &Ring, k: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=k {
        out.extend(monomials_of_degree(ring.nvars(), d));
    }
    out
}

/// Monomials of standard degree exactly `d` in the first `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, var: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if var + 1 == n {
            cur.set_exp(var, left);
            out.push(*cur);
            cur.set_exp(var, 0);
            return;
        }
        for e in (0..=left).rev() {
            cur.set_exp(var, e);
            rec(n, var + 1, left - e, cur, out);
        }
        cur.set_exp(var, 0);
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    rec(n, 0, d, &mut Monomial::one(), &mut out);
    out
}

/// Samuel polynomial `k -> l(N / m^{k+1} N)` fitted above `start` and
/// verified on a window, with its multiplicity (leading binomial coefficient).
pub fn samuel_polynomial(n: &ModulePresentation, start: u32) -> Result<(NumericalPoly1, i128)> {
    let deg = n.ring().nvars() as u32;
    let mut d = start;
    while d as i64 <= THRESHOLD_CAP {
        let vals: Vec<i128> = (0..=deg + WINDOW)
            .map(|a| hilbert_samuel(n, d + a))
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
        d = (d * 2).max(1);
    }
    Err(Error::resource("Samuel function did not stabilize", 0, d))
}
