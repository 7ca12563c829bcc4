//! Integer-valued polynomials in the binomial basis.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `C(m, k)` for any integer `m` and `k >= 0`.
pub fn binomial(m: i64, k: u32) -> i128 {
    let mut r: i128 = 1;
    for i in 0..k as i128 {
        r = r
            .checked_mul(m as i128 - i)
            .expect("binomial coefficient overflow")
            / (i + 1);
    }
    r
}

/// `P(m) = sum_i a_i C(m, i)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NumericalPoly1 {
    coeffs: Vec<i128>,
}

impl NumericalPoly1 {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> i128 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, m: i64) -> i128 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a * binomial(m, i as u32))
            .sum()
    }

    /// Interpolates from `values[k] = P(start + k)`; the result has degree
    /// below `values.len()`.
    pub fn interpolate(start: i64, values: &[i128]) -> Self {
        let diffs = forward_differences(values);
        let mut coeffs = vec![0i128; diffs.len()];
        for (p, d) in diffs.iter().enumerate() {
            if *d == 0 {
                continue;
            }
            for (r, c) in shift_row(start, p as u32).into_iter().enumerate() {
                coeffs[r] += d * c;
            }
        }
        Self::new(coeffs)
    }
}

impl fmt::Display for NumericalPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| **a != 0)
            .map(|(i, a)| format!("{a}*C(m,{i})"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// First entries of the iterated forward-difference table.
fn forward_differences(values: &[i128]) -> Vec<i128> {
    let mut row = values.to_vec();
    let mut out = Vec::with_capacity(values.len());
    while !row.is_empty() {
        out.push(row[0]);
        row = row.windows(2).map(|w| w[1] - w[0]).collect();
    }
    out
}

/// Coefficients of `C(m - start, p)` in the basis `C(m, r)`, `r = 0..=p`,
/// by Vandermonde: `C(m - D, p) = sum_r C(-D, p - r) C(m, r)`.
fn shift_row(start: i64, p: u32) -> Vec<i128> {
    (0..=p).map(|r| binomial(-start, p - r)).collect()
}

/// `P(m, n) = sum a_{i,j} C(m, i) C(n, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NumericalPoly2 {
    coeffs: BTreeMap<(u32, u32), i128>,
}

impl NumericalPoly2 {
    pub fn new(coeffs: impl IntoIterator<Item = ((u32, u32), i128)>) -> Self {
        let mut out = Self::default();
        for (k, v) in coeffs {
            out.add(k, v);
        }
        out
    }

    pub fn zero() -> Self {
        Self::default()
    }

    fn add(&mut self, k: (u32, u32), v: i128) {
        if v == 0 {
            return;
        }
        let e = self.coeffs.entry(k).or_insert(0);
        *e += v;
        if *e == 0 {
            self.coeffs.remove(&k);
        }
    }

    pub fn coefficient(&self, i: u32, j: u32) -> i128 {
        self.coeffs.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = ((u32, u32), i128)> + '_ {
        self.coeffs.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Total degree `max(i + j)`; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|(i, j)| i + j).max()
    }

    pub fn eval(&self, m: i64, n: i64) -> i128 {
        self.coeffs
            .iter()
            .map(|((i, j), a)| a * binomial(m, *i) * binomial(n, *j))
            .sum()
    }

    /// Interpolates from `values[a][b] = P(m0 + a, n0 + b)`.
    pub fn interpolate(start: (i64, i64), values: &[Vec<i128>]) -> Self {
        // Differences along the second axis, then along the first.
        let rows: Vec<Vec<i128>> = values.iter().map(|r| forward_differences(r)).collect();
        let width = rows.first().map_or(0, |r| r.len());
        let mut out = Self::default();
        for q in 0..width {
            let col: Vec<i128> = rows.iter().map(|r| r[q]).collect();
            for (p, d) in forward_differences(&col).into_iter().enumerate() {
                if d == 0 {
                    continue;
                }
                let sp = shift_row(start.0, p as u32);
                let sq = shift_row(start.1, q as u32);
                for (r, cp) in sp.iter().enumerate() {
                    for (s, cq) in sq.iter().enumerate() {
                        out.add((r as u32, s as u32), d * cp * cq);
                    }
                }
            }
        }
        out
    }

    /// `Q(m, n) = P(m + dm, n + dn)` in the standard basis.
    pub fn shifted(&self, dm: i64, dn: i64) -> Self {
        let mut out = Self::default();
        for ((i, j), a) in &self.coeffs {
            // C(m + dm, i) = sum_r C(dm, i - r) C(m, r)
            for r in 0..=*i {
                let cr = binomial(dm, i - r);
                if cr == 0 {
                    continue;
                }
                for s in 0..=*j {
                    out.add((r, s), a * cr * binomial(dn, j - s));
                }
            }
        }
        out
    }

    /// `Δ^{(t,s)} P`, the iterated backward difference
    /// `Δ^{(1,0)} P(m, n) = P(m, n) - P(m - 1, n)`. On the basis,
    /// `Δ^{(t,s)} C(m,i) C(n,j) = C(m - t, i - t) C(n - s, j - s)`.
    pub fn difference(&self, t: i64, s: i64) -> Result<Self> {
        if t < 0 || s < 0 {
            return Err(Error::InvalidArgument(
                "difference orders must be non-negative".into(),
            ));
        }
        let (t, s) = (t as u32, s as u32);
        let lowered = Self::new(
            self.coeffs
                .iter()
                .filter(|((i, j), _)| *i >= t && *j >= s)
                .map(|((i, j), a)| ((i - t, j - s), *a)),
        );
        Ok(lowered.shifted(-(t as i64), -(s as i64)))
    }

    /// Inclusive sum transforms: along the first axis
    /// `P^{(1,0)}(m, n) = sum_{u=0}^{m} P(u, n)`, using
    /// `sum_{u=0}^{m} C(u, i) = C(m, i + 1) + C(m, i)`.
    pub fn sum_transform(&self, axes: SumAxes) -> Self {
        let mut out = self.clone();
        if matches!(axes, SumAxes::First | SumAxes::Both) {
            let mut next = Self::default();
            for ((i, j), a) in &out.coeffs {
                next.add((i + 1, *j), *a);
                next.add((*i, *j), *a);
            }
            out = next;
        }
        if matches!(axes, SumAxes::Second | SumAxes::Both) {
            let mut next = Self::default();
            for ((i, j), a) in &out.coeffs {
                next.add((*i, j + 1), *a);
                next.add((*i, *j), *a);
            }
            out = next;
        }
        out
    }
}

impl fmt::Display for NumericalPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|((i, j), a)| format!("{a}*C(m,{i})*C(n,{j})"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumAxes {
    First,
    Second,
    Both,
}

/// `(c_{0,q}, ..., c_{q,0})`: component `k` is `c_{k, q-k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityVector {
    pub level: usize,
    pub components: Vec<i128>,
}

impl MultiplicityVector {
    pub fn zero(level: usize) -> Self {
        Self {
            level,
            components: vec![0; level + 1],
        }
    }

    pub fn new(components: Vec<i128>) -> Self {
        assert!(
            !components.is_empty(),
            "a multiplicity vector has length level + 1"
        );
        Self {
            level: components.len() - 1,
            components,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| *c == 0)
    }

    pub fn sum(&self) -> i128 {
        self.components.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.level, other.level);
        Self {
            level: self.level,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scaled(&self, k: i128) -> Self {
        Self {
            level: self.level,
            components: self.components.iter().map(|a| a * k).collect(),
        }
    }

    /// Componentwise `>=`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.level == other.level
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a >= b)
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Integers that JSON consumers can read exactly: beyond `2^53` they are
/// written as strings.
pub fn json_int(v: i128) -> serde_json::Value {
    const LIMIT: i128 = 1 << 53;
    if v.abs() <= LIMIT {
        serde_json::Value::from(v as i64)
    } else {
        serde_json::Value::String(v.to_string())
    }
}

impl Serialize for MultiplicityVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<serde_json::Value> = self.components.iter().map(|c| json_int(*c)).collect();
        v.serialize(s)
    }
}

impl Serialize for NumericalPoly1 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<serde_json::Value> = self.coeffs.iter().map(|c| json_int(*c)).collect();
        v.serialize(s)
    }
}

impl Serialize for NumericalPoly2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|((i, j), a)| serde_json::json!([i, j, json_int(*a)]))
            .collect();
        v.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomials_extend_to_negative_arguments() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(-1, 3), -1);
        assert_eq!(binomial(-3, 2), 6);
        assert_eq!(binomial(7, 0), 1);
    }

    #[test]
    fn interpolation_recovers_polynomials() {
        let p = NumericalPoly1::interpolate(4, &[5, 6, 7, 8]);
        assert_eq!(p, NumericalPoly1::new(vec![1, 1]));
        let q = NumericalPoly2::interpolate(
            (3, 5),
            &[vec![24, 28, 32], vec![30, 35, 40], vec![36, 42, 48]],
        );
        // (m + 1)(n + 1)
        assert_eq!(
            q,
            NumericalPoly2::new([((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((1, 1), 1)])
        );
    }

    #[test]
    fn difference_examples() {
        let p = NumericalPoly2::new([((1, 1), 1)]);
        assert_eq!(
            p.difference(1, 1).unwrap(),
            NumericalPoly2::new([((0, 0), 1)])
        );
        let p = NumericalPoly2::new([((2, 0), 1)]);
        assert_eq!(
            p.difference(2, 0).unwrap(),
            NumericalPoly2::new([((0, 0), 1)])
        );
        assert!(p.difference(0, 1).unwrap().is_zero());
        assert!(p.difference(-1, 0).is_err());
    }

    #[test]
    fn sum_transform_examples() {
        let one = NumericalPoly2::new([((0, 0), 1)]);
        let h10 = one.sum_transform(SumAxes::First);
        assert!((0..6).all(|i| h10.eval(i, 3) == (i + 1) as i128));
        let h11 = one.sum_transform(SumAxes::Both);
        assert!((0..6).all(|i| (0..6).all(|j| h11.eval(i, j) == ((i + 1) * (j + 1)) as i128)));
        let cj = NumericalPoly2::new([((0, 1), 1)]);
        let h = cj.sum_transform(SumAxes::Both);
        assert!(
            (0..6).all(|i| (0..6).all(|j| h.eval(i, j) == (i as i128 + 1) * binomial(j + 1, 2)))
        );
    }

    fn poly2() -> impl Strategy<Value = NumericalPoly2> {
        prop::collection::vec(((0u32..4, 0u32..4), -5i128..5), 0..6).prop_map(NumericalPoly2::new)
    }

    proptest! {
        #[test]
        fn differences_compose(p in poly2(), a in 0i64..3, b in 0i64..3, c in 0i64..3, d in 0i64..3) {
            let lhs = p.difference(a, b).unwrap().difference(c, d).unwrap();
            prop_assert_eq!(lhs, p.difference(a + c, b + d).unwrap());
        }

        #[test]
        fn difference_matches_pointwise(p in poly2(), m in -4i64..6, n in -4i64..6) {
            let d = p.difference(1, 0).unwrap();
            prop_assert_eq!(d.eval(m, n), p.eval(m, n) - p.eval(m - 1, n));
            let d = p.difference(0, 1).unwrap();
            prop_assert_eq!(d.eval(m, n), p.eval(m, n) - p.eval(m, n - 1));
        }

        #[test]
        fn sum_transform_matches_pointwise(p in poly2(), m in 0i64..6, n in 0i64..6) {
            let s = p.sum_transform(SumAxes::Both);
            let direct: i128 = (0..=m).flat_map(|u| (0..=n).map(move |v| (u, v))).map(|(u, v)| p.eval(u, v)).sum();
            prop_assert_eq!(s.eval(m, n), direct);
        }

        #[test]
        fn interpolation_round_trips(p in poly2(), m0 in -3i64..5, n0 in -3i64..5) {
            let vals: Vec<Vec<i128>> = (0..5).map(|a| (0..5).map(|b| p.eval(m0 + a, n0 + b)).collect()).collect();
            prop_assert_eq!(NumericalPoly2::interpolate((m0, n0), &vals), p);
        }
    }
}
