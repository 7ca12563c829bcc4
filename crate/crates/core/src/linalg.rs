//! Sparse row echelon forms over the coefficient field.

use std::collections::BTreeMap;

use crate::field::FieldElement;

pub type SparseRow = BTreeMap<usize, FieldElement>;

/// Incrementally built, fully reduced echelon basis of a row space.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivots.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let cols: Vec<usize> = row.keys().copied().collect();
        for c in cols {
            let Some(coef) = row.get(&c).cloned() else {
                continue;
            };
            if let Some(p) = self.pivots.get(&c) {
                for (k, v) in p {
                    let e = row.entry(*k).or_insert_with(|| v.field().zero());
                    *e = e.sub(&coef.mul(v));
                    if e.is_zero() {
                        row.remove(k);
                    }
                }
            }
        }
        row
    }

    /// Adds a row; returns true if it enlarged the span.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = self.reduce(row);
        row.retain(|_, v| !v.is_zero());
        let Some((&lead, c)) = row.iter().next() else {
            return false;
        };
        let inv = c.inv();
        for v in row.values_mut() {
            *v = v.mul(&inv);
        }
        // Keep earlier pivots reduced against the new one.
        for p in self.pivots.values_mut() {
            if let Some(coef) = p.get(&lead).cloned() {
                for (k, v) in &row {
                    let e = p.entry(*k).or_insert_with(|| v.field().zero());
                    *e = e.sub(&coef.mul(v));
                    if e.is_zero() {
                        p.remove(k);
                    }
                }
            }
        }
        self.pivots.insert(lead, row);
        true
    }
}

/// Rank of a set of sparse rows.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn row(vals: &[i64]) -> SparseRow {
        vals.iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(i, v)| (i, Field::Rational.from_i64(*v)))
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank([row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1])]), 2);
        assert_eq!(rank([row(&[1, 0]), row(&[0, 1]), row(&[1, 1])]), 2);
        assert_eq!(rank(Vec::<SparseRow>::new()), 0);
        let p = Field::prime(5).unwrap();
        let r = |v: &[i64]| -> SparseRow {
            v.iter()
                .enumerate()
                .map(|(i, x)| (i, p.from_i64(*x)))
                .collect()
        };
        // (1, 2) and (3, 1) are dependent mod 5.
        assert_eq!(rank([r(&[1, 2]), r(&[3, 1])]), 1);
    }
}
