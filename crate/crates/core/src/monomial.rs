//! Dense exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

/// Hard cap on the number of ring variables, auxiliary variables included.
pub const MAX_VARS: usize = 12;

/// A monomial as a dense exponent vector. Positions beyond the ring's variable
/// count are always zero, so monomials of one ring compare and hash consistently.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many exponents");
        let mut m = Self::default();
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
        }
        m
    }

    pub fn var(index: usize, power: u32) -> Self {
        let mut m = Self::default();
        m.exps[index] = u16::try_from(power).expect("exponent overflow");
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn set_exp(&mut self, i: usize, e: u32) {
        self.exps[i] = u16::try_from(e).expect("exponent overflow");
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Total exponent over a set of variables.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&v| self.exps[v] as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        out
    }

    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        let mut out = *other;
        for (o, s) in out.exps.iter_mut().zip(self.exps.iter()) {
            *o = o.checked_sub(*s)?;
        }
        Some(out)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).max(*b);
        }
        out
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).min(*b);
        }
        out
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..MAX_VARS).filter(|&i| self.exps[i] > 0).collect()
    }

    /// Sets the exponents of the given variables to zero.
    pub fn without(&self, vars: &[usize]) -> Self {
        let mut out = *self;
        for &v in vars {
            out.exps[v] = 0;
        }
        out
    }

    /// Reindexes exponents: `map[i]` is the new position of variable `i`.
    pub fn remap(&self, map: &[usize]) -> Self {
        let mut out = Self::default();
        for (i, &j) in map.iter().enumerate() {
            out.exps[j] = self.exps[i];
        }
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// A global monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TermOrder {
    Degrevlex,
    Lex,
    /// Weighted degree first, ties broken by reverse lexicographic comparison.
    WeightedDegrevlex(Vec<u32>),
    /// Degree in the `block` variables first, then the inner order. An
    /// elimination order for `block`.
    Block {
        block: Vec<usize>,
        inner: Box<TermOrder>,
    },
    /// Successive integer weight vectors, ties broken by degrevlex. The first
    /// row must be strictly positive so the order stays global.
    WeightMatrix(Vec<Vec<i64>>),
}

impl TermOrder {
    pub fn elimination(block: Vec<usize>) -> Self {
        TermOrder::Block {
            block,
            inner: Box::new(TermOrder::Degrevlex),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Degrevlex => degrevlex(a, b),
            TermOrder::Lex => a.exps.cmp(&b.exps),
            TermOrder::WeightedDegrevlex(w) => {
                let wa: u64 = w
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| x as u64 * a.exps[i] as u64)
                    .sum();
                let wb: u64 = w
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| x as u64 * b.exps[i] as u64)
                    .sum();
                wa.cmp(&wb).then_with(|| revlex(a, b))
            }
            TermOrder::Block { block, inner } => a
                .degree_in(block)
                .cmp(&b.degree_in(block))
                .then_with(|| revlex_on(a, b, block))
                .then_with(|| inner.cmp(a, b)),
            TermOrder::WeightMatrix(rows) => {
                for row in rows {
                    let wa: i64 = row
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| x * a.exps[i] as i64)
                        .sum();
                    let wb: i64 = row
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| x * b.exps[i] as i64)
                        .sum();
                    match wa.cmp(&wb) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                degrevlex(a, b)
            }
        }
    }

    /// True when comparisons start with the standard total degree.
    pub fn is_degree_compatible(&self) -> bool {
        match self {
            TermOrder::Degrevlex => true,
            TermOrder::WeightedDegrevlex(w) => w.iter().all(|&x| x == 1),
            TermOrder::WeightMatrix(rows) => {
                rows.first().is_some_and(|r| r.iter().all(|&x| x == 1))
            }
            _ => false,
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Degrevlex => write!(f, "degrevlex"),
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::WeightedDegrevlex(w) => write!(f, "wdegrevlex{w:?}"),
            TermOrder::Block { block, inner } => write!(f, "block{block:?}({inner})"),
            TermOrder::WeightMatrix(rows) => write!(f, "matrix{rows:?}"),
        }
    }
}

#[inline]
fn degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| revlex(a, b))
}

/// Reverse lexicographic tie-break: smaller exponent in the last differing
/// variable wins.
#[inline]
fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for i in (0..MAX_VARS).rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

fn revlex_on(a: &Monomial, b: &Monomial, vars: &[usize]) -> Ordering {
    let mut sorted = vars.to_vec();
    sorted.sort_unstable();
    for &i in sorted.iter().rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

/// How free-module positions interleave with the term order. Lower positions
/// are larger.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PositionRule {
    /// Position over term.
    Pot,
    /// Term over position.
    Top,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub term: TermOrder,
    pub position: PositionRule,
    schreyer: Option<Arc<SchreyerFrame>>,
}

/// Induced order on a free module `F'` mapping to `F`: `m e_i` is compared
/// through the leading term of `m * g_i` in `F`, ties going to the lower index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct SchreyerFrame {
    base: ModuleOrder,
    leads: Vec<(usize, Monomial)>,
}

impl ModuleOrder {
    pub fn new(term: TermOrder, position: PositionRule) -> Self {
        Self {
            term,
            position,
            schreyer: None,
        }
    }

    pub fn pot(term: TermOrder) -> Self {
        Self::new(term, PositionRule::Pot)
    }

    pub fn top(term: TermOrder) -> Self {
        Self::new(term, PositionRule::Top)
    }

    /// Schreyer order induced by generators with the given leading terms
    /// `(position, monomial)` in `self`.
    pub fn schreyer(&self, leads: Vec<(usize, Monomial)>) -> Self {
        Self {
            term: self.term.clone(),
            position: self.position,
            schreyer: Some(Arc::new(SchreyerFrame {
                base: self.clone(),
                leads,
            })),
        }
    }

    #[inline]
    pub fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        if let Some(frame) = &self.schreyer {
            let (pa, ma) = frame.leads[a.0];
            let (pb, mb) = frame.leads[b.0];
            return frame
                .base
                .cmp((pa, &a.1.mul(&ma)), (pb, &b.1.mul(&mb)))
                .then_with(|| b.0.cmp(&a.0));
        }
        match self.position {
            PositionRule::Pot => b.0.cmp(&a.0).then_with(|| self.term.cmp(a.1, b.1)),
            PositionRule::Top => self.term.cmp(a.1, b.1).then_with(|| b.0.cmp(&a.0)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_breaks_ties_reverse_lexicographically() {
        // x^2 y > x y^2 in degrevlex with x > y
        assert_eq!(
            TermOrder::Degrevlex.cmp(&m(&[2, 1]), &m(&[1, 2])),
            Ordering::Greater
        );
        // x y > z^2? same degree, z exponent smaller wins
        assert_eq!(
            TermOrder::Degrevlex.cmp(&m(&[1, 1, 0]), &m(&[0, 0, 2])),
            Ordering::Greater
        );
    }

    #[test]
    fn lex_prefers_first_variable() {
        assert_eq!(
            TermOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 3])),
            Ordering::Greater
        );
    }

    #[test]
    fn block_order_eliminates() {
        let ord = TermOrder::elimination(vec![2]);
        assert_eq!(ord.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
    }

    fn orders() -> Vec<TermOrder> {
        vec![
            TermOrder::Degrevlex,
            TermOrder::Lex,
            TermOrder::WeightedDegrevlex(vec![3, 1, 2]),
            TermOrder::elimination(vec![1]),
            TermOrder::WeightMatrix(vec![vec![1, 1, 1], vec![0, 0, 1]]),
        ]
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative_and_global(
            a in prop::collection::vec(0u32..5, 3),
            b in prop::collection::vec(0u32..5, 3),
            w in prop::collection::vec(0u32..5, 3),
        ) {
            let (a, b, w) = (m(&a), m(&b), m(&w));
            for ord in orders() {
                let before = ord.cmp(&a, &b);
                prop_assert_eq!(ord.cmp(&a.mul(&w), &b.mul(&w)), before);
                prop_assert_ne!(ord.cmp(&Monomial::one(), &a), Ordering::Greater);
                prop_assert_eq!(ord.cmp(&b, &a), before.reverse());
            }
        }
    }
}
