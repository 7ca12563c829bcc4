//! Sparse multivariate polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::{Monomial, TermOrder};
use crate::ring::{Degree, RingRef};

/// A polynomial: nonzero coefficients keyed by monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: RingRef,
    terms: BTreeMap<Monomial, FieldElement>,
}

/// Arithmetic selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Second operand of [`poly_arith`].
pub enum Operand<'a> {
    Poly(&'a Polynomial),
    Scalar(&'a FieldElement),
}

/// Ring-checked arithmetic: `f op g`, or `f * c` for a scalar.
pub fn poly_arith(op: ArithOp, f: &Polynomial, g: Operand<'_>) -> Result<Polynomial> {
    match g {
        Operand::Poly(g) => {
            if !f.ring.same_as(&g.ring) {
                return Err(Error::RingMismatch);
            }
            Ok(match op {
                ArithOp::Add => f + g,
                ArithOp::Sub => f - g,
                ArithOp::Mul => f * g,
            })
        }
        Operand::Scalar(c) => {
            if c.field() != f.ring.field() {
                return Err(Error::RingMismatch);
            }
            match op {
                ArithOp::Mul => Ok(f.scale(c)),
                ArithOp::Add => Ok(f + &Polynomial::constant(&f.ring, c.clone())),
                ArithOp::Sub => Ok(f - &Polynomial::constant(&f.ring, c.clone())),
            }
        }
    }
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Self {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: FieldElement) -> Self {
        Self::monomial(ring, Monomial::one(), c)
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: FieldElement) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &RingRef, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(index, 1), ring.field().one())
    }

    pub fn from_terms(
        ring: &RingRef,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
    ) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&FieldElement> {
        self.terms.get(m)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn add_term(&mut self, m: Monomial, c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, a.mul(c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Leading monomial and coefficient for `ord`.
    pub fn leading_term(&self, ord: &TermOrder) -> Result<(Monomial, FieldElement)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(a.0, b.0))
            .map(|(m, c)| (*m, c.clone()))
            .ok_or(Error::ZeroInput("leading_term"))
    }

    /// Terms whose total exponent over `block` is minimal.
    pub fn initial_block_form(&self, block: &[usize]) -> Result<Self> {
        let min = self
            .terms
            .keys()
            .map(|m| m.degree_in(block))
            .min()
            .ok_or(Error::ZeroInput("initial_block_form"))?;
        Ok(Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(block) == min)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        })
    }

    /// Largest standard total degree of a term (zero polynomial: `None`).
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Lowest standard total degree of a term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    /// Homogeneity with respect to the ring's grading. The zero polynomial is homogeneous.
    pub fn homogeneous_degree(&self) -> Option<Option<Degree>> {
        let mut it = self.terms.keys().map(|m| self.ring.degree(m));
        let Some(first) = it.next() else {
            return Some(None);
        };
        if it.all(|d| d == first) {
            Some(Some(first))
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// Homogeneous with respect to the standard degree on `vars` only.
    pub fn is_homogeneous_in(&self, vars: &[usize]) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree_in(vars));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Moves the polynomial into `target`, sending variable `i` to `map[i]`.
    pub fn remap(&self, target: &RingRef, map: &[usize]) -> Self {
        Self {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.remap(map), c.clone()))
                .collect(),
        }
    }

    /// Same exponent vectors read in another ring. Variables beyond the
    /// target's count must not occur.
    pub fn embed(&self, target: &RingRef) -> Self {
        debug_assert!(self.support_vars().iter().all(|&v| v < target.nvars()));
        Self {
            ring: target.clone(),
            terms: self.terms.clone(),
        }
    }

    /// Sets variable `var` to one.
    pub fn dehomogenize(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut n = *m;
            n.set_exp(var, 0);
            out.add_term(n, c);
        }
        out
    }

    /// Homogenizes with respect to the degree on `block` using variable `h`.
    pub fn homogenize(&self, h: usize, block: &[usize]) -> Self {
        let top = self
            .terms
            .keys()
            .map(|m| m.degree_in(block))
            .max()
            .unwrap_or(0);
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut n = *m;
                    n.set_exp(h, m.exp(h) + top - m.degree_in(block));
                    (n, c.clone())
                })
                .collect(),
        }
    }

    /// Substitutes polynomials (living in `target`) for each variable.
    pub fn substitute(&self, target: &RingRef, images: &[Polynomial]) -> Self {
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, img) in images.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t = &t * &img.pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Scales so the `ord`-leading coefficient is one.
    pub fn monic(&self, ord: &TermOrder) -> Self {
        match self.leading_term(ord) {
            Ok((_, c)) => self.scale(&c.inv()),
            Err(_) => self.clone(),
        }
    }

    pub fn support_vars(&self) -> Vec<usize> {
        let mut acc = Monomial::one();
        for m in self.terms.keys() {
            acc = acc.lcm(m);
        }
        acc.support()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        debug_assert!(self.ring.same_as(&rhs.ring), "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        debug_assert!(self.ring.same_as(&rhs.ring), "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &c.neg());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        debug_assert!(self.ring.same_as(&rhs.ring), "ring mismatch");
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), &c.mul(d));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Print in descending degrevlex order for readability.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| TermOrder::Degrevlex.cmp(b.0, a.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = format_monomial(m, self.ring.names());
            match (abs.is_one(), mono.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (true, false) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, name) in names.iter().enumerate() {
        match m.exp(i) {
            0 => {}
            1 => parts.push(name.clone()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ring::Ring;
    use proptest::prelude::*;

    fn ring2() -> RingRef {
        Ring::standard(&["x", "y"], Field::Rational).unwrap()
    }

    fn p(ring: &RingRef, terms: &[(i64, [u32; 2])]) -> Polynomial {
        Polynomial::from_terms(
            ring,
            terms
                .iter()
                .map(|(c, e)| (Monomial::from_exponents(e), ring.field().from_i64(*c))),
        )
    }

    #[test]
    fn cancellation() {
        let r = ring2();
        let f = p(&r, &[(1, [1, 0]), (1, [0, 1])]);
        let g = p(&r, &[(-1, [0, 1])]);
        let s = poly_arith(ArithOp::Add, &f, Operand::Poly(&g)).unwrap();
        assert_eq!(s, p(&r, &[(1, [1, 0])]));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn difference_of_squares() {
        let r = ring2();
        let f = p(&r, &[(1, [1, 0]), (1, [0, 0])]);
        let g = p(&r, &[(1, [1, 0]), (-1, [0, 0])]);
        assert_eq!(&f * &g, p(&r, &[(1, [2, 0]), (-1, [0, 0])]));
    }

    #[test]
    fn prime_field_products() {
        let r = Ring::standard(&["x"], Field::prime(5).unwrap()).unwrap();
        let f = Polynomial::monomial(&r, Monomial::var(0, 1), r.field().from_i64(3));
        let g = Polynomial::monomial(&r, Monomial::var(0, 1), r.field().from_i64(4));
        let prod = poly_arith(ArithOp::Mul, &f, Operand::Poly(&g)).unwrap();
        assert_eq!(
            prod,
            Polynomial::monomial(&r, Monomial::var(0, 2), r.field().from_i64(2))
        );
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let a = ring2();
        let b = Ring::standard(&["u", "v"], Field::Rational).unwrap();
        let f = Polynomial::var(&a, 0);
        let g = Polynomial::var(&b, 0);
        assert_eq!(
            poly_arith(ArithOp::Add, &f, Operand::Poly(&g)),
            Err(Error::RingMismatch)
        );
        let c = Field::prime(7).unwrap().one();
        assert_eq!(
            poly_arith(ArithOp::Mul, &f, Operand::Scalar(&c)),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn leading_terms() {
        let r = ring2();
        let f = p(&r, &[(1, [2, 0]), (1, [1, 1]), (1, [0, 2])]);
        assert_eq!(
            f.leading_term(&TermOrder::Degrevlex).unwrap().0,
            Monomial::from_exponents(&[2, 0])
        );
        let g = p(&r, &[(1, [0, 3]), (1, [1, 0])]);
        assert_eq!(
            g.leading_term(&TermOrder::Lex).unwrap().0,
            Monomial::from_exponents(&[1, 0])
        );
        let h = p(&r, &[(1, [2, 1]), (1, [1, 2])]);
        assert_eq!(
            h.leading_term(&TermOrder::Degrevlex).unwrap().0,
            Monomial::from_exponents(&[2, 1])
        );
        assert_eq!(
            Polynomial::zero(&r).leading_term(&TermOrder::Degrevlex),
            Err(Error::ZeroInput("leading_term"))
        );
    }

    #[test]
    fn initial_block_forms() {
        let r = ring2();
        let cusp = p(&r, &[(1, [0, 2]), (-1, [3, 0])]);
        assert_eq!(
            cusp.initial_block_form(&[0, 1]).unwrap(),
            p(&r, &[(1, [0, 2])])
        );
        let hom = p(&r, &[(1, [2, 0]), (3, [1, 1])]);
        assert_eq!(hom.initial_block_form(&[0, 1]).unwrap(), hom);
        let f = p(&r, &[(1, [1, 1]), (1, [2, 0])]);
        assert_eq!(f.initial_block_form(&[0]).unwrap(), p(&r, &[(1, [1, 1])]));
        assert!(Polynomial::zero(&r).initial_block_form(&[0]).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(i64, [u32; 2])>> {
        prop::collection::vec((-5i64..6, [0u32..4, 0u32..4]), 0..5)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let r = ring2();
            let (a, b, c) = (p(&r, &a), p(&r, &b), p(&r, &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn block_forms_are_idempotent_and_multiplicative(a in arb_poly(), b in arb_poly()) {
            let r = ring2();
            let (a, b) = (p(&r, &a), p(&r, &b));
            prop_assume!(!a.is_zero() && !b.is_zero());
            let block = [0usize, 1];
            let ia = a.initial_block_form(&block).unwrap();
            prop_assert_eq!(ia.initial_block_form(&block).unwrap(), ia.clone());
            let ib = b.initial_block_form(&block).unwrap();
            prop_assert_eq!((&a * &b).initial_block_form(&block).unwrap(), &ia * &ib);
        }

        #[test]
        fn bidegree_is_additive(a in [0u32..5, 0u32..5], b in [0u32..5, 0u32..5]) {
            let r = Ring::bigraded(&["x"], &["y"], Field::Rational).unwrap();
            let (ma, mb) = (Monomial::from_exponents(&a), Monomial::from_exponents(&b));
            let (da, db) = (r.bidegree(&ma).unwrap(), r.bidegree(&mb).unwrap());
            prop_assert_eq!(r.bidegree(&ma.mul(&mb)).unwrap(), (da.0 + db.0, da.1 + db.1));
        }
    }
}
