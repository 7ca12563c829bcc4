//! Polynomial ring descriptors: variables, their (bi)degrees, the coefficient field.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MAX_VARS};

/// Degree tag of a single variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarDegree {
    /// Bidegree (1,0).
    X,
    /// Bidegree (0,1).
    Y,
    /// Graded degree `w > 0`.
    Weight(u32),
}

/// A (bi)degree. Singly graded rings use the first slot only.
pub type Degree = [i32; 2];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    degrees: Vec<VarDegree>,
    field: Field,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(names: Vec<String>, degrees: Vec<VarDegree>, field: Field) -> Result<RingRef> {
        if names.is_empty() {
            return Err(Error::InvalidArgument(
                "a ring needs at least one variable".into(),
            ));
        }
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        if names.len() != degrees.len() {
            return Err(Error::InvalidArgument("one degree tag per variable".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidArgument(format!("duplicate variable {n}")));
            }
        }
        let tagged = degrees
            .iter()
            .filter(|d| matches!(d, VarDegree::X | VarDegree::Y))
            .count();
        if tagged != 0 && tagged != degrees.len() {
            return Err(Error::InvalidArgument(
                "bidegree tags must cover every variable".into(),
            ));
        }
        if tagged != 0 && (!degrees.contains(&VarDegree::X) || !degrees.contains(&VarDegree::Y)) {
            return Err(Error::InvalidArgument(
                "a bigraded ring needs both an x-block and a y-block".into(),
            ));
        }
        if degrees.contains(&VarDegree::Weight(0)) {
            return Err(Error::InvalidArgument("weights must be positive".into()));
        }
        Ok(Arc::new(Ring {
            names,
            degrees,
            field,
        }))
    }

    /// Standard graded polynomial ring.
    pub fn standard<S: AsRef<str>>(names: &[S], field: Field) -> Result<RingRef> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let degrees = vec![VarDegree::Weight(1); names.len()];
        Ring::new(names, degrees, field)
    }

    /// Standard bigraded ring `k[x; y]`.
    pub fn bigraded<S: AsRef<str>>(xs: &[S], ys: &[S], field: Field) -> Result<RingRef> {
        let mut names: Vec<String> = xs.iter().map(|s| s.as_ref().to_string()).collect();
        names.extend(ys.iter().map(|s| s.as_ref().to_string()));
        let mut degrees = vec![VarDegree::X; xs.len()];
        degrees.extend(std::iter::repeat_n(VarDegree::Y, ys.len()));
        Ring::new(names, degrees, field)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_degrees(&self) -> &[VarDegree] {
        &self.degrees
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_bigraded(&self) -> bool {
        matches!(self.degrees[0], VarDegree::X | VarDegree::Y)
    }

    /// Every variable has degree one (bigraded rings count as standard).
    pub fn is_standard(&self) -> bool {
        self.degrees
            .iter()
            .all(|d| matches!(d, VarDegree::X | VarDegree::Y | VarDegree::Weight(1)))
    }

    pub fn x_block(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.degrees[i] == VarDegree::X)
            .collect()
    }

    pub fn y_block(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.degrees[i] == VarDegree::Y)
            .collect()
    }

    pub fn weight(&self, var: usize) -> u32 {
        match self.degrees[var] {
            VarDegree::Weight(w) => w,
            VarDegree::X | VarDegree::Y => 1,
        }
    }

    /// Graded degree (bigraded rings: total degree).
    pub fn total_degree(&self, m: &Monomial) -> i32 {
        (0..self.nvars())
            .map(|i| (self.weight(i) * m.exp(i)) as i32)
            .sum()
    }

    /// Bidegree of a monomial.
    pub fn bidegree(&self, m: &Monomial) -> Result<(u32, u32)> {
        if !self.is_bigraded() {
            return Err(Error::NotBigraded);
        }
        let mut d = (0, 0);
        for i in 0..self.nvars() {
            match self.degrees[i] {
                VarDegree::X => d.0 += m.exp(i),
                _ => d.1 += m.exp(i),
            }
        }
        Ok(d)
    }

    /// The grading vector used for homogeneity checks and module shifts.
    pub fn degree(&self, m: &Monomial) -> Degree {
        if self.is_bigraded() {
            let (a, b) = self.bidegree(m).expect("bigraded");
            [a as i32, b as i32]
        } else {
            [self.total_degree(m), 0]
        }
    }

    /// Same variables regraded: every variable gets degree one.
    pub fn standard_regrading(&self) -> RingRef {
        Arc::new(Ring {
            names: self.names.clone(),
            degrees: vec![VarDegree::Weight(1); self.nvars()],
            field: self.field,
        })
    }

    /// A ring with extra variables appended after the existing ones.
    pub fn extended<S: AsRef<str>>(&self, extra: &[(S, VarDegree)]) -> Result<RingRef> {
        let mut names = self.names.clone();
        let mut degrees = self.degrees.clone();
        for (n, d) in extra {
            let mut name = n.as_ref().to_string();
            while names.contains(&name) {
                name.push('_');
            }
            names.push(name);
            degrees.push(*d);
        }
        Ring::new(names, degrees, self.field)
    }

    pub fn same_as(self: &RingRef, other: &RingRef) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.field)?;
        if self.is_bigraded() {
            let xs: Vec<&str> = self
                .x_block()
                .iter()
                .map(|&i| self.names[i].as_str())
                .collect();
            let ys: Vec<&str> = self
                .y_block()
                .iter()
                .map(|&i| self.names[i].as_str())
                .collect();
            write!(f, "{} | {}", xs.join(", "), ys.join(", "))?;
        } else {
            let parts: Vec<String> = (0..self.nvars())
                .map(|i| match self.degrees[i] {
                    VarDegree::Weight(1) => self.names[i].clone(),
                    VarDegree::Weight(w) => format!("{}:{w}", self.names[i]),
                    _ => unreachable!(),
                })
                .collect();
            write!(f, "{}", parts.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bidegrees() {
        let r = Ring::bigraded(&["x"], &["y"], Field::Rational).unwrap();
        let m = Monomial::from_exponents(&[2, 1]);
        assert_eq!(r.bidegree(&m).unwrap(), (2, 1));
        assert_eq!(r.bidegree(&Monomial::one()).unwrap(), (0, 0));
        assert_eq!(
            r.bidegree(&Monomial::from_exponents(&[0, 3])).unwrap(),
            (0, 3)
        );
    }

    #[test]
    fn graded_ring_has_no_bidegree() {
        let r = Ring::standard(&["x", "y"], Field::Rational).unwrap();
        assert_eq!(r.bidegree(&Monomial::one()), Err(Error::NotBigraded));
    }

    #[test]
    fn variable_cap_is_enforced() {
        let names: Vec<String> = (0..13).map(|i| format!("x{i}")).collect();
        assert_eq!(
            Ring::standard(&names, Field::Rational).unwrap_err(),
            Error::TooManyVariables(13)
        );
    }

    #[test]
    fn extension_renames_clashes() {
        let r = Ring::standard(&["t", "x"], Field::Rational).unwrap();
        let e = r.extended(&[("t", VarDegree::Weight(1))]).unwrap();
        assert_eq!(e.names(), &["t", "x", "t_"]);
    }
}
