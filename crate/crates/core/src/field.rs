//! Exact coefficient fields: the rationals and prime fields `Z/p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default modulus for the prime-field escape hatch.
pub const DEFAULT_PRIME: u32 = 32003;

/// Coefficient field of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Self> {
        if p < 3 || p.is_multiple_of(2) || !is_prime(p) {
            return Err(Error::InvalidArgument(format!(
                "prime field modulus must be an odd prime, got {p}"
            )));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::zero()),
            Field::Prime(p) => FieldElement::Prime {
                value: 0,
                modulus: p,
            },
        }
    }

    pub fn one(self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => FieldElement::Prime {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Maps a rational into this field; fails when the denominator vanishes mod p.
    pub fn from_rational(self, q: &BigRational) -> Result<FieldElement> {
        match self {
            Field::Rational => Ok(FieldElement::Rational(q.clone())),
            Field::Prime(p) => {
                let num = reduce_bigint(q.numer(), p);
                let den = reduce_bigint(q.denom(), p);
                if den == 0 {
                    return Err(Error::InvalidArgument(format!(
                        "denominator of {q} vanishes modulo {p}"
                    )));
                }
                Ok(FieldElement::Prime {
                    value: mul_mod(num, inv_mod(den, p), p),
                    modulus: p,
                })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Zp({p})"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_bigint(n: &BigInt, p: u32) -> u32 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u32().expect("residue fits in u32")
}

fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    let mut base = a as u64 % p as u64;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// An element of a [`Field`]. Rationals are kept in lowest terms with a
/// positive denominator (guaranteed by `BigRational`); residues lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Prime { value: u32, modulus: u32 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Prime { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (
                FieldElement::Prime {
                    value: a,
                    modulus: p,
                },
                FieldElement::Prime {
                    value: b,
                    modulus: q,
                },
            ) if p == q => FieldElement::Prime {
                value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            _ => panic!("field mismatch: {self:?} + {other:?}"),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (
                FieldElement::Prime {
                    value: a,
                    modulus: p,
                },
                FieldElement::Prime {
                    value: b,
                    modulus: q,
                },
            ) if p == q => FieldElement::Prime {
                value: mul_mod(*a, *b, *p),
                modulus: *p,
            },
            _ => panic!("field mismatch: {self:?} * {other:?}"),
        }
    }

    /// Multiplicative inverse; panics on zero (callers check leading coefficients).
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(a.recip()),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    /// The value as a rational, when it is one.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q),
            FieldElement::Prime { .. } => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_negative(),
            FieldElement::Prime { .. } => false,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElement::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(a.mul(&b), f.from_i64(2));
        assert_eq!(a.add(&b), f.from_i64(2));
        assert_eq!(a.mul(&a.inv()), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(4));
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(32003).is_ok());
    }

    #[test]
    fn rationals_stay_reduced() {
        let f = Field::Rational;
        let q = f
            .from_rational(&BigRational::new(4.into(), (-6).into()))
            .unwrap();
        let r = q.as_rational().unwrap();
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn rational_into_prime_field() {
        let f = Field::prime(7).unwrap();
        let half = f
            .from_rational(&BigRational::new(1.into(), 2.into()))
            .unwrap();
        assert_eq!(half.mul(&f.from_i64(2)), f.one());
        assert!(f
            .from_rational(&BigRational::new(1.into(), 14.into()))
            .is_err());
    }
}
