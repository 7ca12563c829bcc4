//! Polynomial expressions: `+ - * ^`, parentheses, integer literals and
//! division by nonzero constants.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::RingRef;

/// Parses `text` as a polynomial in `ring`. Error offsets are relative to
/// `base` (line, column, offset) so callers can report positions in a file.
pub fn parse_polynomial_at(
    ring: &RingRef,
    text: &str,
    base: (usize, usize, usize),
) -> Result<Polynomial> {
    let mut p = Parser {
        ring,
        src: text.as_bytes(),
        pos: 0,
        base,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(out)
}

pub fn parse_polynomial(ring: &RingRef, text: &str) -> Result<Polynomial> {
    parse_polynomial_at(ring, text, (1, 1, 0))
}

struct Parser<'a> {
    ring: &'a RingRef,
    src: &'a [u8],
    pos: usize,
    base: (usize, usize, usize),
}

impl Parser<'_> {
    fn error(&self, message: String) -> Error {
        let (mut line, mut column, offset) = self.base;
        for &b in &self.src[..self.pos] {
            if b == b'\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        Error::Parse {
            line,
            column,
            offset: offset + self.pos,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.power()?;
                    if !d.is_constant() || d.is_zero() {
                        self.pos = at;
                        return Err(self.error("division only by nonzero constants".into()));
                    }
                    let c = d.terms().next().unwrap().1.inv();
                    acc = acc.scale(&c);
                }
                // Juxtaposition such as `2x` or `x y` multiplies.
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' || c == b'_' => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let e: u32 = digits.parse().map_err(|_| {
                self.pos = start;
                self.error("expected a small non-negative exponent".into())
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = digits.parse().unwrap();
                let c = self
                    .ring
                    .field()
                    .from_rational(&BigRational::from_integer(n))
                    .map_err(|e| self.error(e.to_string()))?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.var_index(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => {
                        self.pos = start;
                        Err(self.error(format!("unknown variable '{name}'")))
                    }
                }
            }
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
            None => Err(self.error("unexpected end of expression".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ring::Ring;

    #[test]
    fn parses_and_prints() {
        let r = Ring::standard(&["x", "y"], Field::Rational).unwrap();
        let f = parse_polynomial(&r, "(x+1)*(x-1) - 2x y^2/4").unwrap();
        assert_eq!(f.to_string(), "-1/2*x*y^2 + x^2 - 1");
        let again = parse_polynomial(&r, &f.to_string()).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn reports_positions() {
        let r = Ring::standard(&["x"], Field::Rational).unwrap();
        match parse_polynomial(&r, "x + q") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial(&r, "x/x").is_err());
        assert!(parse_polynomial(&r, "(x").is_err());
    }
}
