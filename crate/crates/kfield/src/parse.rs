//! Shorthand scalar syntax: rationals, named constants, `+ - * / ^` and parentheses.
//!
//! Names: `i`, `sqrt2`, `sqrt3`, `sqrt6`, `zeta`, `zeta_inv`, `mu` (the sporadic root).

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::{FieldError, Scalar};

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, FieldError> {
        Err(FieldError::Parse(format!(
            "{msg} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.s)
        )))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar, FieldError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { acc + t } else { acc - t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, FieldError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let f = self.unary()?;
            acc = if c == b'*' {
                acc * f
            } else {
                let inv = f.inverse()?;
                acc * inv
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar, FieldError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => {
                let base = self.atom()?;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let start = self.pos;
                    while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let e: u32 = std::str::from_utf8(&self.s[start..self.pos])
                        .ok()
                        .and_then(|t| t.parse().ok())
                        .map_or_else(|| self.err("expected exponent"), Ok)?;
                    return Ok(base.pow(e));
                }
                Ok(base)
            }
        }
    }

    fn atom(&mut self) -> Result<Scalar, FieldError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.s[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| FieldError::Parse("bad integer".into()))?;
                Ok(Scalar::from_rational(BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len()
                    && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                match &self.s[start..self.pos] {
                    b"i" => Ok(Scalar::i()),
                    b"sqrt2" => Ok(Scalar::sqrt2()),
                    b"sqrt3" => Ok(Scalar::sqrt3()),
                    b"sqrt6" => Ok(Scalar::sqrt6()),
                    b"zeta" => Ok(Scalar::zeta()),
                    b"zeta_inv" => Ok(Scalar::zeta().conj()),
                    b"mu" => Ok(crate::mu_sporadic()),
                    _ => {
                        self.pos = start;
                        self.err("unknown name")
                    }
                }
            }
            _ => self.err("unexpected input"),
        }
    }
}

impl FromStr for Scalar {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let v = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(v)
    }
}
