//! Recursive-descent reader for rational-function literals such as
//! `x1^2/(1+x2) - 3/4*x3`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{Poly, MAX_VARS};
use super::ratfunc::RatFunc;
use super::Rational;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.pos, message: message.into() })
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

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                b'/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    if d.is_zero() {
                        return self.err("division by zero");
                    }
                    acc = &acc / &d;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| Error::Parse {
                offset: self.pos,
                message: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'x') => {
                self.pos += 1;
                let idx = self.integer()?;
                let idx: usize = idx.try_into().unwrap_or(0);
                if idx == 0 || idx > MAX_VARS {
                    return self.err(format!("variable index must be in 1..={MAX_VARS}"));
                }
                Ok(RatFunc::var(idx - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFunc::constant(Rational::from_integer(n)))
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse a rational-function literal over the variables `x1..x8`.
pub fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let r = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(r)
}

/// Parse a polynomial literal; fails if the expression has a nonconstant
/// denominator.
pub fn parse_poly(s: &str) -> Result<Poly> {
    let f = parse_ratfunc(s)?;
    match f.den().constant_value() {
        Some(c) if !c.is_zero() => Ok(f.num().scale(&(Rational::from_integer(1.into()) / c))),
        _ => Err(Error::Parse { offset: 0, message: "expected a polynomial".into() }),
    }
}

/// Parse a rational constant such as `-3/4`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let f = parse_ratfunc(s)?;
    f.constant_value()
        .ok_or_else(|| Error::Parse { offset: 0, message: format!("expected a rational constant, got `{s}`") })
}
