//! Exact scalars: rationals, sparse polynomials, rational functions in the
//! patch variables `x1..x8`, and a quadratic surd type.

mod field;
mod gcd;
mod parse;
mod poly;
mod ratfunc;
mod surd;

use std::fmt;

pub use field::Field;
pub use gcd::poly_gcd;
pub use parse::{parse_poly, parse_rational, parse_ratfunc};
pub use poly::{Mono, Poly, MAX_VARS};
pub use ratfunc::RatFunc;
pub use surd::{rational_sqrt, Surd};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `n/d` as a rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn fmt_rational(c: &Rational) -> String {
    poly::fmt_rational(c)
}

/// Evaluation site on a patch.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point(pub Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![int(0); dim])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Point(c.iter().map(|&v| int(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    /// Parse `1,2/3,0,-1`.
    pub fn parse(s: &str) -> Result<Point> {
        let coords = s
            .split(',')
            .map(|t| parse_rational(t.trim()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Point(coords))
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if self.0.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: self.0.len() });
        }
        Ok(())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Value of `f` at `p`.
pub fn eval(f: &RatFunc, p: &Point) -> Result<Rational> {
    f.eval(&p.0)
}

/// Derivative of `f` in the variable with zero-based index `i`.
pub fn partial(f: &RatFunc, i: usize) -> RatFunc {
    f.partial(i)
}

pub fn rf_equal(f: &RatFunc, g: &RatFunc) -> bool {
    f.rf_equal(g)
}
