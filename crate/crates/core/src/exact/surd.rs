use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Element `a + b√d` of a real quadratic extension of the rationals.
///
/// `d = 0` marks a plain rational. Values with different nonzero radicands
/// are never mixed.
#[derive(Clone)]
pub struct Surd {
    a: Rational,
    b: Rational,
    d: Rational,
}

/// Exact rational square root, if any.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

impl Surd {
    pub fn rational(a: Rational) -> Self {
        Surd { a, b: Rational::zero(), d: Rational::zero() }
    }

    /// `√d` for positive `d`; collapses to a rational when `d` is a square.
    pub fn sqrt(d: Rational) -> Self {
        assert!(d.is_positive(), "radicand must be positive");
        match rational_sqrt(&d) {
            Some(r) => Surd::rational(r),
            None => Surd { a: Rational::zero(), b: Rational::one(), d },
        }
    }

    pub fn parts(&self) -> (&Rational, &Rational, &Rational) {
        (&self.a, &self.b, &self.d)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.b.is_zero() {
            Some(self.a.clone())
        } else {
            None
        }
    }

    fn radicand(&self, other: &Surd) -> Rational {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, true) => Rational::zero(),
            (false, true) => self.d.clone(),
            (true, false) => other.d.clone(),
            (false, false) => {
                assert_eq!(self.d, other.d, "mixed radicands");
                self.d.clone()
            }
        }
    }

    fn norm(&self) -> Rational {
        &self.a * &self.a - &self.d * &self.b * &self.b
    }
}

impl PartialEq for Surd {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        Surd { a: &self.a + &rhs.a, b: &self.b + &rhs.b, d: self.radicand(rhs) }
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        Surd { a: &self.a - &rhs.a, b: &self.b - &rhs.b, d: self.radicand(rhs) }
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        let d = self.radicand(rhs);
        Surd {
            a: &self.a * &rhs.a + &d * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            d,
        }
    }
}

impl Div for &Surd {
    type Output = Surd;
    fn div(self, rhs: &Surd) -> Surd {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero surd");
        let conj = Surd { a: rhs.a.clone() / &n, b: -rhs.b.clone() / &n, d: rhs.d.clone() };
        self * &conj
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { a: -self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Surd {
            type Output = Surd;
            fn $f(self, rhs: Surd) -> Surd {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        -&self
    }
}

impl Zero for Surd {
    fn zero() -> Self {
        Surd::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Surd {
    fn one() -> Self {
        Surd::rational(Rational::one())
    }
}

impl From<Rational> for Surd {
    fn from(a: Rational) -> Self {
        Surd::rational(a)
    }
}

impl From<i64> for Surd {
    fn from(a: i64) -> Self {
        Surd::rational(Rational::from_integer(BigInt::from(a)))
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = super::poly::fmt_rational(&self.a);
        if self.b.is_zero() {
            return write!(f, "{a}");
        }
        let b = super::poly::fmt_rational(&self.b);
        let d = super::poly::fmt_rational(&self.d);
        write!(f, "{a} + {b}*sqrt({d})")
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surd({self})")
    }
}
