use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};

use super::{RatFunc, Rational, Surd};

/// Scalar field used by the linear-algebra layer.
///
/// Exact instances decide `is_zero` exactly; the `f64` instance is provided
/// for quick numeric experiments only.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
{
    fn from_rational(q: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn half() -> Self {
        Self::from_rational(&Rational::new(1.into(), 2.into()))
    }
}

impl Field for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl Field for RatFunc {
    fn from_rational(q: &Rational) -> Self {
        RatFunc::constant(q.clone())
    }
}

impl Field for Surd {
    fn from_rational(q: &Rational) -> Self {
        Surd::rational(q.clone())
    }
}

impl Field for f64 {
    fn from_rational(q: &Rational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }
}
