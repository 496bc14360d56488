//! Scalar abstraction over the two arithmetic paths.
//!
//! Every geometric operation in this crate is generic over [`Scalar`], with two
//! implementations: `f64` for parameter families involving trigonometric or
//! hyperbolic values, and [`Rat`] (arbitrary-precision rationals) for exact
//! verification. On the exact path every zero test is literal equality; on the
//! float path callers compare against a tolerance times a running scale.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, FromPrimitive, Signed, ToPrimitive, Zero};

/// Exact rational scalar used on the exact arithmetic path.
pub type Rat = BigRational;

pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// True when arithmetic carries no rounding error and zero tests are exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Lossless embedding of a finite float (floats are dyadic rationals).
    fn from_f64(x: f64) -> Self;
    fn is_zero(&self) -> bool;
    /// Nearest `f64`, for reporting and tolerance bookkeeping only.
    fn to_f64(&self) -> f64;
    /// Magnitude as `f64`.
    fn abs_f64(&self) -> f64 {
        self.to_f64().abs()
    }
    /// Square root when it exists in the scalar type: always for nonnegative
    /// floats, only for perfect squares on the rational path.
    fn sqrt_checked(&self) -> Option<Self>;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn sqrt_checked(&self) -> Option<Self> {
        if *self >= 0.0 {
            Some(self.sqrt())
        } else {
            None
        }
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as num::One>::one()
    }
    fn from_int(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rat::new(BigInt::from(num), BigInt::from(den))
    }
    fn from_f64(x: f64) -> Self {
        <BigRational as FromPrimitive>::from_f64(x).expect("finite float")
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            if self.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }
    fn sqrt_checked(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if Zero::is_zero(self) {
            return Some(Scalar::zero());
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(Rat::new(n, d))
        } else {
            None
        }
    }
}

/// Exact conversion of a finite `f64` into a rational (all finite floats are
/// dyadic rationals, so this never loses information).
pub fn rat_from_f64(x: f64) -> Option<Rat> {
    <BigRational as FromPrimitive>::from_f64(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sqrt_exact_only() {
        let x = Rat::from_ratio(9, 4);
        assert_eq!(x.sqrt_checked(), Some(Rat::from_ratio(3, 2)));
        assert_eq!(Rat::from_int(2).sqrt_checked(), None);
        assert_eq!(Rat::from_int(-4).sqrt_checked(), None);
        assert_eq!(Rat::from_int(0).sqrt_checked(), Some(Rat::from_int(0)));
    }

    #[test]
    fn f64_roundtrips_exactly_through_rat() {
        let r = rat_from_f64(0.5).unwrap();
        assert_eq!(r, Rat::from_ratio(1, 2));
        let r = rat_from_f64(-2.75).unwrap();
        assert_eq!(r, Rat::from_ratio(-11, 4));
    }
}
