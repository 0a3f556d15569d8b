//! Scalar abstractions.
//!
//! Everything numerical is written against [`Real`]; the polynomial
//! recurrences only need [`Scalar`], which exact rationals also satisfy.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, FromPrimitive, Num, ToPrimitive};

/// Ring-like scalar used by three-term recurrences.
pub trait Scalar: Clone + Num + PartialOrd + Debug {
    fn from_count(n: usize) -> Self;
}

/// Floating point scalar for all transcendental work.
pub trait Real:
    Scalar
    + Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Display
    + LowerExp
    + Sum
    + Send
    + Sync
    + 'static
{
    /// Convert an f64 literal. Panics only for types that cannot hold it.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal out of range for scalar type")
    }

    fn of(n: usize) -> Self {
        Self::from_usize(n).expect("count out of range for scalar type")
    }

    fn f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn half() -> Self {
        Self::lit(0.5)
    }

    fn two() -> Self {
        Self::lit(2.0)
    }
}

impl Scalar for f32 {
    fn from_count(n: usize) -> Self {
        n as f32
    }
}

impl Scalar for f64 {
    fn from_count(n: usize) -> Self {
        n as f64
    }
}

impl Real for f32 {}
impl Real for f64 {}

impl Scalar for BigRational {
    fn from_count(n: usize) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// Exact rational from an f64 (the binary value, not a decimal guess).
pub fn exact_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite input")
}
