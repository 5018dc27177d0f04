//! Scalar abstractions.
//!
//! Everything that only needs field arithmetic (brackets, factorials,
//! polynomials, truncated power series) is written against [`Scalar`], so it
//! runs unchanged over `f32`, `f64` and exact rationals. Transcendental
//! routines additionally require [`Real`].

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Float, FromPrimitive, Num};

/// Field element usable as a coefficient or deformation parameter.
pub trait Scalar: Num + Clone + Debug + PartialOrd + Neg<Output = Self> {
    /// Extended-precision companion type used for long products.
    type Wide: Extended<Self>;

    fn from_int(n: i64) -> Self;

    /// True when arithmetic on `Self` never rounds.
    fn is_exact() -> bool;
}

/// Accumulator with more precision than its base scalar.
///
/// Exact scalars use themselves; binary floats use a double-word pair.
pub trait Extended<S>:
    Clone + Add<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Sub<Output = Self>
{
    fn from_scalar(value: S) -> Self;
    fn to_scalar(&self) -> S;
}

/// Binary floating-point scalar (`f32` or `f64`).
pub trait Real: Scalar + Float + FromPrimitive + Copy {
    /// Converts an `f64` literal, rounding to the target precision.
    fn lit(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("finite literal")
    }

    fn from_count(n: usize) -> Self {
        <Self as FromPrimitive>::from_usize(n).expect("representable integer")
    }

    fn as_f64(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }
}

macro_rules! impl_float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            type Wide = DoubleWord<$t>;
            fn from_int(n: i64) -> Self {
                n as $t
            }
            fn is_exact() -> bool {
                false
            }
        }
        impl Real for $t {}
    )*};
}

impl_float_scalar!(f32, f64);

impl Scalar for BigRational {
    type Wide = BigRational;
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(BigInt::from(n))
    }
    fn is_exact() -> bool {
        true
    }
}

impl Scalar for Ratio<i64> {
    type Wide = Ratio<i64>;
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(n)
    }
    fn is_exact() -> bool {
        true
    }
}

impl<T> Extended<Ratio<T>> for Ratio<T>
where
    T: Clone + num_integer::Integer,
{
    fn from_scalar(value: Ratio<T>) -> Self {
        value
    }
    fn to_scalar(&self) -> Ratio<T> {
        self.clone()
    }
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
///
/// Products and quotients are formed with fused multiply-add error terms,
/// giving roughly twice the working precision.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DoubleWord<F> {
    hi: F,
    lo: F,
}

impl<F: Float> DoubleWord<F> {
    fn two_sum(a: F, b: F) -> Self {
        let s = a + b;
        let bb = s - a;
        let err = (a - (s - bb)) + (b - bb);
        Self { hi: s, lo: err }
    }

    fn fast_two_sum(a: F, b: F) -> Self {
        let s = a + b;
        Self {
            hi: s,
            lo: b - (s - a),
        }
    }

    fn two_prod(a: F, b: F) -> Self {
        let p = a * b;
        Self {
            hi: p,
            lo: a.mul_add(b, -p),
        }
    }

    pub fn hi(&self) -> F {
        self.hi
    }
}

impl<F: Float> Add for DoubleWord<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = Self::two_sum(self.hi, rhs.hi);
        let t = Self::two_sum(self.lo, rhs.lo);
        let v = Self::fast_two_sum(s.hi, s.lo + t.hi);
        Self::fast_two_sum(v.hi, t.lo + v.lo)
    }
}

impl<F: Float> Sub for DoubleWord<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + Self {
            hi: -rhs.hi,
            lo: -rhs.lo,
        }
    }
}

impl<F: Float> Mul for DoubleWord<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let p = Self::two_prod(self.hi, rhs.hi);
        let lo = p.lo + (self.hi * rhs.lo + self.lo * rhs.hi);
        Self::fast_two_sum(p.hi, lo)
    }
}

impl<F: Float> Div for DoubleWord<F> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Self::from_scalar(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Self::from_scalar(q2);
        let q3 = r.hi / rhs.hi;
        let q = Self::fast_two_sum(q1, q2);
        q + Self::from_scalar(q3)
    }
}

impl<F: Float> Extended<F> for DoubleWord<F> {
    fn from_scalar(value: F) -> Self {
        Self {
            hi: value,
            lo: F::zero(),
        }
    }
    fn to_scalar(&self) -> F {
        self.hi + self.lo
    }
}
