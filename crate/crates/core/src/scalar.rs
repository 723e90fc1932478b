//! Scalar abstractions.
//!
//! Matrix construction only needs ring arithmetic, so it is generic over
//! [`Scalar`], which covers `f32`, `f64` and exact rationals. Anything that
//! takes square roots or compares against a tolerance needs [`Real`].

use std::fmt::Debug;

use num_rational::{BigRational, Ratio};
use num_traits::{Float, FloatConst, FromPrimitive, Num, ToPrimitive};

pub trait Scalar: Num + Clone + PartialOrd + Debug + Send + Sync + 'static {
    /// Embeds a non-negative count (a degree, a part order).
    fn from_count(n: usize) -> Self;

    /// Lossy conversion used for diagnostics and error messages.
    fn to_f64_lossy(&self) -> f64;
}

/// Floating-point scalars usable by the eigensolver and the predictors.
pub trait Real: Scalar + Float + FloatConst + FromPrimitive + Copy {
    /// Embeds an `f64` literal (tolerances, grid values).
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }
}

macro_rules! impl_float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_count(n: usize) -> Self {
                n as $t
            }

            fn to_f64_lossy(&self) -> f64 {
                *self as f64
            }
        }

        impl Real for $t {}
    )*};
}

impl_float_scalar!(f32, f64);

impl Scalar for Ratio<i64> {
    fn from_count(n: usize) -> Self {
        Ratio::from_integer(i64::try_from(n).expect("count fits in i64"))
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for BigRational {
    fn from_count(n: usize) -> Self {
        BigRational::from_integer(n.into())
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}
