use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

use crate::exactnum::ExactRational;

/// A field the series machinery can run over: exact rationals for
/// certification, `f64`/`f32` for quick approximate passes.
pub trait Scalar: Clone + Debug + PartialOrd + Num + Neg<Output = Self> {
    fn from_rational(q: &ExactRational) -> Self;

    fn from_i64(v: i64) -> Self;

    fn abs_val(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Lossy conversion used for diagnostics and magnitude estimates.
    fn approx_f64(&self) -> f64;
}

impl Scalar for ExactRational {
    fn from_rational(q: &ExactRational) -> Self {
        q.clone()
    }

    fn from_i64(v: i64) -> Self {
        ExactRational::from(v)
    }

    fn approx_f64(&self) -> f64 {
        self.to_f64()
    }
}

impl Scalar for f64 {
    fn from_rational(q: &ExactRational) -> Self {
        q.to_f64()
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn approx_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_rational(q: &ExactRational) -> Self {
        q.to_f64() as f32
    }

    fn from_i64(v: i64) -> Self {
        v as f32
    }

    fn approx_f64(&self) -> f64 {
        *self as f64
    }
}
