//! The small amount of field structure the derivative and coefficient
//! routines need, so they can run in `Complex64` or in double-double.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::dd::Dd;

pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_f64(x: f64) -> Self;

    /// Absolute value (modulus) rounded to `f64`.
    fn magnitude(self) -> f64;

    /// Nearest `Complex64`.
    fn to_complex(self) -> Complex64;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn one() -> Self {
        Self::from_f64(1.0)
    }
}

impl Scalar for Complex64 {
    fn from_f64(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }

    fn magnitude(self) -> f64 {
        self.norm()
    }

    fn to_complex(self) -> Complex64 {
        self
    }
}

impl Scalar for Dd {
    fn from_f64(x: f64) -> Self {
        Dd::from_f64(x)
    }

    fn magnitude(self) -> f64 {
        self.abs().to_f64()
    }

    fn to_complex(self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
}
