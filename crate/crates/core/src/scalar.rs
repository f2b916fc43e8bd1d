//! Scalar abstraction so every numeric code path runs in both f32
//! (training/inference) and f64 (gradient verification) without duplication.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Floating-point element type for tensors and filters.
pub trait Scalar:
    Copy
    + Clone
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
{
    const ZERO: Self;
    const ONE: Self;

    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;

    fn abs(self) -> Self;
    fn sqrt(self) -> Self;
    fn exp(self) -> Self;
    fn is_finite(self) -> bool;
    fn max(self, other: Self) -> Self;
    fn min(self, other: Self) -> Self;

    /// Gauss error function; the exact-CDF GELU is built on this.
    fn erf(self) -> Self;

    /// Standard normal density at `self`.
    fn normal_pdf(self) -> Self {
        let inv_sqrt_2pi = Self::from_f64(0.398_942_280_401_432_7);
        inv_sqrt_2pi * (-(self * self) / Self::from_f64(2.0)).exp()
    }

    /// Standard normal CDF at `self`.
    fn normal_cdf(self) -> Self {
        let half = Self::from_f64(0.5);
        half * (Self::ONE + (self / Self::from_f64(std::f64::consts::SQRT_2)).erf())
    }
}

impl Scalar for f32 {
    const ZERO: Self = 0.0;
    const ONE: Self = 1.0;

    fn from_f64(v: f64) -> Self {
        v as f32
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
    fn abs(self) -> Self {
        f32::abs(self)
    }
    fn sqrt(self) -> Self {
        f32::sqrt(self)
    }
    fn exp(self) -> Self {
        f32::exp(self)
    }
    fn is_finite(self) -> bool {
        f32::is_finite(self)
    }
    fn max(self, other: Self) -> Self {
        f32::max(self, other)
    }
    fn min(self, other: Self) -> Self {
        f32::min(self, other)
    }
    fn erf(self) -> Self {
        // Evaluate in f64: erff is only ~1e-7 accurate, which shows up in
        // activation comparisons between the f32 and f64 code paths.
        libm::erf(self as f64) as f32
    }
}

impl Scalar for f64 {
    const ZERO: Self = 0.0;
    const ONE: Self = 1.0;

    fn from_f64(v: f64) -> Self {
        v
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn abs(self) -> Self {
        f64::abs(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    fn max(self, other: Self) -> Self {
        f64::max(self, other)
    }
    fn min(self, other: Self) -> Self {
        f64::min(self, other)
    }
    fn erf(self) -> Self {
        libm::erf(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erf_known_values() {
        assert!((1.0f64.erf() - 0.842_700_792_949_714_9).abs() < 1e-15);
        assert_eq!(0.0f64.erf(), 0.0);
        assert!((2.0f32.erf() - 0.995_322_3).abs() < 1e-6);
    }

    #[test]
    fn normal_cdf_matches_erf_form() {
        assert!((0.0f64.normal_cdf() - 0.5).abs() < 1e-15);
        assert!((1.0f64.normal_cdf() - 0.841_344_746_068_542_9).abs() < 1e-12);
    }
}
