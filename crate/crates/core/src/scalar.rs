//! Floating-point scalar abstraction shared by every numeric routine.
//!
//! Integer work (sieving, threshold tests, lattice counts) never goes through
//! this trait; it only carries the weights, logarithms and products.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar type: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossy conversion from `f64`. Never fails for finite input.
    #[inline]
    fn of(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("finite f64 converts to every Real")
    }

    /// Lossy conversion from an unsigned integer.
    #[inline]
    fn of_u64(x: u64) -> Self {
        <Self as FromPrimitive>::from_u64(x).expect("u64 converts to every Real")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }

    /// Euler-Mascheroni constant.
    #[inline]
    fn euler_gamma() -> Self {
        Self::of(0.577_215_664_901_532_9)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `exp(i * theta)` without going through `Complex::exp`.
#[inline]
pub fn cis<T: Real>(theta: T) -> Complex<T> {
    let (s, c) = theta.sin_cos();
    Complex::new(c, s)
}

/// `exp(i * theta) - 1`, accurate for small `theta`.
#[inline]
pub fn cis_minus_one<T: Real>(theta: T) -> Complex<T> {
    let half = theta * T::of(0.5);
    let (s, c) = half.sin_cos();
    // 2i sin(h) e^{ih}
    let two_s = s + s;
    Complex::new(-two_s * s, two_s * c)
}

/// Principal logarithm of `1 + delta`, using a short series when `delta` is tiny.
#[inline]
pub fn ln_1p_complex<T: Real>(delta: Complex<T>) -> Complex<T> {
    let small = T::of(1e-4);
    if delta.norm_sqr() < small * small {
        let d2 = delta * delta;
        let d3 = d2 * delta;
        let d4 = d3 * delta;
        delta - d2 * T::of(0.5) + d3 * T::of(1.0 / 3.0) - d4 * T::of(0.25)
    } else {
        (Complex::new(T::one(), T::zero()) + delta).ln()
    }
}

/// `base^z` for a positive real base, principal branch.
#[inline]
pub fn positive_pow<T: Real>(base: T, z: Complex<T>) -> Complex<T> {
    debug_assert!(base > T::zero());
    let l = base.ln();
    let modulus = (z.re * l).exp();
    cis(z.im * l) * modulus
}
