//! Weighted distribution functions of `n/σ(n)`.
//!
//! The crate computes sieve-based estimates of
//! `D_f(u) = lim (1/x) Σ_{n<=x, n/σ(n)<=u} f(n)` and of its `S(f;x)`-normalized
//! variant for a closed catalog of multiplicative functions, and the analytic
//! objects they are checked against: Euler-product mean values, the Wirsing
//! asymptotic, the characteristic-function product `ψ(t)` and its numerical
//! inversion.
//!
//! Numeric routines are generic over [`Real`] (`f32` or `f64`); the `*64`
//! aliases below fix the common `f64` instantiation.

pub mod analytic;
pub mod empirical;
pub mod error;
pub mod inversion;
pub mod multfunc;
pub mod primes;
pub mod scalar;
pub mod sieve;

pub use error::{Error, Result};
pub use multfunc::{MultFunc, PrimePower, Rule, ValueClass};
pub use scalar::Real;

pub use num_complex::Complex;
pub use num_rational::Ratio;

pub type Complex64 = Complex<f64>;
pub type WeightedCdfEstimate64 = empirical::WeightedCdfEstimate<f64>;
pub type CharFnProfile64 = analytic::CharFnProfile<f64>;
pub type EulerProductValue64 = analytic::EulerProductValue<f64>;
pub type InvertedCdf64 = inversion::InvertedCdf<f64>;
