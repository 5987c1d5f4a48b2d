use num_complex::Complex;

use crate::error::{Error, Result};
use crate::multfunc::MultFunc;
use crate::primes::is_prime;
use crate::scalar::{cis, Real};

/// `⌈40 / log₂ p⌉ + 2`.
pub fn default_cutoff(p: u64) -> u32 {
    (40.0 / (p as f64).log2()).ceil() as u32 + 2
}

/// Local series at one prime, evaluated at one `t`.
#[derive(Clone, Copy, Debug)]
pub struct LocalFactors<T> {
    /// `Σ_j f(p^j) p^{-j} (p^j/σ(p^j))^{it}`.
    pub alpha: Complex<T>,
    /// `Σ_j f(p^j) p^{-j}`.
    pub delta: Complex<T>,
    /// The `j >= 2` part of `delta`.
    pub eta: Complex<T>,
    /// Estimate of `Σ_{j>J} |f(p^j)| p^{-j}`, bounding the truncation of all three.
    pub tail: T,
    pub cutoff: u32,
}

/// Terms `j = 0..=J` of the local series: weights `f(p^j)/p^j` and logs
/// `ln(p^j/σ(p^j))`.
#[derive(Clone, Debug)]
pub(crate) struct LocalSeries<T> {
    pub(crate) p: u64,
    pub(crate) weight: Vec<Complex<T>>,
    pub(crate) log_ratio: Vec<T>,
    pub(crate) tail: T,
}

impl<T: Real> LocalSeries<T> {
    pub(crate) fn new(f: &MultFunc, p: u64, cutoff: u32) -> Result<Self> {
        let inv = T::one() / T::of_u64(p);
        let ln_base = (-inv).ln_1p();
        let mut weight = Vec::with_capacity(cutoff as usize + 1);
        let mut log_ratio = Vec::with_capacity(cutoff as usize + 1);
        let mut pw = T::one();
        for j in 0..=cutoff {
            weight.push(f.eval_prime_power::<T>(p, j) * pw);
            // ln(1 - 1/p) - ln(1 - p^{-(j+1)})
            pw = pw * inv;
            log_ratio.push(if j == 0 { T::zero() } else { ln_base - (-pw).ln_1p() });
        }
        let a = (f.eval_prime_power::<T>(p, cutoff + 1) * pw).norm();
        let b = (f.eval_prime_power::<T>(p, cutoff + 2) * pw * inv).norm();
        let root = |x: T, j: u32| if x > T::zero() { x.powf(T::one() / T::of_u64(j as u64)) } else { T::zero() };
        let rho = root(a, cutoff + 1).max(root(b, cutoff + 2));
        if !(rho < T::one()) {
            return Err(Error::DivergentLocalSeries { id: f.to_string(), p });
        }
        Ok(LocalSeries { p, weight, log_ratio, tail: (a + b) / (T::one() - rho) })
    }

    pub(crate) fn delta(&self) -> Complex<T> {
        self.weight.iter().fold(Complex::new(T::zero(), T::zero()), |s, w| s + w)
    }

    /// `(1 - 1/p) Δ_p - 1` in telescoped form `Σ_{j>=1} (f(p^j) - f(p^{j-1})) / p^j`,
    /// so entries with `f(p^j) = 1` give exactly 0.
    pub(crate) fn mean_factor_minus_one(&self) -> Complex<T> {
        let inv = T::one() / T::of_u64(self.p);
        let mut s = Complex::new(T::zero(), T::zero());
        for j in 1..self.weight.len() {
            s = s + (self.weight[j] - self.weight[j - 1] * inv);
        }
        s
    }

    /// `Σ_j ln(p^j/σ(p^j)) f(p^j) p^{-j} / Δ_p`, the mean of the local variable.
    pub(crate) fn mean_log(&self, delta: Complex<T>) -> Complex<T> {
        let mut s = Complex::new(T::zero(), T::zero());
        for j in 1..self.weight.len() {
            s = s + self.weight[j] * self.log_ratio[j];
        }
        s / delta
    }
}

pub(crate) fn checked_cutoff(p: u64, cutoff: Option<u32>) -> Result<u32> {
    match cutoff {
        Some(j) if j < 2 => Err(Error::param("J", "series cutoff must be at least 2")),
        Some(j) if j > 512 => Err(Error::param("J", "series cutoff above 512")),
        Some(j) => Ok(j),
        None => Ok(default_cutoff(p)),
    }
}

/// `α_p(t)`, `Δ_p` and `η_p` through `j = J`, plus a geometric tail estimate.
pub fn local_factors<T: Real>(f: &MultFunc, p: u64, t: T, cutoff: Option<u32>) -> Result<LocalFactors<T>> {
    if !is_prime(p) {
        return Err(Error::param("p", format!("{p} is not prime")));
    }
    let j = checked_cutoff(p, cutoff)?;
    let s = LocalSeries::<T>::new(f, p, j)?;
    let zero = Complex::new(T::zero(), T::zero());
    let mut alpha = zero;
    let mut eta = zero;
    for (k, (w, l)) in s.weight.iter().zip(&s.log_ratio).enumerate() {
        alpha = alpha + w * cis(t * *l);
        if k >= 2 {
            eta = eta + w;
        }
    }
    Ok(LocalFactors { alpha, delta: s.delta(), eta, tail: s.tail, cutoff: j })
}
