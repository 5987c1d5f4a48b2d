use num_complex::Complex;
use rayon::prelude::*;
use statrs::function::gamma::gamma;

use super::local::{default_cutoff, LocalSeries};
use super::tail::prime_square_tail;
use crate::error::{Error, Result};
use crate::multfunc::MultFunc;
use crate::primes::primes_up_to;
use crate::scalar::{ln_1p_complex, Real};

/// Primes per parallel work unit; partial sums are combined in prime order.
pub(crate) const PRIME_CHUNK: usize = 4096;

/// Truncated Euler product with a tail estimate.
#[derive(Clone, Copy, Debug)]
pub struct EulerProductValue<T> {
    pub value: Complex<T>,
    /// Product runs over `p <= p_bound`.
    pub p_bound: u64,
    /// Estimate of `|log(full / truncated)|`.
    pub tail_bound: T,
}

/// `Σ_{p<=P} g(p)` in fixed chunks, merged left to right.
pub(crate) fn sum_over_primes<T, G>(primes: &[u32], g: G) -> Result<Complex<T>>
where
    T: Real,
    G: Fn(u64) -> Result<Complex<T>> + Sync,
{
    let parts = primes
        .par_chunks(PRIME_CHUNK)
        .map(|c| c.iter().try_fold(Complex::new(T::zero(), T::zero()), |s, &p| Ok(s + g(p as u64)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().fold(Complex::new(T::zero(), T::zero()), |a, b| a + b))
}

fn check_restriction(f: &MultFunc, p_bound: u64) -> Result<()> {
    if let Some(c) = f.coprime_restriction() {
        if c.y > p_bound as f64 {
            return Err(Error::param("P", format!("must reach the restriction bound y = {}", c.y)));
        }
    }
    Ok(())
}

/// `Π_{p<=P} (1 - 1/p)(1 + f(p)/p + f(p²)/p² + ...)`, accumulated in log space.
pub fn mean_value_product<T: Real>(f: &MultFunc, p_bound: u64) -> Result<EulerProductValue<T>> {
    if p_bound < 2 {
        return Err(Error::param("P", "must be at least 2"));
    }
    let model = f.tail_model();
    let Some(factor) = model.factor else {
        return Err(Error::HypothesisFailed(f.to_string()));
    };
    check_restriction(f, p_bound)?;
    let primes = primes_up_to(p_bound);
    let log = sum_over_primes(&primes, |p| {
        let s = LocalSeries::<T>::new(f, p, default_cutoff(p))?;
        Ok(ln_1p_complex(s.mean_factor_minus_one()))
    })?;
    // |log(1 + d)| <= |d| / (1 - |d|) and |d| <= factor/p² <= factor/121 beyond p0
    let slack = 1.0 / (1.0 - (factor / 121.0).min(0.5));
    let tail = factor * slack * prime_square_tail(p_bound);
    Ok(EulerProductValue { value: log.exp(), p_bound, tail_bound: T::of(tail) })
}

/// `e^{-γκ}/Γ(κ) · x/log x · Π_{p<=min(P,x)} Δ_p`.
pub fn wirsing_prediction<T: Real>(f: &MultFunc, x: T, p_bound: u64) -> Result<T> {
    let Some(kappa) = f.claimed_kappa() else {
        return Err(Error::MissingKappa(f.to_string()));
    };
    if !(x > T::one()) {
        return Err(Error::param("x", "must exceed 1"));
    }
    let xf = x.to_f64_lossy();
    let bound = p_bound.min(xf.floor().min(u64::MAX as f64) as u64);
    let primes = primes_up_to(bound);
    let log = sum_over_primes(&primes, |p| {
        let s = LocalSeries::<T>::new(f, p, default_cutoff(p))?;
        Ok(s.delta().ln())
    })?;
    let k = T::of(kappa);
    let constant = (-T::euler_gamma() * k).exp() / T::of(gamma(kappa));
    Ok(constant * x / x.ln() * log.re.exp())
}
