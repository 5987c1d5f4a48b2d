use num_complex::Complex;

use super::local::{default_cutoff, LocalSeries};
use super::product::sum_over_primes;
use crate::error::{Error, Result};
use crate::multfunc::{MultFunc, ValueClass};
use crate::primes::primes_up_to;
use crate::scalar::{cis, Real};

/// Prime sums behind the density `κ`.
#[derive(Clone, Copy, Debug)]
pub struct KappaDiagnostic<T> {
    /// `(Σ_{p<=x} f(p) log p / p) / log x`.
    pub log_ratio: Complex<T>,
    /// `Σ_{p<=x} f(p)/p`.
    pub reciprocal_sum: Complex<T>,
}

pub fn mertens_kappa<T: Real>(f: &MultFunc, x: u64) -> Result<KappaDiagnostic<T>> {
    if x < 10 {
        return Err(Error::param("x", "must be at least 10"));
    }
    let primes = primes_up_to(x);
    let weighted = sum_over_primes(&primes, |p| {
        let pt = T::of_u64(p);
        Ok(f.eval_prime_power::<T>(p, 1) * (pt.ln() / pt))
    })?;
    let reciprocal = sum_over_primes(&primes, |p| Ok(f.eval_prime_power::<T>(p, 1) / T::of_u64(p)))?;
    Ok(KappaDiagnostic { log_ratio: weighted / T::of_u64(x).ln(), reciprocal_sum: reciprocal })
}

/// `Σ_{p<=P} (1 - Re(f(p) p^{-iβ}))/p`.
pub fn halasz_series<T: Real>(f: &MultFunc, beta: T, p_bound: u64) -> Result<T> {
    if f.value_class() != ValueClass::UnitDisc {
        return Err(Error::NotUnitDisc(f.to_string()));
    }
    let primes = primes_up_to(p_bound);
    let s = sum_over_primes(&primes, |p| {
        let pt = T::of_u64(p);
        let v = f.eval_prime_power::<T>(p, 1) * cis(-beta * pt.ln());
        Ok(Complex::new((T::one() - v.re) / pt, T::zero()))
    })?;
    Ok(s.re)
}

/// `Σ_{p<=P} (1 - d_p)` with `d_p` the largest atom `max_j f(p^j) p^{-j} / Δ_p`.
pub fn continuity_diagnostic<T: Real>(f: &MultFunc, p_bound: u64) -> Result<T> {
    if !f.is_nonnegative() {
        return Err(Error::NotNonnegative(f.to_string()));
    }
    let primes = primes_up_to(p_bound);
    let s = sum_over_primes(&primes, |p| {
        let s = LocalSeries::<T>::new(f, p, default_cutoff(p))?;
        let w: Vec<T> = s.weight.iter().map(|w| w.re).collect();
        let (k, _) = w
            .iter()
            .enumerate()
            .fold((0, T::neg_infinity()), |(bk, bv), (k, &v)| if v > bv { (k, v) } else { (bk, bv) });
        // sum of the other atoms, so that 1 - d_p keeps its precision
        let rest = w.iter().enumerate().filter(|(j, _)| *j != k).fold(T::zero(), |a, (_, &v)| a + v);
        let delta = w.iter().fold(T::zero(), |a, &v| a + v);
        Ok(Complex::new(rest / delta, T::zero()))
    })?;
    Ok(s.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halasz_trivial_and_mobius() {
        assert_eq!(halasz_series::<f64>(&MultFunc::one(), 0.0, 100_000).unwrap(), 0.0);
        let mu = halasz_series::<f64>(&"mu".parse().unwrap(), 0.0, 100_000).unwrap();
        assert!((mu - 5.40).abs() < 0.02, "{mu}");
        let l = halasz_series::<f64>(&"lambda:a=1,q=2".parse().unwrap(), 0.0, 100_000).unwrap();
        assert_eq!(l, mu);
        assert!(halasz_series::<f64>(&"tau".parse().unwrap(), 0.0, 100).is_err());
    }

    #[test]
    fn continuity_sums() {
        assert_eq!(continuity_diagnostic::<f64>(&MultFunc::one(), 1).unwrap(), 0.0);
        let one = continuity_diagnostic::<f64>(&MultFunc::one(), 100_000).unwrap();
        let recip: f64 = primes_up_to(100_000).iter().map(|&p| 1.0 / p as f64).sum();
        assert!((one - recip).abs() < 1e-12);
        let sq = continuity_diagnostic::<f64>(&"mu_squared".parse().unwrap(), 100_000).unwrap();
        let oracle: f64 = primes_up_to(100_000).iter().map(|&p| 1.0 / (p as f64 + 1.0)).sum();
        assert!((sq - oracle).abs() < 1e-12);
    }

    #[test]
    fn kappa_for_tau() {
        let k = mertens_kappa::<f64>(&"tau".parse().unwrap(), 1_000_000).unwrap();
        let lx = 1e6f64.ln();
        assert!((k.log_ratio.re - 2.0 * (1.0 - 1.33 / lx)).abs() < 0.02);
    }
}
