use num_complex::Complex;
use rayon::prelude::*;

use super::local::{checked_cutoff, LocalSeries};
use super::tail::{prime_square_tail, CHARFN_TAIL_CONSTANT};
use crate::error::{Error, Result};
use crate::multfunc::MultFunc;
use crate::primes::primes_up_to;
use crate::scalar::{cis, ln_1p_complex, Real};

/// Points per block sharing one rotation chain.
const BLOCK: usize = 256;

/// Truncated product `ψ(t) = Π_{p<=P} α_p(t)/Δ_p` on a grid of `t`.
#[derive(Clone, Debug)]
pub struct CharFnProfile<T> {
    pub f: String,
    pub t: Vec<T>,
    pub psi: Vec<Complex<T>>,
    /// Per-point truncation estimate.
    pub tail_bound: Vec<T>,
    pub p_bound: u64,
    /// Series cutoff; `None` means the per-prime default.
    pub cutoff: Option<u32>,
    /// Mean of the truncated limit variable, i.e. `-i ψ'(0)`.
    pub mean_log: T,
}

impl<T: Real> CharFnProfile<T> {
    /// Largest `|t|` on the grid.
    pub fn t_max(&self) -> T {
        self.t.iter().fold(T::zero(), |m, t| m.max(t.abs()))
    }

    /// Builds a profile from given values, e.g. a known closed form.
    pub fn from_values(f: impl Into<String>, t: Vec<T>, psi: Vec<Complex<T>>, mean_log: T) -> Result<Self> {
        if t.len() != psi.len() {
            return Err(Error::param("psi", "length differs from the t grid"));
        }
        let tail_bound = vec![T::zero(); t.len()];
        Ok(CharFnProfile { f: f.into(), t, psi, tail_bound, p_bound: 0, cutoff: None, mean_log })
    }
}

/// `n` equally spaced points from `a` to `b` inclusive.
pub fn linspace<T: Real>(a: T, b: T, n: usize) -> Vec<T> {
    match n {
        0 => vec![],
        1 => vec![a],
        _ => {
            let h = (b - a) / T::of_u64(n as u64 - 1);
            (0..n).map(|k| a + h * T::of_u64(k as u64)).collect()
        }
    }
}

/// Log of the truncated product on one block of the grid.
fn block_log<T: Real>(series: &[(LocalSeries<T>, Complex<T>)], t: &[T]) -> Vec<Complex<T>> {
    let zero = Complex::new(T::zero(), T::zero());
    let mut acc = vec![zero; t.len()];
    let uniform = uniform_step(t);
    let mut tmp = vec![zero; t.len()];
    for (s, delta) in series {
        tmp.iter_mut().for_each(|v| *v = zero);
        for j in 1..s.weight.len() {
            let w = s.weight[j];
            if w == zero {
                continue;
            }
            let l = s.log_ratio[j];
            match uniform {
                Some(h) => {
                    let rot = cis(h * l);
                    let mut cur = cis(t[0] * l);
                    for v in tmp.iter_mut() {
                        *v = *v + w * (cur - Complex::new(T::one(), T::zero()));
                        cur = cur * rot;
                    }
                }
                None => {
                    for (v, &tk) in tmp.iter_mut().zip(t) {
                        *v = *v + w * crate::scalar::cis_minus_one(tk * l);
                    }
                }
            }
        }
        for (a, v) in acc.iter_mut().zip(&tmp) {
            *a = *a + ln_1p_complex(*v / delta);
        }
    }
    acc
}

/// Common spacing of a block when it is equally spaced to rounding.
fn uniform_step<T: Real>(t: &[T]) -> Option<T> {
    if t.len() < 3 {
        return None;
    }
    let h = (t[t.len() - 1] - t[0]) / T::of_u64(t.len() as u64 - 1);
    let tol = T::of(1e-12);
    let ok = t
        .iter()
        .enumerate()
        .all(|(k, &tk)| (tk - (t[0] + h * T::of_u64(k as u64))).abs() <= tol * (T::one() + tk.abs()));
    ok.then_some(h)
}

/// `ψ(t)` for nonnegative `f` on every grid point, with per-point tail
/// estimate `C Σ_{p>P} (1+|t|)/p² + Σ_{p>P} η_p` (`C = 2`).
pub fn psi<T: Real>(f: &MultFunc, t: &[T], p_bound: u64, cutoff: Option<u32>) -> Result<CharFnProfile<T>> {
    if !f.is_nonnegative() {
        return Err(Error::NotNonnegative(f.to_string()));
    }
    if t.iter().any(|t| !t.is_finite()) {
        return Err(Error::param("t", "grid must be finite"));
    }
    if let Some(j) = cutoff {
        checked_cutoff(2, Some(j))?;
    }
    let primes = primes_up_to(p_bound);
    let series = primes
        .par_iter()
        .map(|&p| {
            let p = p as u64;
            let s = LocalSeries::<T>::new(f, p, checked_cutoff(p, cutoff)?)?;
            let d = s.delta();
            Ok((s, d))
        })
        .collect::<Result<Vec<_>>>()?;

    let blocks: Vec<&[T]> = t.chunks(BLOCK).collect();
    let logs: Vec<Vec<Complex<T>>> = blocks.par_iter().map(|b| block_log(&series, b)).collect();
    let psi: Vec<Complex<T>> = logs
        .into_iter()
        .flatten()
        .zip(t)
        .map(|(l, &tk)| if tk == T::zero() { Complex::new(T::one(), T::zero()) } else { l.exp() })
        .collect();

    let mean_log = series.iter().fold(T::zero(), |m, (s, d)| m + s.mean_log(*d).re);
    let s2 = prime_square_tail(p_bound);
    let eta = f.tail_model().eta;
    let tail_bound = t
        .iter()
        .map(|tk| {
            if *tk == T::zero() {
                T::zero()
            } else {
                T::of((CHARFN_TAIL_CONSTANT * (1.0 + tk.abs().to_f64_lossy()) + eta) * s2)
            }
        })
        .collect();
    Ok(CharFnProfile { f: f.to_string(), t: t.to_vec(), psi, tail_bound, p_bound, cutoff, mean_log })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_at_zero_and_symmetry() {
        let t = linspace(-10.0f64, 10.0, 401);
        let pr = psi(&MultFunc::one(), &t, 10_000, None).unwrap();
        assert_eq!(pr.psi[200], Complex::new(1.0, 0.0));
        for k in 0..401 {
            assert!((pr.psi[k] - pr.psi[400 - k].conj()).norm() < 1e-12);
            assert!(pr.psi[k].norm() <= 1.0 + pr.tail_bound[k] + 1e-12);
        }
    }

    #[test]
    fn rotation_matches_direct() {
        let t = linspace(0.0f64, 50.0, 1001);
        let a = psi(&"tau".parse().unwrap(), &t, 5_000, None).unwrap();
        let pick = [t[3], t[517], t[1000]];
        let b = psi(&"tau".parse().unwrap(), &pick, 5_000, None).unwrap();
        for (k, i) in [3usize, 517, 1000].into_iter().enumerate() {
            assert!((a.psi[i] - b.psi[k]).norm() < 1e-11);
        }
    }

    #[test]
    fn rejects_signed() {
        assert!(matches!(psi::<f64>(&"mu".parse().unwrap(), &[1.0], 100, None), Err(Error::NotNonnegative(_))));
    }
}
