use num_complex::Complex;

use crate::error::{Error, Result};
use crate::multfunc::MultFunc;
use crate::scalar::Real;
use crate::sieve::{fold_over_range, ExactSum, FoldOptions, RangeVisitor, SieveItem};

/// Empirical characteristic function of `log(n/σ(n))` weighted by `f`.
#[derive(Clone, Debug)]
pub struct EmpiricalCharFn<T> {
    pub x: u64,
    pub t: Vec<T>,
    /// `(1/S(f;x)) Σ_{n<=x} f(n) (n/σ(n))^{it}`.
    pub phi: Vec<Complex<T>>,
    pub total: Complex<T>,
}

struct CharFnVisitor<'a, T> {
    t: &'a [T],
}

impl<T: Real> RangeVisitor<T> for CharFnVisitor<'_, T> {
    type Acc = (Vec<ExactSum>, ExactSum);

    fn init(&self) -> Self::Acc {
        (vec![ExactSum::ZERO; self.t.len()], ExactSum::ZERO)
    }

    fn visit(&self, acc: &mut Self::Acc, it: &SieveItem<T>) {
        acc.1.push(it.value);
        if it.value.re == T::zero() && it.value.im == T::zero() {
            return;
        }
        let l = T::of((it.n as f64 / it.sigma as f64).ln());
        for (a, &t) in acc.0.iter_mut().zip(self.t) {
            let (s, c) = (t * l).sin_cos();
            a.push(it.value * Complex::new(c, s));
        }
    }

    fn combine(&self, mut a: Self::Acc, b: Self::Acc) -> Self::Acc {
        for (x, y) in a.0.iter_mut().zip(b.0) {
            *x += y;
        }
        (a.0, a.1 + b.1)
    }
}

/// One sieve pass evaluating the empirical characteristic function at every `t`.
pub fn empirical_charfn<T: Real>(f: &MultFunc, x: u64, t: &[T], opts: &FoldOptions) -> Result<EmpiricalCharFn<T>> {
    let (sums, total) = fold_over_range(f, x, &CharFnVisitor { t }, opts)?;
    let total: Complex<T> = total.value()?;
    if total.norm() == T::zero() {
        return Err(Error::ZeroNormalizer(x));
    }
    let phi = sums.iter().map(|s| s.value().map(|v: Complex<T>| v / total)).collect::<Result<_>>()?;
    Ok(EmpiricalCharFn { x, t: t.to_vec(), phi, total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::positive_pow;

    fn direct(n: u64, sigma: u64, t: f64) -> Complex<f64> {
        positive_pow(n as f64 / sigma as f64, Complex::new(0.0, t))
    }

    #[test]
    fn zero_frequency_is_one() {
        let e = empirical_charfn::<f64>(&MultFunc::one(), 5000, &[0.0, 1.0, -1.0], &FoldOptions::default()).unwrap();
        assert_eq!(e.phi[0], Complex::new(1.0, 0.0));
        assert!((e.phi[1] - e.phi[2].conj()).norm() < 1e-14);
        assert!(e.phi[1].norm() <= 1.0);
    }

    #[test]
    fn matches_direct_power() {
        let e = empirical_charfn::<f64>(&MultFunc::one(), 12, &[2.0], &FoldOptions::default()).unwrap();
        let sig = [1u64, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28];
        let s: Complex<f64> = (1..=12u64).map(|n| direct(n, sig[n as usize - 1], 2.0)).sum();
        assert!((e.phi[0] - s / 12.0).norm() < 1e-14);
    }
}
