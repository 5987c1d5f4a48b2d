use num_complex::Complex;
use num_rational::Ratio;

use super::grid::qualifies;
use crate::error::Result;
use crate::multfunc::MultFunc;
use crate::scalar::Real;
use crate::sieve::{fold_over_range, ExactSum, FoldOptions, RangeVisitor, SieveItem};

#[derive(Clone, Copy, Debug)]
pub struct PartialSummationCheck<T> {
    /// `(2/x²) Σ_{n<=x, n/σ(n)<=u} n f(n)`.
    pub lhs: Complex<T>,
    /// `(1/x) Σ_{n<=x, n/σ(n)<=u} f(n)`.
    pub rhs: Complex<T>,
}

struct PsumVisitor {
    u: Ratio<u64>,
    x: u64,
}

impl<T: Real> RangeVisitor<T> for PsumVisitor {
    /// (Σ f(n)·n/x, Σ f(n)) over qualifying n
    type Acc = (ExactSum, ExactSum);

    fn init(&self) -> Self::Acc {
        (ExactSum::ZERO, ExactSum::ZERO)
    }

    fn visit(&self, acc: &mut Self::Acc, it: &SieveItem<T>) {
        if qualifies(it.n, it.sigma, &self.u) {
            acc.0.push(it.value * T::of(it.n as f64 / self.x as f64));
            acc.1.push(it.value);
        }
    }

    fn combine(&self, a: Self::Acc, b: Self::Acc) -> Self::Acc {
        (a.0 + b.0, a.1 + b.1)
    }
}

/// Both sides of the `1/n`-weight removal, from one pass.
pub fn partial_summation_check<T: Real>(
    f: &MultFunc,
    x: u64,
    u: Ratio<u64>,
    opts: &FoldOptions,
) -> Result<PartialSummationCheck<T>> {
    let (wn, w) = fold_over_range::<T, _>(f, x, &PsumVisitor { u, x }, opts)?;
    let xt = T::of_u64(x);
    let two = T::of(2.0);
    Ok(PartialSummationCheck { lhs: wn.value::<T>()? * (two / xt), rhs: w.value::<T>()? / xt })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_one_at_u_one() {
        let x = 1000u64;
        let c = partial_summation_check::<f64>(&MultFunc::one(), x, Ratio::from_integer(1), &FoldOptions::default())
            .unwrap();
        assert!((c.lhs.re - (x + 1) as f64 / x as f64).abs() < 1e-14);
        assert_eq!(c.rhs.re, 1.0);
    }
}
