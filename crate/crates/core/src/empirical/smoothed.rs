use num_complex::Complex;
use num_rational::Ratio;

use super::grid::qualifies;
use crate::error::{Error, Result};
use crate::multfunc::MultFunc;
use crate::scalar::Real;
use crate::sieve::{fold_over_range, ExactSum, FoldOptions, RangeVisitor, SieveItem};

/// Tent-smoothed estimate together with the sharp estimates at both ends of
/// the ramp, all from one pass and all divided by `x`.
#[derive(Clone, Copy, Debug)]
pub struct SmoothedEstimate<T> {
    pub value: Complex<T>,
    /// Sharp estimate at `u`.
    pub sharp_lower: Complex<T>,
    /// Sharp estimate at `u + 1/m`.
    pub sharp_upper: Complex<T>,
}

struct TentVisitor {
    num: u64,
    den: u64,
    m: u64,
}

impl<T: Real> RangeVisitor<T> for TentVisitor {
    /// (smoothed, sharp at u, sharp at u + 1/m)
    type Acc = [ExactSum; 3];

    fn init(&self) -> Self::Acc {
        [ExactSum::ZERO; 3]
    }

    fn visit(&self, acc: &mut Self::Acc, it: &SieveItem<T>) {
        let u = Ratio::new_raw(self.num, self.den);
        if qualifies(it.n, it.sigma, &u) {
            for a in acc.iter_mut() {
                a.push(it.value);
            }
            return;
        }
        // ramp end (num·m + den)/(den·m)
        let end_num = self.num as u128 * self.m as u128 + self.den as u128;
        let end_den = self.den as u128 * self.m as u128;
        let s = it.sigma as u128;
        let lhs = it.n as u128 * end_den;
        let rhs = end_num * s;
        if lhs <= rhs {
            acc[2].push(it.value);
        }
        if lhs < rhs {
            // weight 1 - m(n/σ - u) = ((num·m + den)σ - m·den·n) / (den·σ)
            let w_num = rhs - lhs;
            let w_den = self.den as u128 * s;
            let w = T::of(w_num as f64) / T::of(w_den as f64);
            acc[0].push(it.value * w);
        }
    }

    fn combine(&self, a: Self::Acc, b: Self::Acc) -> Self::Acc {
        [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
    }
}

/// `(1/x) Σ_{n<=x} f(n) ψ_m(n/σ(n))`, where `ψ_m` is 1 on `[0, u]`, falls
/// linearly to 0 on `[u, u + 1/m]` and vanishes beyond.
pub fn smoothed_estimate<T: Real>(
    f: &MultFunc,
    x: u64,
    u: Ratio<u64>,
    m: u64,
    opts: &FoldOptions,
) -> Result<SmoothedEstimate<T>> {
    if m == 0 {
        return Err(Error::param("m", "must be positive"));
    }
    let upper = u + Ratio::new(1, m);
    if upper >= Ratio::from_integer(1) {
        return Err(Error::param("m", format!("u + 1/m = {upper} must stay below 1")));
    }
    if u.denom().checked_mul(m).is_none() {
        return Err(Error::Overflow("u denominator times m".into()));
    }
    let v = TentVisitor { num: *u.numer(), den: *u.denom(), m };
    let acc = fold_over_range::<T, _>(f, x, &v, opts)?;
    let xt = T::of_u64(x);
    let [value, lower, upper] = acc.map(|a| a.value::<T>().map(|v| v / xt));
    Ok(SmoothedEstimate { value: value?, sharp_lower: lower?, sharp_upper: upper? })
}
