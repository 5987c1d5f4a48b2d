use num_bigint::BigUint;
use num_complex::Complex;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::multfunc::MultFunc;
use crate::primes::primes_up_to;

/// Squarefree `m` with `f(m) > 0` and `v < m/σ(m) <= u`.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub m: BigUint,
    pub primes: Vec<u64>,
    /// `m/σ(m)`, exact.
    pub ratio: BigRational,
    pub f_value: Complex<f64>,
}

impl Witness {
    /// `m/σ(m)` rounded to `f64`.
    pub fn ratio_f64(&self) -> f64 {
        self.ratio.to_f64().unwrap_or(f64::NAN)
    }
}

/// Greedy search over primes with `f(p) > 0`, smallest first. A prime is
/// taken while the ratio is above `u`; primes that would carry it to `v` or
/// below are passed over.
pub fn greedy_witness(f: &MultFunc, v: Ratio<u64>, u: Ratio<u64>, p_cap: u64) -> Result<Witness> {
    if !(v < u && u <= Ratio::from_integer(1)) {
        return Err(Error::param("v, u", format!("need 0 <= v < u <= 1, got v = {v}, u = {u}")));
    }
    let (vn, vd) = (BigUint::from(*v.numer()), BigUint::from(*v.denom()));
    let (un, ud) = (BigUint::from(*u.numer()), BigUint::from(*u.denom()));
    // ratio m/σ(m) kept as an unreduced pair
    let mut m = BigUint::one();
    let mut s = BigUint::one();
    let mut taken = Vec::new();
    let mut fm = Complex::new(1.0, 0.0);
    let mut primes = primes_up_to(p_cap).into_iter().map(u64::from);
    while &m * &ud > &un * &s {
        let Some(p) = primes.next() else {
            return Err(Error::WitnessNotFound(p_cap));
        };
        let fp = f.eval_prime_power::<f64>(p, 1);
        if !(fp.im == 0.0 && fp.re > 0.0) {
            continue;
        }
        let (m2, s2) = (&m * p, &s * (p + 1));
        if &m2 * &vd <= &vn * &s2 {
            continue;
        }
        m = m2;
        s = s2;
        fm *= fp;
        taken.push(p);
    }
    let ratio = BigRational::new(m.clone().into(), s.into());
    Ok(Witness { m, primes: taken, ratio, f_value: fm })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let w = greedy_witness(&MultFunc::one(), Ratio::from_integer(0), Ratio::from_integer(1), 100).unwrap();
        assert_eq!(w.m, BigUint::one());
        let w = greedy_witness(&MultFunc::one(), Ratio::new(2, 5), Ratio::new(1, 2), 100).unwrap();
        assert_eq!(w.m, BigUint::from(6u32));
        assert_eq!(w.ratio, BigRational::new(1.into(), 2.into()));
        let s: MultFunc = "two_squares_indicator".parse().unwrap();
        let w = greedy_witness(&s, Ratio::new(2, 5), Ratio::new(1, 2), 100).unwrap();
        assert_eq!(w.m, BigUint::from(2210u32));
        assert_eq!(w.primes, vec![2, 5, 13, 17]);
        assert_eq!(w.ratio, BigRational::new(2210.into(), 4536.into()));
    }

    #[test]
    fn exhausted_cap() {
        assert!(matches!(
            greedy_witness(&MultFunc::one(), Ratio::new(1, 100), Ratio::new(1, 50), 50),
            Err(Error::WitnessNotFound(50))
        ));
        assert!(greedy_witness(&MultFunc::one(), Ratio::new(1, 2), Ratio::new(1, 2), 50).is_err());
    }
}
