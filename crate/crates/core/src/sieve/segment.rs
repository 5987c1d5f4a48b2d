use num_complex::Complex;
use strength_reduce::StrengthReducedU32;

use crate::error::{Error, Result};
use crate::multfunc::MultFunc;
use crate::primes::{isqrt, primes_up_to};
use crate::scalar::Real;

/// Largest `hi` accepted by the sieve. Residues are held in `u32`.
pub const MAX_SIEVE_BOUND: u64 = u32::MAX as u64;

/// Every prime `<= limit`, in increasing order.
#[derive(Clone, Debug)]
pub struct BasePrimes {
    limit: u64,
    primes: Vec<u32>,
}

impl BasePrimes {
    pub fn up_to(limit: u64) -> Self {
        BasePrimes { limit, primes: primes_up_to(limit) }
    }

    /// Enough primes to sieve any segment ending at or below `hi`.
    pub fn for_range(hi: u64) -> Self {
        Self::up_to(isqrt(hi).max(2))
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    fn check_covers(&self, hi: u64) -> Result<()> {
        let need = isqrt(hi);
        if self.limit < need {
            return Err(Error::InsufficientBasePrimes { have: self.limit, need });
        }
        Ok(())
    }
}

/// Smallest-prime-factor, σ and Ω tables for `n` in `[lo, hi]`.
#[derive(Clone, Debug)]
pub struct SieveSegment {
    lo: u64,
    hi: u64,
    spf: Vec<u32>,
    sigma: Vec<u64>,
    big_omega: Vec<u8>,
}

/// Prime factorization as `(p, j)` pairs with strictly increasing `p`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Factorization(pub Vec<(u64, u32)>);

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.0
    }

    /// `Π p^j`.
    pub fn product(&self) -> u64 {
        self.0.iter().map(|&(p, j)| p.pow(j)).product()
    }

    pub fn big_omega(&self) -> u32 {
        self.0.iter().map(|&(_, j)| j).sum()
    }
}

impl SieveSegment {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.lo <= n && n <= self.hi
    }

    fn index(&self, n: u64) -> Result<usize> {
        if !self.contains(n) {
            return Err(Error::OutOfSegment { n, lo: self.lo, hi: self.hi });
        }
        Ok((n - self.lo) as usize)
    }

    pub fn sigma(&self, n: u64) -> Result<u64> {
        Ok(self.sigma[self.index(n)?])
    }

    /// Smallest prime factor; `spf(1) = 1`.
    pub fn spf(&self, n: u64) -> Result<u64> {
        Ok(self.spf[self.index(n)?] as u64)
    }

    pub fn big_omega(&self, n: u64) -> Result<u32> {
        Ok(self.big_omega[self.index(n)?] as u32)
    }

    pub fn sigma_table(&self) -> &[u64] {
        &self.sigma
    }

    pub(crate) fn big_omega_table(&self) -> &[u8] {
        &self.big_omega
    }

    /// Factor `n` by repeated smallest-prime-factor division. Cofactors that
    /// fall below the segment are finished by trial division.
    pub fn factorize(&self, n: u64) -> Result<Factorization> {
        let mut m = n;
        let mut out = Vec::new();
        let mut p = self.spf(n)?;
        while m > 1 {
            if self.contains(m) {
                p = self.spf[(m - self.lo) as usize] as u64;
            } else {
                p = next_divisor(m, p);
            }
            let mut j = 0;
            while m.is_multiple_of(p) {
                m /= p;
                j += 1;
            }
            out.push((p, j));
        }
        Ok(Factorization(out))
    }
}

/// Smallest prime factor of `m` that is `>= from`.
fn next_divisor(m: u64, from: u64) -> u64 {
    let mut d = from.max(2);
    if d == 2 {
        if m.is_multiple_of(2) {
            return 2;
        }
        d = 3;
    } else if d.is_multiple_of(2) {
        d += 1;
    }
    while d * d <= m {
        if m.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    m
}

/// σ and `f` on the powers of each base prime, shared by all segments of a run.
pub(crate) struct PrimePowerTables<T> {
    reducers: Vec<StrengthReducedU32>,
    /// `sigma[i][k] = σ(p_i^k)`
    sigma: Vec<Vec<u64>>,
    /// `values[i][k] = f(p_i^k)`, absent when `f = 1`.
    values: Option<Vec<Vec<Complex<T>>>>,
    primes: Vec<u32>,
}

impl<T: Real> PrimePowerTables<T> {
    pub(crate) fn new(base: &BasePrimes, hi: u64, f: Option<&MultFunc>) -> Self {
        let primes: Vec<u32> = base.primes().iter().copied().take_while(|&p| (p as u64) * (p as u64) <= hi).collect();
        let mut sigma = Vec::with_capacity(primes.len());
        let mut values = f.map(|_| Vec::with_capacity(primes.len()));
        for &p in &primes {
            let p = p as u64;
            let mut s = vec![1u64];
            let mut pk = 1u64;
            while pk <= hi / p {
                pk *= p;
                s.push(s.last().unwrap() + pk);
            }
            if let (Some(vals), Some(f)) = (values.as_mut(), f) {
                vals.push((0..s.len() as u32).map(|k| f.eval_prime_power::<T>(p, k)).collect::<Vec<_>>());
            }
            sigma.push(s);
        }
        PrimePowerTables {
            reducers: primes.iter().map(|&p| StrengthReducedU32::new(p)).collect(),
            sigma,
            values,
            primes,
        }
    }
}

/// Segment tables plus `f(n)` for every `n` (when requested).
pub(crate) struct ValuedSegment<T> {
    pub(crate) seg: SieveSegment,
    pub(crate) values: Option<Vec<Complex<T>>>,
}

pub(crate) fn sieve_segment<T: Real>(
    lo: u64,
    hi: u64,
    tables: &PrimePowerTables<T>,
    f: Option<&MultFunc>,
) -> ValuedSegment<T> {
    let len = (hi - lo + 1) as usize;
    let mut rem: Vec<u32> = (lo..=hi).map(|n| n as u32).collect();
    let mut sigma = vec![1u64; len];
    let mut spf = vec![0u32; len];
    let mut big_omega = vec![0u8; len];
    let one = Complex::new(T::one(), T::zero());
    let mut values = tables.values.as_ref().map(|_| vec![one; len]);

    for (i, &p) in tables.primes.iter().enumerate() {
        let p64 = p as u64;
        let red = &tables.reducers[i];
        let sig = &tables.sigma[i];
        let vals = tables.values.as_ref().map(|v| &v[i]);
        let mut m = lo.div_ceil(p64) * p64;
        while m <= hi {
            let idx = (m - lo) as usize;
            let mut r = rem[idx] / *red;
            let mut k = 1usize;
            loop {
                let (q, rr) = StrengthReducedU32::div_rem(r, *red);
                if rr != 0 {
                    break;
                }
                r = q;
                k += 1;
            }
            rem[idx] = r;
            sigma[idx] *= sig[k];
            if spf[idx] == 0 {
                spf[idx] = p;
            }
            big_omega[idx] += k as u8;
            if let (Some(values), Some(vals)) = (values.as_mut(), vals) {
                values[idx] = values[idx] * vals[k];
            }
            m += p64;
        }
    }

    for idx in 0..len {
        let q = rem[idx];
        if q > 1 {
            sigma[idx] *= q as u64 + 1;
            if spf[idx] == 0 {
                spf[idx] = q;
            }
            big_omega[idx] += 1;
            if let (Some(values), Some(f)) = (values.as_mut(), f) {
                values[idx] = values[idx] * f.eval_prime_power::<T>(q as u64, 1);
            }
        } else if spf[idx] == 0 {
            // n = 1
            spf[idx] = 1;
        }
    }

    ValuedSegment { seg: SieveSegment { lo, hi, spf, sigma, big_omega }, values }
}

pub(crate) fn check_bounds(lo: u64, hi: u64) -> Result<()> {
    if lo < 1 || lo > hi {
        return Err(Error::param("lo", format!("need 1 <= lo <= hi, got [{lo}, {hi}]")));
    }
    if hi > MAX_SIEVE_BOUND {
        return Err(Error::Overflow(format!("hi = {hi} exceeds the sieve bound {MAX_SIEVE_BOUND}")));
    }
    Ok(())
}

/// Sieve `[lo, hi]`. σ values are exact integers.
pub fn build_segment(lo: u64, hi: u64, primes: &BasePrimes) -> Result<SieveSegment> {
    check_bounds(lo, hi)?;
    primes.check_covers(hi)?;
    let tables = PrimePowerTables::<f64>::new(primes, hi, None);
    Ok(sieve_segment::<f64>(lo, hi, &tables, None).seg)
}

/// σ(n) for every `n` in `[1, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTable {
    /// `sigma[n - 1] = σ(n)`
    sigma: Vec<u64>,
}

impl SigmaTable {
    pub fn build(hi: u64, segment_size: usize) -> Result<Self> {
        check_bounds(1, hi)?;
        let base = BasePrimes::for_range(hi);
        let tables = PrimePowerTables::<f64>::new(&base, hi, None);
        let mut sigma = Vec::with_capacity(hi as usize);
        let step = segment_size.max(1) as u64;
        let mut lo = 1;
        while lo <= hi {
            let h = (lo + step - 1).min(hi);
            sigma.extend_from_slice(sieve_segment::<f64>(lo, h, &tables, None).seg.sigma_table());
            lo = h + 1;
        }
        Ok(SigmaTable { sigma })
    }

    pub(crate) fn from_vec(sigma: Vec<u64>) -> Self {
        SigmaTable { sigma }
    }

    pub fn hi(&self) -> u64 {
        self.sigma.len() as u64
    }

    /// σ(n) for `1 <= n <= hi`.
    #[inline]
    pub fn get(&self, n: u64) -> u64 {
        self.sigma[(n - 1) as usize]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.sigma
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divisor_sum(n: u64) -> u64 {
        (1..=n).filter(|d| n.is_multiple_of(*d)).sum()
    }

    #[test]
    fn sigma_examples() {
        let base = BasePrimes::for_range(1_000_000);
        let seg = build_segment(1, 20, &base).unwrap();
        assert_eq!(seg.sigma(12).unwrap(), 28);
        assert_eq!(build_segment(1, 1, &base).unwrap().sigma(1).unwrap(), 1);
        let seg = build_segment(999_990, 1_000_000, &base).unwrap();
        assert_eq!(seg.sigma(1_000_000).unwrap(), 2_480_437);
        assert_eq!(divisor_sum(1_000_000), 2_480_437);
    }

    #[test]
    fn factorize_examples() {
        let base = BasePrimes::for_range(10_000);
        let seg = build_segment(1, 10_000, &base).unwrap();
        assert_eq!(seg.factorize(360).unwrap().0, vec![(2, 3), (3, 2), (5, 1)]);
        assert!(seg.factorize(1).unwrap().0.is_empty());
        assert_eq!(seg.factorize(9973).unwrap().0, vec![(9973, 1)]);
        assert!(matches!(seg.factorize(10_001), Err(Error::OutOfSegment { .. })));
    }

    #[test]
    fn factorize_in_offset_segment() {
        let base = BasePrimes::for_range(2_000_000);
        let seg = build_segment(1_000_000, 1_000_100, &base).unwrap();
        for n in seg.lo()..=seg.hi() {
            let fz = seg.factorize(n).unwrap();
            assert_eq!(fz.product(), n);
            assert_eq!(fz.big_omega(), seg.big_omega(n).unwrap());
            assert_eq!(fz.0[0].0, seg.spf(n).unwrap());
            assert!(fz.0.windows(2).all(|w| w[0].0 < w[1].0));
        }
    }

    #[test]
    fn rejects_bad_ranges() {
        let base = BasePrimes::for_range(100);
        assert!(build_segment(0, 10, &base).is_err());
        assert!(build_segment(10, 5, &base).is_err());
        assert!(matches!(build_segment(1, 100_000, &base), Err(Error::InsufficientBasePrimes { .. })));
        let err = build_segment(1, MAX_SIEVE_BOUND + 1, &base).unwrap_err();
        assert!(err.is_resource_refusal());
    }

    #[test]
    fn sigma_table_matches_segments() {
        let t = SigmaTable::build(5_000, 777).unwrap();
        assert_eq!(t.hi(), 5_000);
        let seg = build_segment(1, 5_000, &BasePrimes::for_range(5_000)).unwrap();
        assert_eq!(t.as_slice(), seg.sigma_table());
    }
}
