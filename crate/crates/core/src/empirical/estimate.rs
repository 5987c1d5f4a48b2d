use num_complex::Complex;
use num_rational::Ratio;

use super::grid::ThresholdGrid;
use crate::error::{Error, Result};
use crate::multfunc::MultFunc;
use crate::scalar::Real;
use crate::sieve::{fold_over_range, ExactSum, FoldOptions, RangeVisitor, SieveItem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Divide by the cutoff `x`.
    Cutoff,
    /// Divide by `S(f;x) = Σ_{n<=x} f(n)`.
    PartialSum,
    /// Divide by `πR` (lattice counts).
    DiscArea,
}

/// Per-threshold weighted sums and their normalized values.
#[derive(Clone, Debug)]
pub struct WeightedCdfEstimate<T> {
    /// Cutoff `x` (or `R` for lattice counts).
    pub x: u64,
    pub grid: ThresholdGrid,
    /// `Σ f(n)` over qualifying `n`, one per threshold.
    pub raw: Vec<Complex<T>>,
    /// Number of qualifying `n`, one per threshold.
    pub counts: Vec<u64>,
    /// `S(f;x)` from the same pass.
    pub total: Complex<T>,
    pub normalization: Normalization,
    pub normalizer: T,
    pub values: Vec<Complex<T>>,
}

impl<T: Real> WeightedCdfEstimate<T> {
    pub fn value_at(&self, u: &Ratio<u64>) -> Option<Complex<T>> {
        self.grid.position(u).map(|i| self.values[i])
    }

    pub fn raw_at(&self, u: &Ratio<u64>) -> Option<Complex<T>> {
        self.grid.position(u).map(|i| self.raw[i])
    }

    pub fn count_at(&self, u: &Ratio<u64>) -> Option<u64> {
        self.grid.position(u).map(|i| self.counts[i])
    }

    /// Real parts of the normalized values.
    pub fn real_values(&self) -> Vec<T> {
        self.values.iter().map(|v| v.re).collect()
    }
}

/// Prefix sums per threshold, their counts, and the full sum.
type Cumulated<T> = (Vec<Complex<T>>, Vec<u64>, Complex<T>);

/// Bucketed sums: bucket `k` holds `n` whose first qualifying threshold is
/// `k`; bucket `len` holds the rest.
#[derive(Clone, Debug)]
pub(crate) struct Buckets {
    pub(crate) weight: Vec<ExactSum>,
    pub(crate) count: Vec<u64>,
}

impl Buckets {
    pub(crate) fn new(len: usize) -> Self {
        Buckets { weight: vec![ExactSum::ZERO; len + 1], count: vec![0; len + 1] }
    }

    pub(crate) fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.weight.iter_mut().zip(other.weight) {
            *a += b;
        }
        for (a, b) in self.count.iter_mut().zip(other.count) {
            *a += b;
        }
        self
    }

    /// Prefix sums over the thresholds, plus the sum of every bucket.
    pub(crate) fn cumulate<T: Real>(&self) -> Result<Cumulated<T>> {
        let len = self.weight.len() - 1;
        let mut raw = Vec::with_capacity(len);
        let mut counts = Vec::with_capacity(len);
        let mut acc = ExactSum::ZERO;
        let mut c = 0u64;
        for k in 0..len {
            acc += self.weight[k];
            c += self.count[k];
            raw.push(acc.value()?);
            counts.push(c);
        }
        let total = (acc + self.weight[len]).value()?;
        Ok((raw, counts, total))
    }
}

pub(crate) struct CdfVisitor<'a> {
    pub(crate) grid: &'a ThresholdGrid,
}

impl<T: Real> RangeVisitor<T> for CdfVisitor<'_> {
    type Acc = Buckets;

    fn init(&self) -> Buckets {
        Buckets::new(self.grid.len())
    }

    #[inline]
    fn visit(&self, acc: &mut Buckets, item: &SieveItem<T>) {
        let k = self.grid.bucket(item.n, item.sigma);
        acc.weight[k].push(item.value);
        acc.count[k] += 1;
    }

    fn combine(&self, a: Buckets, b: Buckets) -> Buckets {
        a.merge(b)
    }
}

fn run<T: Real>(f: &MultFunc, x: u64, grid: &ThresholdGrid, opts: &FoldOptions) -> Result<Buckets> {
    fold_over_range::<T, _>(f, x, &CdfVisitor { grid }, opts)
}

fn assemble<T: Real>(
    x: u64,
    grid: &ThresholdGrid,
    (raw, counts, total): Cumulated<T>,
    normalization: Normalization,
    normalizer: T,
) -> WeightedCdfEstimate<T> {
    let values = raw.iter().map(|r| r / normalizer).collect();
    WeightedCdfEstimate { x, grid: grid.clone(), raw, counts, total, normalization, normalizer, values }
}

/// `(1/x) Σ_{n<=x, n/σ(n)<=u} f(n)` on every threshold, one sieve pass.
pub fn estimate_df<T: Real>(
    f: &MultFunc,
    x: u64,
    grid: &ThresholdGrid,
    opts: &FoldOptions,
) -> Result<WeightedCdfEstimate<T>> {
    let sums = run::<T>(f, x, grid, opts)?.cumulate()?;
    Ok(assemble(x, grid, sums, Normalization::Cutoff, T::of_u64(x)))
}

/// `(1/S(f;x)) Σ_{n<=x, n/σ(n)<=u} f(n)` with `S(f;x)` from the same pass,
/// so the `u = 1` entry is exactly 1.
pub fn estimate_dtilde<T: Real>(
    f: &MultFunc,
    x: u64,
    grid: &ThresholdGrid,
    opts: &FoldOptions,
) -> Result<WeightedCdfEstimate<T>> {
    if !f.is_nonnegative() {
        return Err(Error::NotNonnegative(f.to_string()));
    }
    let sums = run::<T>(f, x, grid, opts)?.cumulate()?;
    let total = sums.2.re;
    if total <= T::zero() {
        return Err(Error::ZeroNormalizer(x));
    }
    Ok(assemble(x, grid, sums, Normalization::PartialSum, total))
}
