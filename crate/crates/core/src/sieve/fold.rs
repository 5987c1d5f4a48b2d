use num_complex::Complex;
use rayon::prelude::*;

use super::exact::ExactSum;
use super::segment::{check_bounds, sieve_segment, BasePrimes, PrimePowerTables};
use crate::error::{Error, Result};
use crate::multfunc::MultFunc;
use crate::scalar::Real;

/// Default number of integers per segment.
pub const DEFAULT_SEGMENT_SIZE: usize = 1 << 22;

#[derive(Clone, Debug)]
pub struct FoldOptions {
    pub segment_size: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
}

impl Default for FoldOptions {
    fn default() -> Self {
        FoldOptions { segment_size: DEFAULT_SEGMENT_SIZE, workers: None }
    }
}

impl FoldOptions {
    pub fn with_segment_size(segment_size: usize) -> Self {
        FoldOptions { segment_size, ..Default::default() }
    }
}

/// One integer of the range as seen by a visitor.
#[derive(Clone, Copy, Debug)]
pub struct SieveItem<T> {
    pub n: u64,
    pub sigma: u64,
    pub value: Complex<T>,
    /// Ω(n), prime factors with multiplicity.
    pub big_omega: u32,
}

/// Accumulates over `n <= x`. `combine` must be associative; segments are
/// merged left to right so results do not depend on the worker count.
pub trait RangeVisitor<T: Real>: Sync {
    type Acc: Send;

    fn init(&self) -> Self::Acc;

    fn visit(&self, acc: &mut Self::Acc, item: &SieveItem<T>);

    fn combine(&self, left: Self::Acc, right: Self::Acc) -> Self::Acc;
}

/// Visit every `n <= x` exactly once with `(n, σ(n), f(n), Ω(n))`.
pub fn fold_over_range<T, V>(f: &MultFunc, x: u64, visitor: &V, opts: &FoldOptions) -> Result<V::Acc>
where
    T: Real,
    V: RangeVisitor<T>,
{
    if x == 0 {
        return Err(Error::param("x", "must be at least 1"));
    }
    check_bounds(1, x)?;
    if opts.segment_size == 0 {
        return Err(Error::param("segment_size", "must be positive"));
    }
    let base = BasePrimes::for_range(x);
    let f_opt = if f.is_one() { None } else { Some(f) };
    let tables = PrimePowerTables::<T>::new(&base, x, f_opt);
    let step = opts.segment_size as u64;
    let segments: Vec<(u64, u64)> = (0..x.div_ceil(step)).map(|s| (s * step + 1, ((s + 1) * step).min(x))).collect();

    let run = |&(lo, hi): &(u64, u64)| {
        let vs = sieve_segment::<T>(lo, hi, &tables, f_opt);
        let mut acc = visitor.init();
        let one = Complex::new(T::one(), T::zero());
        let seg = &vs.seg;
        let sigma = seg.sigma_table();
        let omega = seg.big_omega_table();
        for (i, n) in (lo..=hi).enumerate() {
            let item = SieveItem {
                n,
                sigma: sigma[i],
                value: vs.values.as_ref().map_or(one, |v| v[i]),
                big_omega: omega[i] as u32,
            };
            visitor.visit(&mut acc, &item);
        }
        acc
    };

    let parts: Vec<V::Acc> = match opts.workers {
        Some(1) => segments.iter().map(run).collect(),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::param("workers", e.to_string()))?;
            pool.install(|| segments.par_iter().map(run).collect())
        }
        None => segments.par_iter().map(run).collect(),
    };
    let mut it = parts.into_iter();
    let first = it.next().expect("x >= 1 gives at least one segment");
    Ok(it.fold(first, |a, b| visitor.combine(a, b)))
}

/// Visitor that applies a closure and sums its outputs exactly; read the
/// result with [`ExactSum::value`].
pub struct SumVisitor<F>(pub F);

impl<T, F> RangeVisitor<T> for SumVisitor<F>
where
    T: Real,
    F: Fn(&SieveItem<T>) -> Complex<T> + Sync,
{
    type Acc = ExactSum;

    fn init(&self) -> ExactSum {
        ExactSum::ZERO
    }

    fn visit(&self, acc: &mut ExactSum, item: &SieveItem<T>) {
        acc.push((self.0)(item));
    }

    fn combine(&self, a: ExactSum, b: ExactSum) -> ExactSum {
        a + b
    }
}

/// Counts the integers for which the predicate holds.
pub struct CountVisitor<F>(pub F);

impl<T, F> RangeVisitor<T> for CountVisitor<F>
where
    T: Real,
    F: Fn(&SieveItem<T>) -> bool + Sync,
{
    type Acc = u64;

    fn init(&self) -> u64 {
        0
    }

    fn visit(&self, acc: &mut u64, item: &SieveItem<T>) {
        *acc += (self.0)(item) as u64;
    }

    fn combine(&self, a: u64, b: u64) -> u64 {
        a + b
    }
}
