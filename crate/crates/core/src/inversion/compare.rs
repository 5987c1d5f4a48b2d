use num_rational::Ratio;

use super::gil_pelaez::InvertedCdf;
use crate::empirical::WeightedCdfEstimate;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Default finite-`x` budget attached to sieve estimates.
pub const EMPIRICAL_BUDGET: f64 = 1.5e-3;

/// A distribution function sampled at increasing points of the
/// `log(n/σ(n))` axis, with a declared error budget.
#[derive(Clone, Debug)]
pub struct CdfSamples<T> {
    pub points: Vec<T>,
    pub values: Vec<T>,
    pub budget: T,
}

impl<T: Real> CdfSamples<T> {
    pub fn new(points: Vec<T>, values: Vec<T>, budget: T) -> Result<Self> {
        if points.len() != values.len() {
            return Err(Error::param("values", "length differs from the points"));
        }
        if points.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::param("points", "must be strictly increasing"));
        }
        Ok(CdfSamples { points, values, budget })
    }

    /// Real parts of the estimate at `log u`; `u = 0` is dropped.
    pub fn from_estimate(e: &WeightedCdfEstimate<T>, budget: T) -> Self {
        let zero = Ratio::from_integer(0);
        let (points, values) = e
            .grid
            .points()
            .iter()
            .zip(&e.values)
            .filter(|(u, _)| **u != zero)
            .map(|(u, v)| (T::of((*u.numer() as f64 / *u.denom() as f64).ln()), v.re))
            .unzip();
        CdfSamples { points, values, budget }
    }

    /// Cleaned values of an inversion, budget = its slack.
    pub fn from_inverted(inv: &InvertedCdf<T>) -> Self {
        let mut pairs: Vec<(T, T)> = inv.points.iter().copied().zip(inv.values.iter().copied()).collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite points"));
        pairs.dedup_by(|a, b| a.0 == b.0);
        let (points, values) = pairs.into_iter().unzip();
        CdfSamples { points, values, budget: inv.slack }
    }

    /// Linear interpolation; `None` outside the sampled range.
    pub fn interpolate(&self, x: T) -> Option<T> {
        let n = self.points.len();
        if n == 0 || x < self.points[0] || x > self.points[n - 1] {
            return None;
        }
        let i = self.points.partition_point(|&p| p < x);
        if self.points[i] == x {
            return Some(self.values[i]);
        }
        let (x0, x1) = (self.points[i - 1], self.points[i]);
        let (y0, y1) = (self.values[i - 1], self.values[i]);
        Some(y0 + (y1 - y0) * (x - x0) / (x1 - x0))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SupDistance<T> {
    pub value: T,
    /// Point of `a` where the maximum is attained.
    pub at: T,
    pub compared: usize,
    pub budget_a: T,
    pub budget_b: T,
}

/// `max |a(x) - b(x)|` over the points of `a` inside the range of `b`, with
/// `b` interpolated linearly.
pub fn sup_distance<T: Real>(a: &CdfSamples<T>, b: &CdfSamples<T>) -> Result<SupDistance<T>> {
    let mut best = (T::zero(), T::nan());
    let mut compared = 0;
    for (&x, &ya) in a.points.iter().zip(&a.values) {
        if let Some(yb) = b.interpolate(x) {
            compared += 1;
            let d = (ya - yb).abs();
            if compared == 1 || d > best.0 {
                best = (d, x);
            }
        }
    }
    if compared == 0 {
        return Err(Error::DisjointSupports);
    }
    Ok(SupDistance { value: best.0, at: best.1, compared, budget_a: a.budget, budget_b: b.budget })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_inputs() {
        let a = CdfSamples::new(vec![-2.0, -1.0, 0.0], vec![0.1, 0.4, 1.0], 0.0).unwrap();
        assert_eq!(sup_distance(&a, &a).unwrap().value, 0.0);
    }

    #[test]
    fn interpolation_and_disjoint() {
        let a = CdfSamples::new(vec![-1.0, 0.0], vec![0.0, 1.0], 0.0).unwrap();
        assert_eq!(a.interpolate(-0.25), Some(0.75));
        let b = CdfSamples::new(vec![1.0, 2.0], vec![0.0, 1.0], 0.0).unwrap();
        assert!(matches!(sup_distance(&a, &b), Err(Error::DisjointSupports)));
        let c = CdfSamples::new(vec![-0.5f64], vec![0.2], 0.0).unwrap();
        let d = sup_distance(&c, &a).unwrap();
        assert!((d.value - 0.3).abs() < 1e-15);
        assert_eq!(d.compared, 1);
    }
}
