use num_complex::Complex;

use super::estimate::{Normalization, WeightedCdfEstimate};
use super::grid::ThresholdGrid;
use crate::error::{Error, Result};
use crate::primes::isqrt;
use crate::scalar::Real;
use crate::sieve::SigmaTable;

/// `(1/πR) #{(x, y) : 0 < x² + y² <= R, n/σ(n) <= u}` on every threshold,
/// enumerating lattice points directly.
pub fn lattice_two_squares<T: Real>(
    radius_sq: u64,
    grid: &ThresholdGrid,
    sigma: &SigmaTable,
) -> Result<WeightedCdfEstimate<T>> {
    if radius_sq == 0 {
        return Err(Error::param("R", "must be at least 1"));
    }
    if sigma.hi() < radius_sq {
        return Err(Error::SigmaTableTooSmall { have: sigma.hi(), need: radius_sq });
    }
    let mut buckets = vec![0u64; grid.len() + 1];
    let r = isqrt(radius_sq) as i64;
    for x in -r..=r {
        let x2 = (x * x) as u64;
        let ymax = isqrt(radius_sq - x2) as i64;
        for y in -ymax..=ymax {
            let n = x2 + (y * y) as u64;
            if n == 0 {
                continue;
            }
            buckets[grid.bucket(n, sigma.get(n))] += 1;
        }
    }
    let mut counts = Vec::with_capacity(grid.len());
    let mut c = 0u64;
    for b in &buckets[..grid.len()] {
        c += b;
        counts.push(c);
    }
    let total = c + buckets[grid.len()];
    let area = T::PI() * T::of_u64(radius_sq);
    let zero = T::zero();
    let raw: Vec<Complex<T>> = counts.iter().map(|&c| Complex::new(T::of_u64(c), zero)).collect();
    let values = raw.iter().map(|r| r / area).collect();
    Ok(WeightedCdfEstimate {
        x: radius_sq,
        grid: grid.clone(),
        raw,
        counts,
        total: Complex::new(T::of_u64(total), zero),
        normalization: Normalization::DiscArea,
        normalizer: area,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    #[test]
    fn unit_radius() {
        let t = SigmaTable::build(10, 16).unwrap();
        let e = lattice_two_squares::<f64>(1, &ThresholdGrid::half(), &t).unwrap();
        assert_eq!(e.count_at(&Ratio::from_integer(1)), Some(4));
        // n = 1 has n/σ(n) = 1 > 1/2
        assert_eq!(e.count_at(&Ratio::new(1, 2)), Some(0));
        let v = e.value_at(&Ratio::from_integer(1)).unwrap().re;
        assert!((v - 4.0 / std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn table_too_small() {
        let t = SigmaTable::build(10, 16).unwrap();
        assert!(matches!(
            lattice_two_squares::<f64>(11, &ThresholdGrid::half(), &t),
            Err(Error::SigmaTableTooSmall { have: 10, need: 11 })
        ));
    }
}
