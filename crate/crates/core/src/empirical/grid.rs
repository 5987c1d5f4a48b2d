use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

/// Ordered rational thresholds `u = num/den` in `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdGrid {
    points: Vec<Ratio<u64>>,
}

impl ThresholdGrid {
    /// Validates strict increase and `0 <= u <= 1`. `Ratio` keeps fractions reduced.
    pub fn new(points: Vec<Ratio<u64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::param("grid", "no thresholds"));
        }
        if let Some(u) = points.iter().find(|u| **u > Ratio::from_integer(1)) {
            return Err(Error::param("grid", format!("threshold {u} exceeds 1")));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::param("grid", "thresholds must be strictly increasing"));
        }
        Ok(ThresholdGrid { points })
    }

    /// `k/200` for `k = 0..=200` (this already contains `1/2`).
    pub fn default_grid() -> Self {
        let mut pts: Vec<Ratio<u64>> = (0..=200).map(|k| Ratio::new(k, 200)).collect();
        pts.push(Ratio::new(1, 2));
        pts.sort();
        pts.dedup();
        ThresholdGrid { points: pts }
    }

    /// `k/n` for `k = 0..=n`.
    pub fn uniform(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("grid", "uniform grid needs n >= 1"));
        }
        Ok(ThresholdGrid { points: (0..=n).map(|k| Ratio::new(k, n)).collect() })
    }

    /// `{1/2, 1}`.
    pub fn half() -> Self {
        ThresholdGrid { points: vec![Ratio::new(1, 2), Ratio::from_integer(1)] }
    }

    pub fn single(u: Ratio<u64>) -> Result<Self> {
        Self::new(vec![u])
    }

    pub fn points(&self) -> &[Ratio<u64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn position(&self, u: &Ratio<u64>) -> Option<usize> {
        self.points.binary_search(u).ok()
    }

    /// Index of the first threshold with `n/σ <= u`, i.e. `n·den <= num·σ`;
    /// `len()` when none qualifies. Integer exact.
    #[inline]
    pub fn bucket(&self, n: u64, sigma: u64) -> usize {
        self.points.partition_point(|u| !qualifies(n, sigma, u))
    }
}

/// `n/σ <= u`, exact.
#[inline]
pub fn qualifies(n: u64, sigma: u64, u: &Ratio<u64>) -> bool {
    (n as u128) * (*u.denom() as u128) <= (*u.numer() as u128) * (sigma as u128)
}

/// Parses `a/b`, an integer, or a plain decimal (`0.35` becomes `7/20`).
pub fn parse_rational(s: &str) -> Result<Ratio<u64>> {
    let s = s.trim();
    let bad = || Error::param("threshold", format!("`{s}` is not a nonnegative rational"));
    if let Some((a, b)) = s.split_once('/') {
        let a: u64 = a.trim().parse().map_err(|_| bad())?;
        let b: u64 = b.trim().parse().map_err(|_| bad())?;
        if b == 0 {
            return Err(Error::param("threshold", "zero denominator"));
        }
        return Ok(Ratio::new(a, b));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    if frac.len() > 18 {
        return Err(bad());
    }
    let den = 10u64.pow(frac.len() as u32);
    let int_v: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
    let frac_v: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
    let num = int_v.checked_mul(den).and_then(|v| v.checked_add(frac_v)).ok_or_else(bad)?;
    let g = num.gcd(&den);
    Ok(Ratio::new_raw(num / g, den / g))
}

impl FromStr for ThresholdGrid {
    type Err = Error;

    /// `default`, `half`, `uniform:N`, or `list:u1,u2,...` (the `list:`
    /// prefix is optional).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "default" => return Ok(Self::default_grid()),
            "half" => return Ok(Self::half()),
            _ => {}
        }
        if let Some(n) = s.strip_prefix("uniform:") {
            let n = n.trim().parse().map_err(|_| Error::param("grid", format!("bad uniform count `{n}`")))?;
            return Self::uniform(n);
        }
        let body = s.strip_prefix("list:").unwrap_or(s);
        let mut pts = body.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        pts.sort();
        pts.dedup();
        Self::new(pts)
    }
}
