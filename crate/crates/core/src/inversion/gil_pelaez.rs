use num_complex::Complex;
use rayon::prelude::*;

use crate::analytic::CharFnProfile;
use crate::error::{Error, Result};
use crate::scalar::{cis, Real};

pub const DEFAULT_TRUNCATION: f64 = 200.0;
pub const DEFAULT_STEP: f64 = 0.05;
/// Declared numerical slack on inverted values.
pub const DEFAULT_SLACK: f64 = 0.02;

/// Distribution function of `log(n/σ(n))` recovered from `ψ`.
#[derive(Clone, Debug)]
pub struct InvertedCdf<T> {
    /// Evaluation points in `log(n/σ(n))` coordinates.
    pub points: Vec<T>,
    /// Quadrature output before any cleanup.
    pub raw: Vec<T>,
    /// Clipped to `[0, 1]` and made nondecreasing.
    pub values: Vec<T>,
    pub truncation: T,
    pub step: T,
    pub slack: T,
    /// Every raw value lies in `[-slack, 1 + slack]`.
    pub within_slack: bool,
    /// Largest `raw[i] - raw[j]` over `points[i] < points[j]`.
    pub max_violation: T,
    /// Whether the isotonic pass changed anything.
    pub isotonic_adjusted: bool,
    /// Largest imaginary part of the symmetric-form integral.
    pub imag_residue: T,
}

/// Looks up `ψ(±t_k)` for `t_k = k·step`, `k = 0..=T/step`.
fn sample<T: Real>(profile: &CharFnProfile<T>, truncation: T, step: T) -> Result<(Vec<Complex<T>>, Vec<Complex<T>>)> {
    if !(step > T::zero()) || !(truncation > T::zero()) {
        return Err(Error::param("step", "T and step must be positive"));
    }
    let t_max = profile.t_max();
    if truncation > t_max * (T::one() + T::of(1e-12)) {
        return Err(Error::TruncationBeyondProfile { t: truncation.to_f64_lossy(), max: t_max.to_f64_lossy() });
    }
    let mut order: Vec<usize> = (0..profile.t.len()).collect();
    order.sort_by(|&a, &b| profile.t[a].partial_cmp(&profile.t[b]).expect("finite grid"));
    let sorted: Vec<T> = order.iter().map(|&i| profile.t[i]).collect();
    let tol = T::of(1e-9);
    let find = |t: T| -> Option<Complex<T>> {
        let i = sorted.partition_point(|&s| s < t);
        [i.wrapping_sub(1), i]
            .into_iter()
            .filter(|&k| k < sorted.len())
            .find(|&k| (sorted[k] - t).abs() <= tol * (T::one() + t.abs()))
            .map(|k| profile.psi[order[k]])
    };
    let n = (truncation / step).round().to_usize().unwrap_or(0);
    if n == 0 {
        return Err(Error::param("step", "step exceeds T"));
    }
    let mut pos = Vec::with_capacity(n + 1);
    let mut neg = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let t = step * T::of_u64(k as u64);
        let (p, m) = match (find(t), find(-t)) {
            (Some(p), Some(m)) => (p, m),
            (Some(p), None) => (p, p.conj()),
            (None, Some(m)) => (m.conj(), m),
            (None, None) => {
                return Err(Error::GridTooSparse(format!("no profile value at t = {}", t.to_f64_lossy())));
            }
        };
        pos.push(p);
        neg.push(m);
    }
    Ok((pos, neg))
}

/// Pool-adjacent-violators fit (nondecreasing), equal weights.
pub fn isotonic<T: Real>(y: &[T]) -> Vec<T> {
    let mut blocks: Vec<(T, usize)> = Vec::with_capacity(y.len());
    for &v in y {
        blocks.push((v, 1));
        while blocks.len() > 1 {
            let (b, nb) = blocks[blocks.len() - 1];
            let (a, na) = blocks[blocks.len() - 2];
            if a <= b {
                break;
            }
            blocks.pop();
            let n = na + nb;
            *blocks.last_mut().unwrap() =
                ((a * T::of_u64(na as u64) + b * T::of_u64(nb as u64)) / T::of_u64(n as u64), n);
        }
    }
    blocks.into_iter().flat_map(|(v, n)| std::iter::repeat_n(v, n)).collect()
}

/// `F(x₀) = 1/2 - (1/π) ∫₀ᵀ Im(e^{-itx₀} ψ(t))/t dt` by the trapezoid rule;
/// the `t = 0` integrand is its limit `E[X] - x₀`.
pub fn invert<T: Real>(profile: &CharFnProfile<T>, points: &[T], truncation: T, step: T) -> Result<InvertedCdf<T>> {
    invert_with_slack(profile, points, truncation, step, T::of(DEFAULT_SLACK))
}

pub fn invert_with_slack<T: Real>(
    profile: &CharFnProfile<T>,
    points: &[T],
    truncation: T,
    step: T,
    slack: T,
) -> Result<InvertedCdf<T>> {
    if points.is_empty() {
        return Err(Error::param("points", "no evaluation points"));
    }
    if points.iter().any(|x| !x.is_finite()) {
        return Err(Error::param("points", "must be finite"));
    }
    let (pos, neg) = sample(profile, truncation, step)?;
    let n = pos.len() - 1;
    let half = T::of(0.5);
    let eval = |x0: T| -> (T, T) {
        let mut re = (profile.mean_log - x0) * half;
        let mut im = T::zero();
        for k in 1..=n {
            let t = step * T::of_u64(k as u64);
            let w = if k == n { half } else { T::one() };
            let e = cis(-t * x0);
            let a = e * pos[k];
            let b = e.conj() * neg[k];
            // a - b = 2i Im(a) when ψ(-t) = conj ψ(t)
            let d = (a - b) / t;
            re = re + w * d.im * half;
            im = im + w * d.re * half;
        }
        let scale = step / T::PI();
        (half - scale * re, (scale * im).abs())
    };
    let out: Vec<(T, T)> = points.par_iter().map(|&x| eval(x)).collect();
    let raw: Vec<T> = out.iter().map(|o| o.0).collect();
    let imag_residue = out.iter().fold(T::zero(), |m, o| m.max(o.1));

    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].partial_cmp(&points[b]).expect("finite points"));
    let mut max_violation = T::zero();
    let mut running_max = T::neg_infinity();
    for &i in &order {
        max_violation = max_violation.max(running_max - raw[i]);
        running_max = running_max.max(raw[i]);
    }
    let within_slack = raw.iter().all(|&v| v >= -slack && v <= T::one() + slack);
    let clipped: Vec<T> = order.iter().map(|&i| raw[i].max(T::zero()).min(T::one())).collect();
    let fitted = isotonic(&clipped);
    let isotonic_adjusted = fitted != clipped;
    let mut values = vec![T::zero(); points.len()];
    for (k, &i) in order.iter().enumerate() {
        values[i] = fitted[k];
    }
    Ok(InvertedCdf {
        points: points.to_vec(),
        raw,
        values,
        truncation,
        step,
        slack,
        within_slack,
        max_violation,
        isotonic_adjusted,
        imag_residue,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::linspace;

    fn point_mass() -> CharFnProfile<f64> {
        let t = linspace(-200.0, 200.0, 8001);
        let psi = vec![Complex::new(1.0, 0.0); t.len()];
        CharFnProfile::from_values("point mass", t, psi, 0.0).unwrap()
    }

    #[test]
    fn degenerate_distribution() {
        let inv = invert(&point_mass(), &[-0.1, 0.1], 200.0, 0.05).unwrap();
        assert!(inv.raw[0].abs() < 0.02, "{}", inv.raw[0]);
        assert!((inv.raw[1] - 1.0).abs() < 0.02, "{}", inv.raw[1]);
        assert_eq!(inv.imag_residue, 0.0);
    }

    #[test]
    fn gaussian_profile() {
        // N(-1, 0.25): ψ(t) = exp(-it - t²/8)
        let t = linspace(0.0, 40.0, 801);
        let psi = t.iter().map(|&t| (Complex::new(-t * t / 8.0, -t)).exp()).collect();
        let p = CharFnProfile::from_values("normal", t, psi, -1.0).unwrap();
        let inv = invert(&p, &[-1.5, -1.0, -0.5], 40.0, 0.05).unwrap();
        let cdf = [0.158_655_253_931_457f64, 0.5, 0.841_344_746_068_543];
        for (a, b) in inv.raw.iter().zip(cdf) {
            assert!((a - b).abs() < 1e-6, "{a} vs {b}");
        }
        assert!(!inv.isotonic_adjusted);
    }

    #[test]
    fn sparse_or_short_profiles() {
        let p = point_mass();
        assert!(matches!(invert(&p, &[0.0], 300.0, 0.05), Err(Error::TruncationBeyondProfile { .. })));
        assert!(matches!(invert(&p, &[0.0], 200.0, 0.01), Err(Error::GridTooSparse(_))));
    }

    #[test]
    fn pav() {
        assert_eq!(isotonic(&[1.0, 3.0, 2.0, 4.0]), vec![1.0, 2.5, 2.5, 4.0]);
        assert_eq!(isotonic(&[3.0, 2.0, 1.0]), vec![2.0, 2.0, 2.0]);
    }
}
