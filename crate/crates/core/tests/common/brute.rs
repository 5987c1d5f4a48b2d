//! Naive `O(x·d(n))` counterparts of every empirical operation.

use ddl::empirical::*;
use ddl::sieve::{FoldOptions, SigmaTable};
use ddl::{Complex64, Ratio};

use super::{divisors, naive};

pub struct Mismatch(pub String);

fn le(n: u64, s: u64, u: &Ratio<u64>) -> bool {
    n as u128 * *u.denom() as u128 <= *u.numer() as u128 * s as u128
}

fn check_sum(what: &str, got: Complex64, want: Complex64, scale: f64, out: &mut Vec<Mismatch>) {
    if (got - want).norm() > 1e-12 * scale.max(1.0) {
        out.push(Mismatch(format!("{what}: sieve {got} vs naive {want}")));
    }
}

/// Every empirical operation against the naive loop at cutoff `x`. Returns
/// the list of mismatches (empty on success) and the number of comparisons.
pub fn compare_all(x: u64) -> (Vec<Mismatch>, usize) {
    let sig: Vec<u64> = (0..=x).map(|n| if n == 0 { 0 } else { divisors(n).iter().sum() }).collect();
    let grid = ThresholdGrid::default_grid();
    let opts = FoldOptions::with_segment_size(997);
    let mut bad = Vec::new();
    let mut checks = 0;
    let funcs = super::catalog_with_modifiers();
    let half = Ratio::new(1, 2);
    for f in &funcs {
        let vals: Vec<Complex64> =
            (0..=x).map(|n| if n == 0 { Complex64::new(0.0, 0.0) } else { naive(f, n) }).collect();
        let scale: f64 = vals.iter().map(|v| v.norm()).sum();
        let df = estimate_df::<f64>(f, x, &grid, &opts).unwrap();
        let total: Complex64 = vals.iter().sum();
        for (k, u) in grid.points().iter().enumerate() {
            let mut c = 0u64;
            let mut s = Complex64::new(0.0, 0.0);
            for n in 1..=x {
                if le(n, sig[n as usize], u) {
                    c += 1;
                    s += vals[n as usize];
                }
            }
            checks += 2;
            if df.counts[k] != c {
                bad.push(Mismatch(format!("{f} count at {u}: {} vs {c}", df.counts[k])));
            }
            check_sum(&format!("{f} raw at {u}"), df.raw[k], s, scale, &mut bad);
        }
        checks += 1;
        check_sum(&format!("{f} S(f;x)"), df.total, total, scale, &mut bad);
        if f.is_nonnegative() && total.re > 0.0 {
            let dt = estimate_dtilde::<f64>(f, x, &grid, &opts).unwrap();
            for (k, r) in df.raw.iter().enumerate() {
                checks += 1;
                check_sum(&format!("{f} dtilde"), dt.values[k], r / total.re, 1.0, &mut bad);
            }
        }

        let m = 10;
        let sm = smoothed_estimate::<f64>(f, x, half, m, &opts).unwrap();
        let mut want = Complex64::new(0.0, 0.0);
        for n in 1..=x {
            let r = n as f64 / sig[n as usize] as f64;
            let w = if le(n, sig[n as usize], &half) { 1.0 } else { (1.0 - m as f64 * (r - 0.5)).max(0.0) };
            want += vals[n as usize] * w;
        }
        checks += 1;
        check_sum(&format!("{f} smoothed"), sm.value * x as f64, want, scale, &mut bad);

        let ps = partial_summation_check::<f64>(f, x, half, &opts).unwrap();
        let mut wn = Complex64::new(0.0, 0.0);
        for n in 1..=x {
            if le(n, sig[n as usize], &half) {
                wn += vals[n as usize] * n as f64;
            }
        }
        checks += 1;
        check_sum(&format!("{f} psum"), ps.lhs * (x as f64 * x as f64 / 2.0), wn, scale * x as f64, &mut bad);

        if total.norm() > 0.0 {
            let ts = [1.0, 2.5];
            let cf = empirical_charfn::<f64>(f, x, &ts, &opts).unwrap();
            for (k, &t) in ts.iter().enumerate() {
                let mut s = Complex64::new(0.0, 0.0);
                for n in 1..=x {
                    let th = t * (n as f64 / sig[n as usize] as f64).ln();
                    s += vals[n as usize] * Complex64::new(th.cos(), th.sin());
                }
                checks += 1;
                check_sum(&format!("{f} charfn at {t}"), cf.phi[k] * total, s, scale, &mut bad);
            }
        }
    }

    for (mode, q) in [(EquidistMode::OmegaModQ, 3u64), (EquidistMode::CoprimeClasses, 4)] {
        let tally = equidist_tally(mode, q, half, x, &opts).unwrap();
        let mut want = vec![0u64; q as usize];
        for n in 1..=x {
            if !le(n, sig[n as usize], &half) {
                continue;
            }
            match mode {
                EquidistMode::OmegaModQ => {
                    let om: u32 = super::factor(n).iter().map(|&(_, j)| j).sum();
                    want[(om as u64 % q) as usize] += 1;
                }
                EquidistMode::CoprimeClasses => {
                    if super::gcd(n, q) == 1 {
                        want[(n % q) as usize] += 1;
                    }
                }
            }
        }
        checks += 1;
        if tally.counts != want {
            bad.push(Mismatch(format!("equidist {mode} q={q}: {:?} vs {want:?}", tally.counts)));
        }
    }

    let table = SigmaTable::build(x, 997).unwrap();
    let lat = lattice_two_squares::<f64>(x, &grid, &table).unwrap();
    let r = (x as f64).sqrt() as i64 + 1;
    for (k, u) in grid.points().iter().enumerate() {
        let mut c = 0u64;
        for a in -r..=r {
            for b in -r..=r {
                let n = (a * a + b * b) as u64;
                if n > 0 && n <= x && le(n, sig[n as usize], u) {
                    c += 1;
                }
            }
        }
        checks += 1;
        if lat.counts[k] != c {
            bad.push(Mismatch(format!("lattice at {u}: {} vs {c}", lat.counts[k])));
        }
    }
    (bad, checks)
}
