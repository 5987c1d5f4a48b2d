use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;

use super::grid::qualifies;
use crate::error::{Error, Result};
use crate::multfunc::MultFunc;
use crate::scalar::Real;
use crate::sieve::{fold_over_range, FoldOptions, RangeVisitor, SieveItem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquidistMode {
    /// Class of `n` is `Ω(n) mod q`.
    OmegaModQ,
    /// Class of `n` is `n mod q`, over `n` coprime to `q`.
    CoprimeClasses,
}

impl FromStr for EquidistMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "omega" | "omega_mod_q" => Ok(EquidistMode::OmegaModQ),
            "coprime" | "coprime_classes" => Ok(EquidistMode::CoprimeClasses),
            _ => Err(Error::param("mode", format!("expected omega or coprime, got `{s}`"))),
        }
    }
}

impl fmt::Display for EquidistMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EquidistMode::OmegaModQ => "omega",
            EquidistMode::CoprimeClasses => "coprime",
        })
    }
}

#[derive(Clone, Debug)]
pub struct EquidistTally {
    pub mode: EquidistMode,
    pub q: u64,
    pub u: Ratio<u64>,
    pub x: u64,
    /// Qualifying `n` per class `0..q`. In coprime mode classes sharing a
    /// factor with `q` stay at zero.
    pub counts: Vec<u64>,
    /// All qualifying `n <= x`.
    pub qualifying: u64,
    /// Qualifying `n <= x` coprime to `q`.
    pub qualifying_coprime: u64,
}

impl EquidistTally {
    /// `counts[c] / x`.
    pub fn densities<T: Real>(&self) -> Vec<T> {
        let x = T::of_u64(self.x);
        self.counts.iter().map(|&c| T::of_u64(c) / x).collect()
    }

    /// Classes that take part in the partition.
    pub fn active_classes(&self) -> Vec<u64> {
        match self.mode {
            EquidistMode::OmegaModQ => (0..self.q).collect(),
            EquidistMode::CoprimeClasses => (0..self.q).filter(|c| c.gcd(&self.q) == 1).collect(),
        }
    }

    /// Sum of all class counts, equal to the partitioned total.
    pub fn class_sum(&self) -> u64 {
        self.counts.iter().sum()
    }
}

struct TallyVisitor {
    mode: EquidistMode,
    q: u64,
    u: Ratio<u64>,
}

impl<T: Real> RangeVisitor<T> for TallyVisitor {
    /// (class counts, qualifying, qualifying coprime)
    type Acc = (Vec<u64>, u64, u64);

    fn init(&self) -> Self::Acc {
        (vec![0; self.q as usize], 0, 0)
    }

    fn visit(&self, acc: &mut Self::Acc, it: &SieveItem<T>) {
        if !qualifies(it.n, it.sigma, &self.u) {
            return;
        }
        acc.1 += 1;
        let coprime = it.n.gcd(&self.q) == 1;
        acc.2 += coprime as u64;
        match self.mode {
            EquidistMode::OmegaModQ => acc.0[(it.big_omega as u64 % self.q) as usize] += 1,
            EquidistMode::CoprimeClasses if coprime => acc.0[(it.n % self.q) as usize] += 1,
            EquidistMode::CoprimeClasses => {}
        }
    }

    fn combine(&self, mut a: Self::Acc, b: Self::Acc) -> Self::Acc {
        for (x, y) in a.0.iter_mut().zip(b.0) {
            *x += y;
        }
        (a.0, a.1 + b.1, a.2 + b.2)
    }
}

/// `#{n <= x : n/σ(n) <= u}` split by class.
pub fn equidist_tally(mode: EquidistMode, q: u64, u: Ratio<u64>, x: u64, opts: &FoldOptions) -> Result<EquidistTally> {
    if q == 0 {
        return Err(Error::param("q", "must be at least 1"));
    }
    if q > 1 << 24 {
        return Err(Error::param("q", "too many classes"));
    }
    if u > Ratio::from_integer(1) {
        return Err(Error::param("u", format!("{u} exceeds 1")));
    }
    let v = TallyVisitor { mode, q, u };
    let (counts, qualifying, qualifying_coprime) = fold_over_range::<f64, _>(&MultFunc::one(), x, &v, opts)?;
    Ok(EquidistTally { mode, q, u, x, counts, qualifying, qualifying_coprime })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_one_is_the_plain_count() {
        let t = equidist_tally(EquidistMode::OmegaModQ, 1, Ratio::new(1, 2), 10_000, &FoldOptions::default()).unwrap();
        assert_eq!(t.counts, vec![t.qualifying]);
        assert_eq!(t.qualifying, (1..=10_000u64).filter(|&n| 2 * n <= divisor_sum(n)).count() as u64);
    }

    #[test]
    fn classes_partition() {
        let t = equidist_tally(
            EquidistMode::CoprimeClasses,
            6,
            Ratio::new(3, 5),
            20_000,
            &FoldOptions::with_segment_size(999),
        )
        .unwrap();
        assert_eq!(t.class_sum(), t.qualifying_coprime);
        assert_eq!(t.active_classes(), vec![1, 5]);
        assert_eq!(t.counts[2] + t.counts[3] + t.counts[4] + t.counts[0], 0);
        let o = equidist_tally(EquidistMode::OmegaModQ, 3, Ratio::new(1, 2), 20_000, &FoldOptions::default()).unwrap();
        assert_eq!(o.class_sum(), o.qualifying);
    }

    fn divisor_sum(n: u64) -> u64 {
        (1..=n).filter(|d| n.is_multiple_of(*d)).sum()
    }
}
