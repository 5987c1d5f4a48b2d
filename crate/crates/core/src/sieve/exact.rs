//! Complex sums in 64.64 fixed point. Each term is rounded once and the
//! additions are exact, so a sum does not depend on how its range is split.

use std::ops::{Add, AddAssign};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

const SCALE: f64 = 18_446_744_073_709_551_616.0;
/// Largest scaled term accepted, `2^126`.
const TERM_LIMIT: f64 = 85_070_591_730_234_615_865_843_651_857_942_052_864.0;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExactSum {
    re: i128,
    im: i128,
    overflow: bool,
}

#[inline]
fn fixed(v: f64) -> Option<i128> {
    let s = (v * SCALE).round();
    (s.abs() < TERM_LIMIT).then_some(s as i128)
}

impl ExactSum {
    pub const ZERO: ExactSum = ExactSum { re: 0, im: 0, overflow: false };

    /// Adds `z`; non-finite or oversized terms mark the sum as overflowed.
    #[inline]
    pub fn push<T: Real>(&mut self, z: Complex<T>) {
        self.push_f64(z.re.to_f64_lossy(), z.im.to_f64_lossy());
    }

    #[inline]
    pub fn push_f64(&mut self, re: f64, im: f64) {
        match (fixed(re), fixed(im)) {
            (Some(a), Some(b)) => self.accumulate(a, b, false),
            _ => self.overflow = true,
        }
    }

    #[inline]
    fn accumulate(&mut self, re: i128, im: i128, overflow: bool) {
        match (self.re.checked_add(re), self.im.checked_add(im)) {
            (Some(a), Some(b)) => {
                self.re = a;
                self.im = b;
                self.overflow |= overflow;
            }
            _ => self.overflow = true,
        }
    }

    pub fn overflowed(&self) -> bool {
        self.overflow
    }

    /// The sum rounded to `T`.
    pub fn value<T: Real>(&self) -> Result<Complex<T>> {
        if self.overflow {
            return Err(Error::Overflow("weighted sum exceeds the fixed-point accumulator".into()));
        }
        let conv = |v: i128| T::from_f64(v as f64 / SCALE).unwrap_or_else(T::nan);
        Ok(Complex::new(conv(self.re), conv(self.im)))
    }
}

impl AddAssign for ExactSum {
    #[inline]
    fn add_assign(&mut self, rhs: ExactSum) {
        self.accumulate(rhs.re, rhs.im, rhs.overflow);
    }
}

impl Add for ExactSum {
    type Output = ExactSum;

    fn add(mut self, rhs: ExactSum) -> ExactSum {
        self += rhs;
        self
    }
}
