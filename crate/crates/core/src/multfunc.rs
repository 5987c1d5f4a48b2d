//! Catalog of multiplicative functions, defined by their values on prime powers.
//!
//! Every function used by the estimators and the analytic module is a
//! [`MultFunc`]: a base [`Rule`] plus optional modifiers (the `(n/σ(n))^k`
//! twist and the restriction to integers free of small primes).

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::primes::is_prime;
use crate::scalar::{cis, positive_pow, Real};

/// Largest allowed `|Re z|` and `|Im z|` for the complex-power entries.
pub const MAX_EXPONENT_PART: f64 = 8.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueClass {
    /// `|f(n)| <= 1` for all n.
    UnitDisc,
    /// Nonnegative with `f(p)` bounded over primes.
    NonnegativeBoundedPrime,
    General,
}

impl ValueClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            ValueClass::UnitDisc => "unit-disc",
            ValueClass::NonnegativeBoundedPrime => "nonnegative-bounded-prime",
            ValueClass::General => "general",
        }
    }
}

/// Base rule on prime powers. Parameters live in the variants.
#[derive(Clone, Debug, PartialEq)]
pub enum Rule {
    One,
    /// Divisor count.
    Tau,
    Mobius,
    MobiusSquared,
    /// Indicator of the `l`-free integers.
    LFree {
        l: u32,
    },
    PhiOverN,
    SigmaOverN,
    PhiOverNPow {
        z: Complex<f64>,
    },
    SigmaOverNPow {
        z: Complex<f64>,
    },
    /// Quarter of the number of representations as `x^2 + y^2`.
    TwoSquaresCount,
    /// Indicator of the sums of two squares.
    TwoSquaresIndicator,
    /// `exp(2 pi i a Omega(n) / q)`.
    Lambda {
        a: i64,
        q: u64,
    },
    PrincipalCharacter {
        q: u64,
    },
    /// Legendre symbol modulo an odd prime.
    QuadraticCharacter {
        q: u64,
    },
}

/// Restriction to integers whose prime factors all exceed `y`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoprimeRestriction {
    pub y: f64,
    /// Multiply by `σ(n)/n` as well.
    pub sigma_weight: bool,
}

/// A multiplicative function from the closed catalog.
#[derive(Clone, Debug, PartialEq)]
pub struct MultFunc {
    rule: Rule,
    sigma_twist: u32,
    coprime: Option<CoprimeRestriction>,
}

/// Growth constants used for truncation-tail estimates, valid for `p >= 11`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TailModel {
    /// `|(1 - 1/p) Δ_p - 1| <= factor / p^2`; `None` when the mean-value
    /// product hypotheses fail for this entry.
    pub factor: Option<f64>,
    /// `|η_p| <= eta / p^2`.
    pub eta: f64,
    /// `sup_p |f(p)|`.
    pub prime_bound: f64,
}

/// `p^j` with `p` prime, range checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimePower {
    pub p: u64,
    pub j: u32,
    pub value: u64,
}

impl PrimePower {
    pub fn new(p: u64, j: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::param("p", format!("{p} is not prime")));
        }
        let value = p.checked_pow(j).ok_or_else(|| Error::Overflow(format!("{p}^{j} exceeds u64")))?;
        Ok(PrimePower { p, j, value })
    }
}

impl MultFunc {
    pub fn new(rule: Rule) -> Result<Self> {
        validate(&rule)?;
        Ok(MultFunc { rule, sigma_twist: 0, coprime: None })
    }

    pub fn one() -> Self {
        MultFunc { rule: Rule::One, sigma_twist: 0, coprime: None }
    }

    pub fn rule(&self) -> &Rule {
        &self.rule
    }

    pub fn sigma_twist(&self) -> u32 {
        self.sigma_twist
    }

    pub fn coprime_restriction(&self) -> Option<CoprimeRestriction> {
        self.coprime
    }

    /// True only for the unmodified constant function.
    pub fn is_one(&self) -> bool {
        self.rule == Rule::One && self.sigma_twist == 0 && self.coprime.is_none()
    }

    /// Catalog identifier of the base rule.
    pub fn id(&self) -> &'static str {
        match self.rule {
            Rule::One => "one",
            Rule::Tau => "tau",
            Rule::Mobius => "mu",
            Rule::MobiusSquared => "mu_squared",
            Rule::LFree { .. } => "lfree",
            Rule::PhiOverN => "phi_over_n",
            Rule::SigmaOverN => "sigma_over_n",
            Rule::PhiOverNPow { .. } => "phi_over_n_pow",
            Rule::SigmaOverNPow { .. } => "sigma_over_n_pow",
            Rule::TwoSquaresCount => "r",
            Rule::TwoSquaresIndicator => "two_squares_indicator",
            Rule::Lambda { .. } => "lambda",
            Rule::PrincipalCharacter { .. } => "principal_char",
            Rule::QuadraticCharacter { .. } => "quadratic_char",
        }
    }

    /// `f_k(n) = f(n) (n/σ(n))^k`. `k = 0` leaves `f` unchanged.
    pub fn sigma_power_twist(&self, k: u32) -> Self {
        let mut out = self.clone();
        out.sigma_twist += k;
        out
    }

    /// `a_y = f 1_y` (flag off) or `b_y = f (σ(n)/n) 1_y` (flag on), where
    /// `1_y` kills every prime `p <= y`.
    pub fn restrict_coprime(&self, y: f64, with_sigma_weight: bool) -> Result<Self> {
        if !(y >= 2.0) || !y.is_finite() {
            return Err(Error::param("y", "must be a finite real >= 2"));
        }
        if self.coprime.is_some() {
            return Err(Error::param("y", "function is already restricted"));
        }
        let mut out = self.clone();
        out.coprime = Some(CoprimeRestriction { y, sigma_weight: with_sigma_weight });
        Ok(out)
    }

    pub fn value_class(&self) -> ValueClass {
        let base = match &self.rule {
            Rule::One
            | Rule::Mobius
            | Rule::MobiusSquared
            | Rule::LFree { .. }
            | Rule::PhiOverN
            | Rule::TwoSquaresIndicator
            | Rule::Lambda { .. }
            | Rule::PrincipalCharacter { .. }
            | Rule::QuadraticCharacter { .. } => ValueClass::UnitDisc,
            Rule::Tau | Rule::SigmaOverN | Rule::TwoSquaresCount => ValueClass::NonnegativeBoundedPrime,
            Rule::PhiOverNPow { z } => power_class(z.re >= 0.0, z.im == 0.0),
            Rule::SigmaOverNPow { z } => power_class(z.re <= 0.0, z.im == 0.0),
        };
        match (base, self.coprime) {
            (ValueClass::UnitDisc, Some(CoprimeRestriction { sigma_weight: true, .. })) => {
                if self.is_nonnegative() {
                    ValueClass::NonnegativeBoundedPrime
                } else {
                    ValueClass::General
                }
            }
            (c, _) => c,
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        match &self.rule {
            Rule::One
            | Rule::Tau
            | Rule::MobiusSquared
            | Rule::LFree { .. }
            | Rule::PhiOverN
            | Rule::SigmaOverN
            | Rule::TwoSquaresCount
            | Rule::TwoSquaresIndicator
            | Rule::PrincipalCharacter { .. } => true,
            Rule::PhiOverNPow { z } | Rule::SigmaOverNPow { z } => z.im == 0.0,
            Rule::Lambda { a, q } => a.rem_euclid(*q as i64) == 0,
            Rule::Mobius | Rule::QuadraticCharacter { .. } => false,
        }
    }

    /// Wirsing density κ for the nonnegative entries.
    pub fn claimed_kappa(&self) -> Option<f64> {
        if !self.is_nonnegative() {
            return None;
        }
        Some(match self.rule {
            Rule::Tau => 2.0,
            Rule::TwoSquaresIndicator => 0.5,
            _ => 1.0,
        })
    }

    /// True when every value is real (no imaginary parts anywhere).
    pub fn is_real_valued(&self) -> bool {
        match &self.rule {
            Rule::PhiOverNPow { z } | Rule::SigmaOverNPow { z } => z.im == 0.0,
            Rule::Lambda { a, q } => ((2 * a.rem_euclid(*q as i64)) as u64).is_multiple_of(*q),
            _ => true,
        }
    }

    /// Value on `p^j`. `j = 0` always gives exactly 1.
    pub fn eval_prime_power<T: Real>(&self, p: u64, j: u32) -> Complex<T> {
        let one = Complex::new(T::one(), T::zero());
        if j == 0 {
            return one;
        }
        if let Some(c) = self.coprime {
            if (p as f64) <= c.y {
                return Complex::new(T::zero(), T::zero());
            }
        }
        let mut v = base_value::<T>(&self.rule, p, j);
        if self.sigma_twist > 0 {
            v = v * p_over_sigma::<T>(p, j).powi(self.sigma_twist as i32);
        }
        if let Some(CoprimeRestriction { sigma_weight: true, .. }) = self.coprime {
            v = v / p_over_sigma::<T>(p, j);
        }
        v
    }

    pub fn eval(&self, pp: &PrimePower) -> Complex<f64> {
        self.eval_prime_power(pp.p, pp.j)
    }

    /// `f(n)` from a factorization `[(p, j), ...]`.
    pub fn eval_factored<T: Real>(&self, factors: &[(u64, u32)]) -> Complex<T> {
        factors.iter().fold(Complex::new(T::one(), T::zero()), |acc, &(p, j)| acc * self.eval_prime_power::<T>(p, j))
    }

    pub fn tail_model(&self) -> TailModel {
        let (factor, eta, prime_bound) = match &self.rule {
            Rule::One => (Some(0.0), 1.1, 1.0),
            Rule::Tau => (None, 3.7, 2.0),
            Rule::Mobius => (None, 0.0, 1.0),
            Rule::MobiusSquared => (Some(1.0), 0.0, 1.0),
            Rule::LFree { l } => (Some(1.0), if *l == 2 { 0.0 } else { 1.1 }, 1.0),
            Rule::PhiOverN => (Some(1.0), 1.1, 1.0),
            Rule::SigmaOverN => (Some(1.1), 1.25, 1.1),
            Rule::PhiOverNPow { z } | Rule::SigmaOverNPow { z } => (Some(2.0 * z.norm() + 0.1), 2.5, 2.5),
            Rule::TwoSquaresCount => (None, 3.7, 2.0),
            Rule::TwoSquaresIndicator => (None, 1.1, 1.0),
            Rule::Lambda { a, q } => {
                let trivial = a.rem_euclid(*q as i64) == 0;
                (if trivial { Some(0.0) } else { None }, 1.1, 1.0)
            }
            Rule::PrincipalCharacter { .. } => (Some(0.0), 1.1, 1.0),
            Rule::QuadraticCharacter { .. } => (None, 1.1, 1.0),
        };
        let k = self.sigma_twist as f64;
        let mut model = TailModel { factor: factor.map(|c| c + k * prime_bound), eta, prime_bound };
        if let Some(CoprimeRestriction { sigma_weight: true, .. }) = self.coprime {
            model.factor = model.factor.map(|c| c + model.prime_bound);
            model.eta *= 1.2;
            model.prime_bound *= 1.1;
        }
        model
    }

    /// Catalog listing, one representative per rule.
    pub fn catalog() -> Vec<MultFunc> {
        [
            "one",
            "tau",
            "mu",
            "mu_squared",
            "lfree:l=3",
            "phi_over_n",
            "sigma_over_n",
            "phi_over_n_pow:re=0.5,im=0",
            "sigma_over_n_pow:re=-1,im=0.5",
            "r",
            "two_squares_indicator",
            "lambda:a=1,q=3",
            "principal_char:q=4",
            "quadratic_char:q=5",
        ]
        .iter()
        .map(|s| s.parse().expect("catalog entries parse"))
        .collect()
    }
}

fn power_class(in_disc: bool, real: bool) -> ValueClass {
    if in_disc {
        ValueClass::UnitDisc
    } else if real {
        ValueClass::NonnegativeBoundedPrime
    } else {
        ValueClass::General
    }
}

/// `p^j / σ(p^j) = (1 - 1/p) / (1 - p^{-(j+1)})`.
fn p_over_sigma<T: Real>(p: u64, j: u32) -> T {
    let inv = T::one() / T::of_u64(p);
    (T::one() - inv) / (T::one() - inv.powi(j as i32 + 1))
}

fn base_value<T: Real>(rule: &Rule, p: u64, j: u32) -> Complex<T> {
    let re = |x: T| Complex::new(x, T::zero());
    let zero = re(T::zero());
    let one = re(T::one());
    let jt = T::of_u64(j as u64);
    match rule {
        Rule::One => one,
        Rule::Tau => re(jt + T::one()),
        Rule::Mobius => {
            if j == 1 {
                re(-T::one())
            } else {
                zero
            }
        }
        Rule::MobiusSquared => {
            if j == 1 {
                one
            } else {
                zero
            }
        }
        Rule::LFree { l } => {
            if j < *l {
                one
            } else {
                zero
            }
        }
        Rule::PhiOverN => re(T::one() - T::one() / T::of_u64(p)),
        Rule::SigmaOverN => re(T::one() / p_over_sigma::<T>(p, j)),
        Rule::PhiOverNPow { z } => {
            positive_pow(T::one() - T::one() / T::of_u64(p), Complex::new(T::of(z.re), T::of(z.im)))
        }
        Rule::SigmaOverNPow { z } => {
            positive_pow(T::one() / p_over_sigma::<T>(p, j), Complex::new(T::of(z.re), T::of(z.im)))
        }
        Rule::TwoSquaresCount => match p % 4 {
            1 => re(jt + T::one()),
            3 => {
                if j.is_multiple_of(2) {
                    one
                } else {
                    zero
                }
            }
            _ => one,
        },
        Rule::TwoSquaresIndicator => {
            if p % 4 == 3 && j % 2 == 1 {
                zero
            } else {
                one
            }
        }
        Rule::Lambda { a, q } => root_of_unity(((*a as i128 * j as i128).rem_euclid(*q as i128)) as u64, *q),
        Rule::PrincipalCharacter { q } => {
            if q % p == 0 {
                zero
            } else {
                one
            }
        }
        Rule::QuadraticCharacter { q } => match legendre(p, *q) {
            0 => zero,
            1 => one,
            _ => {
                if j.is_multiple_of(2) {
                    one
                } else {
                    re(-T::one())
                }
            }
        },
    }
}

/// `exp(2 pi i r / q)` with exact values on the axes.
fn root_of_unity<T: Real>(r: u64, q: u64) -> Complex<T> {
    let (zero, one) = (T::zero(), T::one());
    if r == 0 {
        Complex::new(one, zero)
    } else if 2 * r == q {
        Complex::new(-one, zero)
    } else if 4 * r == q {
        Complex::new(zero, one)
    } else if 4 * r == 3 * q {
        Complex::new(zero, -one)
    } else {
        cis(T::TAU() * T::of_u64(r) / T::of_u64(q))
    }
}

/// Legendre symbol `(a / q)` for an odd prime `q`, via the Jacobi recurrence.
pub fn legendre(a: u64, q: u64) -> i32 {
    let mut a = a % q;
    let mut n = q;
    let mut sign = 1;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

fn validate(rule: &Rule) -> Result<()> {
    match rule {
        Rule::LFree { l } if *l < 2 => Err(Error::param("l", "must be at least 2")),
        Rule::PhiOverNPow { z } | Rule::SigmaOverNPow { z } => {
            if !(z.re.abs() <= MAX_EXPONENT_PART && z.im.abs() <= MAX_EXPONENT_PART) {
                Err(Error::param("z", format!("|re|, |im| must be <= {MAX_EXPONENT_PART}")))
            } else {
                Ok(())
            }
        }
        Rule::Lambda { q, .. } | Rule::PrincipalCharacter { q } if *q == 0 => {
            Err(Error::param("q", "must be positive"))
        }
        Rule::Lambda { q, .. } if *q > i64::MAX as u64 => Err(Error::param("q", "too large")),
        Rule::QuadraticCharacter { q } if *q < 3 || !is_prime(*q) => Err(Error::param("q", "must be an odd prime")),
        _ => Ok(()),
    }
}

impl fmt::Display for MultFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let id = self.id();
        match &self.rule {
            Rule::LFree { l } => write!(f, "{id}:l={l}")?,
            Rule::PhiOverNPow { z } | Rule::SigmaOverNPow { z } => write!(f, "{id}:re={},im={}", z.re, z.im)?,
            Rule::Lambda { a, q } => write!(f, "{id}:a={a},q={q}")?,
            Rule::PrincipalCharacter { q } | Rule::QuadraticCharacter { q } => write!(f, "{id}:q={q}")?,
            _ => write!(f, "{id}")?,
        }
        if self.sigma_twist > 0 {
            write!(f, " [twist k={}]", self.sigma_twist)?;
        }
        if let Some(c) = self.coprime {
            write!(f, " [p > {}{}]", c.y, if c.sigma_weight { ", sigma weight" } else { "" })?;
        }
        Ok(())
    }
}

impl FromStr for MultFunc {
    type Err = Error;

    /// Parses `name` or `name:key=value,key=value`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n.trim(), p.trim()),
            None => (s, ""),
        };
        let mut kv: Vec<(&str, &str)> = Vec::new();
        for item in params.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| Error::param(item, "expected key=value"))?;
            kv.push((k.trim(), v.trim()));
        }
        let get = |key: &str| kv.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);
        let int = |key: &str| -> Result<i64> {
            let v = get(key).ok_or_else(|| Error::param(key, "missing"))?;
            v.parse::<i64>().map_err(|_| Error::param(key, format!("`{v}` is not an integer")))
        };
        let uint = |key: &str| -> Result<u64> {
            let v = int(key)?;
            u64::try_from(v).ok().filter(|&v| v > 0).ok_or_else(|| Error::param(key, "must be positive"))
        };
        let real = |key: &str, default: Option<f64>| -> Result<f64> {
            match get(key) {
                Some(v) => v.parse::<f64>().map_err(|_| Error::param(key, format!("`{v}` is not a number"))),
                None => default.ok_or_else(|| Error::param(key, "missing")),
            }
        };
        let allowed: &[&str] = match name {
            "lfree" => &["l"],
            "phi_over_n_pow" | "sigma_over_n_pow" => &["re", "im"],
            "lambda" => &["a", "q"],
            "principal_char" | "quadratic_char" => &["q"],
            _ => &[],
        };
        if let Some((k, _)) = kv.iter().find(|(k, _)| !allowed.contains(k)) {
            return Err(Error::param(k, format!("not a parameter of `{name}`")));
        }
        let rule = match name {
            "one" => Rule::One,
            "tau" => Rule::Tau,
            "mu" => Rule::Mobius,
            "mu_squared" | "squarefree" => Rule::MobiusSquared,
            "lfree" => Rule::LFree { l: u32::try_from(uint("l")?).map_err(|_| Error::param("l", "too large"))? },
            "phi_over_n" => Rule::PhiOverN,
            "sigma_over_n" => Rule::SigmaOverN,
            "phi_over_n_pow" => Rule::PhiOverNPow { z: Complex::new(real("re", None)?, real("im", Some(0.0))?) },
            "sigma_over_n_pow" => Rule::SigmaOverNPow { z: Complex::new(real("re", None)?, real("im", Some(0.0))?) },
            "r" | "two_squares_count" => Rule::TwoSquaresCount,
            "two_squares_indicator" => Rule::TwoSquaresIndicator,
            "lambda" => {
                let q = int("q")?;
                if q <= 0 {
                    return Err(Error::param("q", "must be positive"));
                }
                Rule::Lambda { a: int("a")?, q: q as u64 }
            }
            "liouville" => Rule::Lambda { a: 1, q: 2 },
            "principal_char" => Rule::PrincipalCharacter { q: uint("q")? },
            "quadratic_char" => Rule::QuadraticCharacter { q: uint("q")? },
            other => return Err(Error::UnknownFunction(other.to_string())),
        };
        MultFunc::new(rule)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> MultFunc {
        s.parse().unwrap()
    }

    fn val(s: &str, p: u64, j: u32) -> Complex<f64> {
        f(s).eval_prime_power(p, j)
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(val("tau", 5, 2), Complex::new(3.0, 0.0));
        assert_eq!(val("r", 3, 1), Complex::new(0.0, 0.0));
        assert_eq!(val("lambda:a=1,q=2", 2, 3), Complex::new(-1.0, 0.0));
        assert!((val("phi_over_n", 7, 1).re - 6.0 / 7.0).abs() < 1e-15);
    }

    #[test]
    fn twist_examples() {
        let one = MultFunc::one();
        assert_eq!(one.sigma_power_twist(0).eval_prime_power::<f64>(2, 1).re, 1.0);
        assert!((one.sigma_power_twist(1).eval_prime_power::<f64>(2, 1).re - 2.0 / 3.0).abs() < 1e-15);
        assert!((f("tau").sigma_power_twist(2).eval_prime_power::<f64>(3, 1).re - 9.0 / 8.0).abs() < 1e-15);
        assert_eq!(one.sigma_power_twist(0), one);
    }

    #[test]
    fn restriction_examples() {
        let a5 = MultFunc::one().restrict_coprime(5.0, false).unwrap();
        let b5 = MultFunc::one().restrict_coprime(5.0, true).unwrap();
        assert_eq!(a5.eval_prime_power::<f64>(3, 1).re, 0.0);
        assert_eq!(a5.eval_prime_power::<f64>(7, 1).re, 1.0);
        assert!((b5.eval_prime_power::<f64>(7, 1).re - 8.0 / 7.0).abs() < 1e-15);
        assert_eq!(b5.eval_prime_power::<f64>(3, 0).re, 1.0);
        assert!(MultFunc::one().restrict_coprime(1.5, false).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("nope".parse::<MultFunc>(), Err(Error::UnknownFunction(_))));
        assert!("lambda:a=1,q=0".parse::<MultFunc>().is_err());
        assert!("lambda:a=1,q=-3".parse::<MultFunc>().is_err());
        assert!("lambda:a=1".parse::<MultFunc>().is_err());
        assert!("quadratic_char:q=9".parse::<MultFunc>().is_err());
        assert!("phi_over_n_pow:re=9,im=0".parse::<MultFunc>().is_err());
        assert!("lfree:l=1".parse::<MultFunc>().is_err());
        assert!("tau:q=3".parse::<MultFunc>().is_err());
    }

    #[test]
    fn display_round_trips_through_parse() {
        for g in MultFunc::catalog() {
            let again: MultFunc = g.to_string().parse().unwrap();
            assert_eq!(again, g);
        }
    }

    #[test]
    fn closed_form_values() {
        for &(p, j) in &[(2u64, 1u32), (2, 5), (3, 2), (5, 1), (7, 3), (101, 2)] {
            assert_eq!(
                val("r", p, j).re,
                if p == 2 {
                    1.0
                } else if p % 4 == 1 {
                    j as f64 + 1.0
                } else {
                    1.0 - (j % 2) as f64
                }
            );
            let r = val("mu_squared", p, j).re;
            assert!(r == 0.0 || r == 1.0);
            assert_eq!(val("tau", p, j).re, j as f64 + 1.0);
        }
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
        assert_eq!(legendre(14, 7), 0);
        // quadratic residues mod 11: 1, 3, 4, 5, 9
        let qr: Vec<u64> = (1..11).filter(|&a| legendre(a, 11) == 1).collect();
        assert_eq!(qr, vec![1, 3, 4, 5, 9]);
    }

    #[test]
    fn metadata() {
        assert_eq!(f("tau").claimed_kappa(), Some(2.0));
        assert_eq!(f("r").claimed_kappa(), Some(1.0));
        assert_eq!(f("two_squares_indicator").claimed_kappa(), Some(0.5));
        assert_eq!(f("mu").claimed_kappa(), None);
        assert_eq!(f("mu").value_class(), ValueClass::UnitDisc);
        assert_eq!(f("tau").value_class(), ValueClass::NonnegativeBoundedPrime);
        assert_eq!(f("phi_over_n_pow:re=-1,im=1").value_class(), ValueClass::General);
        assert!(f("tau").tail_model().factor.is_none());
        assert!(f("phi_over_n").tail_model().factor.is_some());
        assert!(PrimePower::new(4, 1).is_err());
        assert!(PrimePower::new(2, 64).is_err());
        assert_eq!(PrimePower::new(3, 4).unwrap().value, 81);
    }
}
