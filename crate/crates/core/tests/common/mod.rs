#![allow(dead_code)]

pub mod brute;

use ddl::{Complex64, MultFunc, Rule};

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

pub fn sigma(n: u64) -> u64 {
    divisors(n).iter().sum()
}

/// Trial-division factorization.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut j = 0;
        while n.is_multiple_of(d) {
            n /= d;
            j += 1;
        }
        if j > 0 {
            out.push((d, j));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

/// Number of `(x, y)` with `x² + y² = n`.
pub fn reps(n: u64) -> u64 {
    let mut c = 0;
    let r = (n as f64).sqrt() as i64 + 1;
    for x in -r..=r {
        for y in -r..=r {
            if (x * x + y * y) as u64 == n {
                c += 1;
            }
        }
    }
    c
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Legendre symbol by Euler's criterion.
pub fn legendre(n: u64, q: u64) -> f64 {
    match pow_mod(n, (q - 1) / 2, q) {
        0 => 0.0,
        1 => 1.0,
        _ => -1.0,
    }
}

/// `f(n)` from the definitions, integer side first.
pub fn naive(f: &MultFunc, n: u64) -> Complex64 {
    let fac = factor(n);
    let omega: u32 = fac.iter().map(|&(_, j)| j).sum();
    let re = |x: f64| Complex64::new(x, 0.0);
    let nf = n as f64;
    let mut v = match *f.rule() {
        Rule::One => re(1.0),
        Rule::Tau => re(divisors(n).len() as f64),
        Rule::Mobius => {
            if fac.iter().any(|&(_, j)| j > 1) {
                re(0.0)
            } else {
                re(if omega.is_multiple_of(2) { 1.0 } else { -1.0 })
            }
        }
        Rule::MobiusSquared => re(fac.iter().all(|&(_, j)| j == 1) as u8 as f64),
        Rule::LFree { l } => re(fac.iter().all(|&(_, j)| j < l) as u8 as f64),
        Rule::PhiOverN => re(phi(n) as f64 / nf),
        Rule::SigmaOverN => re(sigma(n) as f64 / nf),
        Rule::PhiOverNPow { z } => (Complex64::new(phi(n) as f64 / nf, 0.0).ln() * z).exp(),
        Rule::SigmaOverNPow { z } => (Complex64::new(sigma(n) as f64 / nf, 0.0).ln() * z).exp(),
        Rule::TwoSquaresCount => re(reps(n) as f64 / 4.0),
        Rule::TwoSquaresIndicator => re((reps(n) > 0) as u8 as f64),
        Rule::Lambda { a, q } => {
            let th = 2.0 * std::f64::consts::PI * (a as f64) * (omega as f64) / q as f64;
            Complex64::new(th.cos(), th.sin())
        }
        Rule::PrincipalCharacter { q } => re((gcd(n, q) == 1) as u8 as f64),
        Rule::QuadraticCharacter { q } => re(legendre(n, q)),
    };
    if f.sigma_twist() > 0 {
        v *= (nf / sigma(n) as f64).powi(f.sigma_twist() as i32);
    }
    if let Some(c) = f.coprime_restriction() {
        if fac.iter().any(|&(p, _)| p as f64 <= c.y) {
            return re(0.0);
        }
        if c.sigma_weight {
            v *= sigma(n) as f64 / nf;
        }
    }
    v
}

/// Catalog plus a twisted and two restricted variants.
pub fn catalog_with_modifiers() -> Vec<MultFunc> {
    let mut c = MultFunc::catalog();
    c.push("tau".parse::<MultFunc>().unwrap().sigma_power_twist(2));
    c.push(MultFunc::one().restrict_coprime(7.0, false).unwrap());
    c.push("mu".parse::<MultFunc>().unwrap().restrict_coprime(3.0, true).unwrap());
    c
}

pub fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}
