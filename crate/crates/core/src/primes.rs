//! Plain prime generation. The segmented machinery lives in [`crate::sieve`].

/// All primes `<= n`, odd-only sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u32> {
    assert!(n <= u32::MAX as u64, "prime list limited to u32");
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    // index i stands for 2i + 1
    let half = (n - 1) / 2 + 1;
    let mut composite = vec![false; half];
    composite[0] = true;
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) <= n {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = (p * p) / 2;
            while j < half {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let mut out = Vec::with_capacity(approx_prime_count(n as f64));
    out.push(2);
    out.extend(composite.iter().enumerate().filter(|(_, &c)| !c).map(|(i, _)| (2 * i + 1) as u32));
    out
}

fn approx_prime_count(n: f64) -> usize {
    if n < 17.0 {
        8
    } else {
        (1.26 * n / n.ln()) as usize
    }
}

/// Trial-division primality, for single values.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Floor of the square root of `n`.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}
