use crate::primes::primes_up_to;

/// Threshold past which the tail-model constants apply.
pub const TAIL_MODEL_P0: u64 = 11;

/// Constant in the `α_p(t)/Δ_p - 1` estimate.
pub const CHARFN_TAIL_CONSTANT: f64 = 2.0;

const EXPLICIT_UP_TO: u64 = 10_000;

/// `Σ_{p > P} p^{-2}`: explicit below `10^4`, then `1/(M log M)`.
pub fn prime_square_tail(p_bound: u64) -> f64 {
    let m = p_bound.max(EXPLICIT_UP_TO);
    let explicit: f64 = if p_bound < EXPLICIT_UP_TO {
        primes_up_to(EXPLICIT_UP_TO)
            .into_iter()
            .filter(|&p| p as u64 > p_bound)
            .map(|p| 1.0 / (p as f64 * p as f64))
            .sum()
    } else {
        0.0
    };
    let m = m as f64;
    explicit + 1.0 / (m * m.ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_sum_is_the_prime_zeta_value() {
        // P(2) = 0.4522474200...
        assert!((prime_square_tail(1) - 0.452_247_42).abs() < 2e-6);
        assert!(prime_square_tail(1_000_000) < 1e-7);
    }
}
