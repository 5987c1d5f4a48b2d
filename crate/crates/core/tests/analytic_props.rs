mod common;

use ddl::analytic::*;
use ddl::empirical::{estimate_df, ThresholdGrid};
use ddl::primes::primes_up_to;
use ddl::sieve::FoldOptions;
use ddl::{MultFunc, Ratio};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use proptest::prelude::*;

#[test]
fn phi_over_n_simplified_factor() {
    let f: MultFunc = "phi_over_n".parse().unwrap();
    for p in primes_up_to(10_000) {
        let p = p as u64;
        let l = local_factors::<f64>(&f, p, 0.0, None).unwrap();
        let unsimplified = (1.0 - 1.0 / p as f64) * l.delta.re;
        let simplified = 1.0 - 1.0 / (p as f64 * p as f64);
        assert!((unsimplified - simplified).abs() < 1e-10, "p = {p}");
    }
}

#[test]
fn mean_values_against_sieve_means() {
    for (id, closed) in
        [("phi_over_n", 6.0 / std::f64::consts::PI.powi(2)), ("sigma_over_n", std::f64::consts::PI.powi(2) / 6.0)]
    {
        let f: MultFunc = id.parse().unwrap();
        let v = mean_value_product::<f64>(&f, 100_000).unwrap();
        assert!((v.value.re - closed).abs() < 1e-4, "{id}: {}", v.value.re);
        let e = estimate_df::<f64>(&f, 1_000_000, &ThresholdGrid::half(), &FoldOptions::default()).unwrap();
        assert!((e.value_at(&Ratio::from_integer(1)).unwrap().re - closed).abs() < 1e-4);
    }
}

#[test]
fn kappa_ratio_grows_for_tau_and_one() {
    for id in ["tau", "one"] {
        let f: MultFunc = id.parse().unwrap();
        let xs = [1_000u64, 10_000, 100_000, 1_000_000];
        let k: Vec<f64> = xs.iter().map(|&x| mertens_kappa::<f64>(&f, x).unwrap().log_ratio.re).collect();
        assert!(k.windows(2).all(|w| w[0] <= w[1]), "{id}: {k:?}");
    }
    let s: MultFunc = "two_squares_indicator".parse().unwrap();
    assert_eq!(s.claimed_kappa(), Some(0.5));
    let r: MultFunc = "r".parse().unwrap();
    assert_eq!(r.claimed_kappa(), Some(1.0));
}

#[test]
fn continuity_diagnostic_tracks_mertens() {
    let one = continuity_diagnostic::<f64>(&MultFunc::one(), 1_000_000).unwrap();
    assert!((one - (1e6f64.ln().ln() + 0.2615)).abs() < 0.01);
}

#[test]
fn psi_tail_bound_covers_the_next_decade() {
    let t = linspace(0.0f64, 200.0, 401);
    for id in ["one", "tau", "mu_squared"] {
        let f: MultFunc = id.parse().unwrap();
        let a = psi(&f, &t, 100_000, None).unwrap();
        let b = psi(&f, &t, 1_000_000, None).unwrap();
        for k in 0..t.len() {
            let d = (a.psi[k] - b.psi[k]).norm();
            assert!(d <= a.tail_bound[k], "{id} t={} change {d} bound {}", t[k], a.tail_bound[k]);
        }
    }
}

fn sigma_big(primes: &[u64]) -> BigUint {
    primes.iter().fold(BigUint::from(1u32), |s, &p| s * BigUint::from(p + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witness_postcondition(a in 0u64..1000, b in 0u64..1000, which in 0usize..2) {
        prop_assume!(a != b);
        let (v, u) = (Ratio::new(a.min(b), 1000), Ratio::new(a.max(b), 1000));
        let f: MultFunc = ["one", "two_squares_indicator"][which].parse().unwrap();
        if let Ok(w) = greedy_witness(&f, v, u, 100_000) {
            let s = sigma_big(&w.primes);
            let big = |x: u64| BigUint::from(x);
            prop_assert!(big(*v.numer()) * &s < &w.m * big(*v.denom()));
            prop_assert!(&w.m * big(*u.denom()) <= big(*u.numer()) * &s);
            prop_assert!(w.primes.windows(2).all(|p| p[0] < p[1]));
            prop_assert!(w.f_value.re > 0.0);
            if w.m < BigUint::from(1u64 << 40) {
                let m = w.m.to_u64().unwrap();
                prop_assert_eq!(common::sigma(m), s.to_u64().unwrap());
            }
        }
    }

    #[test]
    fn psi_is_bounded_for_nonnegative_entries(i in 0..MultFunc::catalog().len(), t in -300.0f64..300.0) {
        let f = &MultFunc::catalog()[i];
        prop_assume!(f.is_nonnegative());
        let p = psi(f, &[t, -t], 2_000, None).unwrap();
        prop_assert!(p.psi[0].norm() <= 1.0 + p.tail_bound[0] + 1e-12);
        prop_assert!((p.psi[0] - p.psi[1].conj()).norm() < 1e-12);
    }
}
