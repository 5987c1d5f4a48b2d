mod common;

use common::{catalog_with_modifiers, close, factor, naive, sigma};
use ddl::{Complex64, MultFunc, ValueClass};
use proptest::prelude::*;

#[test]
fn prime_power_rules_match_definitions() {
    for f in catalog_with_modifiers() {
        for n in 1..=3000u64 {
            let got: Complex64 = f.eval_factored(&factor(n));
            let want = naive(&f, n);
            assert!(close(got, want, 1e-12), "{f} at {n}: {got} vs {want}");
        }
    }
}

#[test]
fn sigma_twist_relative_error() {
    let tau: MultFunc = "tau".parse().unwrap();
    for k in 1..=3 {
        let g = tau.sigma_power_twist(k);
        for n in 1..=10_000u64 {
            let want = common::divisors(n).len() as f64 * (n as f64 / sigma(n) as f64).powi(k as i32);
            let got: Complex64 = g.eval_factored(&factor(n));
            assert!((got.re - want).abs() <= 1e-12 * want, "k={k} n={n}");
        }
    }
}

fn catalog_index() -> impl Strategy<Value = usize> {
    0..MultFunc::catalog().len()
}

proptest! {
    #[test]
    fn unit_disc_entries_stay_in_the_disc(i in catalog_index(), n in 1u64..200_000) {
        let f = &MultFunc::catalog()[i];
        let v: Complex64 = f.eval_factored(&factor(n));
        if f.value_class() == ValueClass::UnitDisc {
            prop_assert!(v.norm() <= 1.0 + 1e-12);
        }
        if f.is_nonnegative() {
            prop_assert!(v.re >= 0.0 && v.im == 0.0);
        }
    }

    #[test]
    fn multiplicative_on_coprime_pairs(i in catalog_index(), a in 1u64..2000, b in 1u64..2000) {
        prop_assume!(common::gcd(a, b) == 1);
        let f = &MultFunc::catalog()[i];
        let fa: Complex64 = f.eval_factored(&factor(a));
        let fb: Complex64 = f.eval_factored(&factor(b));
        let fab: Complex64 = f.eval_factored(&factor(a * b));
        prop_assert!(close(fa * fb, fab, 1e-12));
    }

    #[test]
    fn display_round_trips(i in catalog_index()) {
        let f = &MultFunc::catalog()[i];
        let back: MultFunc = f.to_string().parse().unwrap();
        prop_assert_eq!(&back, f);
    }
}
