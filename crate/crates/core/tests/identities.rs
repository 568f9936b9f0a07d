mod common;

use num_integer::Integer;
use num_rational::BigRational;
use proptest::prelude::*;

use dedekind_core::extremal::{
    candidate_count_bound, candidate_set, check_witness, farey_approx, is_ordinary, level,
    nonordinary_deviation_bound, ordinary_bound,
};
use dedekind_core::{dedekind_fast, dedekind_naive, mod_inverse, Rational, SumQuery};

fn s(m: u64, n: u64) -> Rational {
    dedekind_fast(&SumQuery::normalize(m as i128, n as i128).unwrap())
}

fn to_big(r: &Rational) -> BigRational {
    BigRational::new(r.numer().clone(), r.denom().clone())
}

fn coprime_pair(max_n: u64) -> impl Strategy<Value = (u64, u64)> {
    (2..=max_n)
        .prop_flat_map(|n| (1..n, Just(n)))
        .prop_filter("coprime", |(m, n)| m.gcd(n) == 1)
}

#[test]
fn naive_matches_literal_sawtooth() {
    for n in 1..=30u64 {
        for m in 0..n {
            if m.gcd(&n) == 1 {
                let q = SumQuery::normalize(m as i128, n as i128).unwrap();
                assert_eq!(to_big(&dedekind_naive(&q)), common::sawtooth_oracle(m, n));
            }
        }
    }
}

#[test]
fn fast_matches_rational_recursion() {
    for n in 1..=150u64 {
        for m in 0..n {
            if m.gcd(&n) == 1 {
                assert_eq!(to_big(&s(m, n)), common::reciprocity_oracle(m, n));
            }
        }
    }
}

#[test]
fn example_two_difference() {
    for n in (7..2000u64).step_by(6) {
        let ni = n as i128;
        let diff = s(n.div_ceil(3), n) - s(6, n);
        assert_eq!(diff, Rational::new(24 * ni - 24, 6 * ni).unwrap());
    }
}

#[test]
fn candidate_magnitude_and_ordinary_suppression() {
    for k in 1..=5u64 {
        let l = level(k);
        for n in (l + 1..400).filter(|n| n.gcd(&k) == 1) {
            for group in candidate_set(k, n) {
                for o in &group.origins {
                    let dev = nonordinary_deviation_bound(o.d, o.q as i128, n, k).unwrap();
                    let main = Rational::new(n as i128, (o.d * o.q) as i128).unwrap();
                    assert!((s(group.m, n) - main).abs() <= dev);
                }
            }
            let cap = ordinary_bound(k, n).unwrap();
            for m in (1..n).filter(|m| m.gcd(&n) == 1) {
                if is_ordinary(m, n, k).unwrap().ordinary {
                    assert!(s(m, n) <= cap);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 2000,
        max_global_rejects: 100_000,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn large_pair_identities((m, n) in coprime_pair(1_000_000_000_000)) {
        let sm = s(m, n);
        let scaled = &sm * &Rational::from_integer(n);
        prop_assert!(scaled.is_integer());
        prop_assert!((scaled.numer() % 2u32) == 0u32.into());
        prop_assert_eq!(s(n - m, n), -&sm);
        prop_assert_eq!(s(mod_inverse(m as i128, n).unwrap(), n), sm.clone());
        let (mi, ni) = (m as i128, n as i128);
        let residual = &sm + &s(n % m, m)
            - Rational::new(mi * mi + ni * ni + 1, mi * ni).unwrap()
            + Rational::from_integer(3);
        prop_assert!(residual.is_zero());
    }

    #[test]
    fn fast_equals_naive((m, n) in coprime_pair(3000)) {
        let q = SumQuery::normalize(m as i128, n as i128).unwrap();
        prop_assert_eq!(dedekind_fast(&q), dedekind_naive(&q));
    }

    #[test]
    fn normalization_preserves_value(m in -5000i128..5000, n in prop_oneof![-400i128..-1, 1i128..400]) {
        prop_assume!(m.gcd(&n) == 1);
        let q = SumQuery::normalize(m, n).unwrap();
        prop_assert_eq!(SumQuery::normalize(m + n, n).unwrap(), q);
        prop_assert_eq!(SumQuery::normalize(m, -n).unwrap(), q);
        prop_assert!(q.m() < q.n());
    }

    #[test]
    fn farey_postcondition((m, n) in coprime_pair(1_000_000_000_000), l_frac in 0.0f64..1.0) {
        let l = 1 + ((n - 2) as f64 * l_frac) as u64;
        let w = farey_approx(m, n, l).unwrap();
        prop_assert!(check_witness(m, n, &w));
        let dist = (Rational::new(m as i128, n as i128).unwrap()
            - Rational::new(w.c as i128, w.d as i128).unwrap()).abs();
        prop_assert!(dist <= Rational::new(1, (l as i128) * (w.d as i128)).unwrap());
    }

    #[test]
    fn count_bound_holds(k in 1u64..=50, n in 2u64..100_000) {
        prop_assume!(n > k && n.gcd(&k) == 1);
        let size = candidate_set(k, n).len() as u64;
        prop_assert!(size <= candidate_count_bound(k));
        prop_assert!(candidate_count_bound(k) <= k * k);
    }
}

#[test]
fn farey_postcondition_ten_thousand() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut done = 0;
    while done < 10_000 {
        let n: u64 = rng.random_range(3..=1_000_000_000_000);
        let m: u64 = rng.random_range(1..n);
        if m.gcd(&n) != 1 {
            continue;
        }
        let l: u64 = rng.random_range(1..n.min(1_000_000));
        let w = farey_approx(m, n, l).unwrap();
        assert!(check_witness(m, n, &w), "({m}, {n}, {l})");
        done += 1;
    }
}
