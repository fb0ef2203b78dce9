use floorq::{
    characterization_suite, cutting_lengths, is_a_floor_quotient, scaling_set, Characterizations,
    QuotientQuery, ScalingSet,
};
use proptest::prelude::*;

/// `a·d = ⌊a·n/k⌋` for some `1 <= k <= n`, searched directly.
fn by_definition(a: u64, d: u64, n: u64) -> bool {
    let (a, d, n) = (u128::from(a), u128::from(d), u128::from(n));
    (1..=n).any(|k| a * n / k == a * d)
}

#[test]
fn predicate_matches_definition() {
    for a in 1..=6 {
        for n in 1..=150 {
            for d in 1..=n + 2 {
                assert_eq!(
                    is_a_floor_quotient(a, d, n),
                    by_definition(a, d, n),
                    "a={a} d={d} n={n}"
                );
            }
        }
    }
}

#[test]
fn characterizations_agree_on_a_grid() {
    for a in 1..=6 {
        for n in 1..=120 {
            for d in 1..=n {
                let c = characterization_suite(a, d, n);
                assert!(c.all_agree(), "a={a} d={d} n={n}: {c:?}");
                assert_eq!(c.reciprocal_duality, is_a_floor_quotient(a, d, n));
            }
        }
    }
}

#[test]
fn sandwich_between_divisibility_and_size() {
    for a in 1..=8 {
        for n in 1..=200u64 {
            for d in 1..=n + 3 {
                if n % d == 0 {
                    assert!(is_a_floor_quotient(a, d, n));
                }
                if is_a_floor_quotient(a, d, n) {
                    assert!(d <= n);
                }
            }
        }
    }
}

#[test]
fn hierarchy_is_strict() {
    for b in 2..=8u64 {
        for a in 1..b {
            for n in 1..=150 {
                for d in 1..=n {
                    if is_a_floor_quotient(b, d, n) {
                        assert!(is_a_floor_quotient(a, d, n), "a={a} b={b} d={d} n={n}");
                    }
                }
            }
        }
        // 2 ≼_a 2b+1 exactly for a < b.
        assert!(is_a_floor_quotient(b - 1, 2, 2 * b + 1));
        assert!(!is_a_floor_quotient(b, 2, 2 * b + 1));
    }
}

#[test]
fn intersection_over_all_a_is_divisibility() {
    for n in 1..=300u64 {
        for d in 1..=n {
            assert_eq!(is_a_floor_quotient(n / d, d, n), n % d == 0, "d={d} n={n}");
        }
    }
}

#[test]
fn scaling_set_matches_pointwise_membership() {
    for n in 1..=200u64 {
        for d in 1..=n + 2 {
            let s = scaling_set(d, n);
            let top = match s {
                ScalingSet::Initial(b) => b + 2,
                _ => 12,
            };
            for a in 1..=top {
                assert_eq!(
                    s.contains(a),
                    is_a_floor_quotient(a, d, n),
                    "d={d} n={n} a={a}"
                );
            }
            match s {
                ScalingSet::All => assert_eq!(n % d, 0),
                ScalingSet::Initial(b) => assert!(b >= 1 && n % d != 0),
                ScalingSet::Empty => assert!(!is_a_floor_quotient(1, d, n)),
            }
        }
    }
}

#[test]
fn scaling_set_examples() {
    assert_eq!(scaling_set(5, 15), ScalingSet::All);
    assert_eq!(scaling_set(5, 16), ScalingSet::Initial(2));
    assert_eq!(scaling_set(5, 17), ScalingSet::Initial(1));
    assert_eq!(scaling_set(5, 18), ScalingSet::Empty);
}

#[test]
fn cutting_lengths_match_brute_force() {
    for a in 1..=5u64 {
        for n in 1..=120u64 {
            for d in 1..=n {
                let k = cutting_lengths(a, d, n);
                let brute: Vec<u64> = (1..=n).filter(|&k| a * n / k == a * d).collect();
                assert_eq!(k.iter().collect::<Vec<_>>(), brute, "a={a} d={d} n={n}");
                assert_eq!(k.len(), brute.len() as u64);
                assert_eq!(k.is_empty(), !is_a_floor_quotient(a, d, n));
            }
        }
    }
}

#[test]
fn query_rejects_zero() {
    assert!(QuotientQuery::new(0, 1, 1).is_err());
    assert!(QuotientQuery::new(1, 0, 1).is_err());
    assert!(QuotientQuery::new(1, 1, 0).is_err());
    assert_eq!(Characterizations::NAMES.len(), 6);
}

proptest! {
    #[test]
    fn dilation_reduces_to_the_floor_quotient_order(
        a in 1u64..=1 << 20,
        n in 1u64..=1 << 40,
        d_frac in 0.0f64..=1.0,
    ) {
        let d = ((n as f64 * d_frac) as u64).clamp(1, n);
        prop_assert_eq!(is_a_floor_quotient(a, d, n), is_a_floor_quotient(1, a * d, a * n));
    }

    #[test]
    fn characterizations_agree_randomly(a in 1u64..50, n in 1u64..20_000, d_frac in 0.0f64..=1.0) {
        let d = ((n as f64 * d_frac) as u64).clamp(1, n);
        let c = characterization_suite(a, d, n);
        prop_assert!(c.all_agree(), "{:?}", c);
    }

    #[test]
    fn floor_quotient_of_each_cutting_length(a in 1u64..1000, n in 1u64..u64::MAX, k in 1u64..1000) {
        // For a = 1 every ⌊n/k⌋ is a floor quotient.
        prop_assert!(is_a_floor_quotient(1, n / k.min(n), n));
        let ks = cutting_lengths(a, n / k.min(n), n);
        if is_a_floor_quotient(a, n / k.min(n), n) {
            prop_assert!(!ks.is_empty());
        }
    }

    #[test]
    fn total_on_the_full_range(a in 1u64.., d in 1u64.., n in 1u64..) {
        let holds = is_a_floor_quotient(a, d, n);
        prop_assert!(!holds || d <= n);
        prop_assert_eq!(scaling_set(d, n).contains(a), holds);
    }
}
