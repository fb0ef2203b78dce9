use floorq::{floor_multiple_semigroup, is_a_floor_quotient, is_member, sigma, sigma_brute};
use proptest::prelude::*;

/// Membership table for the additive semigroup generated by `gens`, up to
/// `limit`, by coin-problem dynamic programming.
fn generated(gens: &[u64], limit: u64) -> Vec<bool> {
    let limit = limit as usize;
    let mut reach = vec![false; limit + 1];
    reach[0] = true;
    for m in 1..=limit {
        reach[m] = gens
            .iter()
            .any(|&g| (g as usize) <= m && reach[m - g as usize]);
    }
    reach
}

#[test]
fn structure_matches_generated_semigroup() {
    for a in 1..=6u64 {
        for d in 1..=20u64 {
            let s = floor_multiple_semigroup(a, d).unwrap();
            let top = *s.generators.last().unwrap();
            let limit = s.frobenius + top;
            let reach = generated(&s.generators, limit);
            for m in 1..=limit {
                assert_eq!(reach[m as usize], is_member(a, d, m), "a={a} d={d} m={m}");
            }
            let gaps: Vec<u64> = (1..=limit).filter(|&m| !reach[m as usize]).collect();
            assert_eq!(gaps.len() as u64, s.genus, "a={a} d={d}");
            assert_eq!(
                gaps.last().copied().unwrap_or(0),
                s.frobenius,
                "a={a} d={d}"
            );
            assert_eq!(s.generators.len() as u64, d);
        }
    }
}

#[test]
fn frobenius_is_followed_by_members() {
    for a in 1..=6u64 {
        for d in 1..=20u64 {
            let s = floor_multiple_semigroup(a, d).unwrap();
            if d > 1 {
                assert!(!s.contains(s.frobenius));
            }
            let run = d * (a * d + 1);
            assert!((s.frobenius + 1..=s.frobenius + run).all(|m| s.contains(m)));
        }
    }
}

#[test]
fn generators_are_minimal() {
    for a in 1..=4u64 {
        for d in 1..=8u64 {
            let s = floor_multiple_semigroup(a, d).unwrap();
            let limit = s.frobenius + *s.generators.last().unwrap();
            let full = generated(&s.generators, limit);
            for skip in 0..s.generators.len() {
                let mut rest = s.generators.clone();
                rest.remove(skip);
                assert_ne!(generated(&rest, limit), full, "a={a} d={d} dropping {skip}");
            }
        }
    }
}

#[test]
fn membership_is_the_relation() {
    for a in 1..=8 {
        for d in 1..=40 {
            for n in 1..=2000 {
                assert_eq!(is_member(a, d, n), is_a_floor_quotient(a, d, n));
            }
        }
    }
}

#[test]
fn closed_under_addition() {
    for a in 1..=4u64 {
        for d in 1..=10u64 {
            let members: Vec<u64> = (1..=200).filter(|&m| is_member(a, d, m)).collect();
            for &m in &members {
                for &n in &members {
                    assert!(is_member(a, d, m + n), "a={a} d={d} {m}+{n}");
                }
            }
        }
    }
}

#[test]
fn sigma_matches_counting() {
    for a in 1..=6 {
        for d in 1..=30 {
            let mut count = 0;
            for x in 0..=1500 {
                if x > 0 && is_member(a, d, x) {
                    count += 1;
                }
                assert_eq!(sigma(a, d, x), count, "a={a} d={d} x={x}");
            }
            assert_eq!(sigma_brute(a, d, 1500), count);
        }
    }
}

#[test]
fn sigma_phase_transition() {
    // Past x = a·d² every residue class has started, so σ tracks
    // x − a·d²/2 + a·d/2; before it only the first x/(a·d) classes count.
    let mut worst_above = 0f64;
    let mut worst_below = 0f64;
    for a in 1..=5u64 {
        for d in 1..=30u64 {
            let (af, df) = (a as f64, d as f64);
            for x in 1..=6 * a * d * d {
                let s = sigma(a, d, x) as f64;
                let xf = x as f64;
                if x >= a * d * d {
                    let err = (s - (xf - af * df * df / 2.0 + af * df / 2.0)).abs() / df;
                    worst_above = worst_above.max(err);
                } else {
                    let t = xf / (af * df);
                    let err = (s - af * t * t / 2.0).abs() / (af * df);
                    worst_below = worst_below.max(err);
                }
            }
        }
    }
    println!("measured constants: above {worst_above:.3}, below {worst_below:.3}");
    assert!(worst_above <= 2.0 && worst_below <= 2.0);
}

proptest! {
    #[test]
    fn sigma_agrees_with_brute_force(a in 1u64..20, d in 1u64..60, x in 0u64..5000) {
        prop_assert_eq!(sigma(a, d, x), sigma_brute(a, d, x));
    }

    #[test]
    fn generator_formula(a in 1u64..1000, d in 1u64..200) {
        let s = floor_multiple_semigroup(a, d).unwrap();
        for (j, &g) in s.generators.iter().enumerate() {
            prop_assert!(is_member(a, d, g));
            // The class j member just below γ_j is not in M_a(d).
            if g > d {
                prop_assert!(!is_member(a, d, g - d));
            }
            prop_assert_eq!(g % d, j as u64 % d);
        }
    }
}
