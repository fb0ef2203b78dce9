use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Expected counts of `a`-floor quotients of `n` in the small, medium and
/// large ranges of `d` under the random-residue model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HeuristicEstimate {
    /// `√(n/a)`; every `d` in this range is a quotient.
    pub e_small: f64,
    /// `(1/√a − 1/a)·√n`.
    pub e_medium: f64,
    /// `√n / a`.
    pub e_large: f64,
    /// `2·√(n/a)`.
    pub total: f64,
}

pub fn heuristic_estimate(a: u64, n: u64) -> HeuristicEstimate {
    assert!(a >= 1 && n >= 1, "a and n must be positive");
    let (a, n) = (a as f64, n as f64);
    let e_small = (n / a).sqrt();
    let e_medium = (1.0 / a.sqrt() - 1.0 / a) * n.sqrt();
    let e_large = n.sqrt() / a;
    HeuristicEstimate {
        e_small,
        e_medium,
        e_large,
        total: e_small + e_medium + e_large,
    }
}

/// Sample means from the random-residue model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SimulationSummary {
    pub trials: u64,
    /// Small-range count plus accepted medium-range cutting lengths.
    pub mean_minus: f64,
    /// Accepted large-range cutting lengths.
    pub mean_plus: f64,
    pub mean_total: f64,
}

/// Simulates the model in which every cutting length `k` outside the small
/// range is accepted when an independent uniform residue mod `a` is 0.
///
/// Medium-range lengths are `⌈√n⌉ <= k < ⌊√(a·n)⌋`, large-range lengths are
/// `1 <= k <= ⌊√n⌋`, and the small range contributes exactly `⌊√(n/a)⌋`.
/// Deterministic for a fixed seed.
pub fn simulate_random_quotients(a: u64, n: u64, trials: u64, seed: u64) -> SimulationSummary {
    assert!(
        a >= 1 && n >= 1 && trials >= 1,
        "a, n and trials must be positive"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = n.isqrt();
    let small = (n / a).isqrt();
    let medium_lo = if s * s == n { s } else { s + 1 };
    let wide_an = u128::from(a) * u128::from(n);
    // ⌊√(a·n)⌋ <= a·n and a·n may exceed u64, so take the root in u128.
    let medium_hi = wide_an.isqrt() as u64;
    let medium_len = medium_hi.saturating_sub(medium_lo);

    let mut sum_minus = 0u64;
    let mut sum_plus = 0u64;
    for _ in 0..trials {
        let medium = (0..medium_len).filter(|_| rng.gen_range(0..a) == 0).count() as u64;
        let large = (0..s).filter(|_| rng.gen_range(0..a) == 0).count() as u64;
        sum_minus += small + medium;
        sum_plus += large;
    }
    let t = trials as f64;
    SimulationSummary {
        trials,
        mean_minus: sum_minus as f64 / t,
        mean_plus: sum_plus as f64 / t,
        mean_total: (sum_minus + sum_plus) as f64 / t,
    }
}
