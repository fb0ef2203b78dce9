//! The numerical semigroup `M_a(d) = { n : d ≼_a n }` of `a`-floor multiples.
//!
//! Writing `n = k·d + j` with `0 <= j < d`, `n` is a member exactly when
//! `a·j < k`. The smallest member in residue class `j` is
//! `γ_j = j·(a·d + 1) + d`, and these `d` values form the minimal generating
//! set. The Frobenius number is `(d − 1)(a·d + 1)` and there are
//! `(d − 1)(a·d + 2) / 2` gaps.

use serde::Serialize;

use crate::error::{require_positive, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FloorMultipleSemigroup {
    pub a: u64,
    pub d: u64,
    /// `γ_0 < γ_1 < ... < γ_{d-1}`.
    pub generators: Vec<u64>,
    /// Largest non-member; 0 when there are no gaps (`d = 1`).
    pub frobenius: u64,
    /// Number of positive non-members.
    pub genus: u64,
}

impl FloorMultipleSemigroup {
    pub fn new(a: u64, d: u64) -> Result<Self> {
        require_positive("a", a)?;
        require_positive("d", d)?;
        let step = u128::from(a) * u128::from(d) + 1;
        let wd = u128::from(d);
        let to_u64 = |v: u128, what| u64::try_from(v).map_err(|_| Error::Overflow(what));

        // The largest generator bounds every stored value.
        to_u64((wd - 1) * step + wd, "the largest semigroup generator")?;
        let frobenius = to_u64((wd - 1) * step, "the Frobenius number")?;
        let genus = to_u64((wd - 1) * (step + 1) / 2, "the genus")?;
        let generators = (0..d).map(|j| (u128::from(j) * step + wd) as u64).collect();
        Ok(Self {
            a,
            d,
            generators,
            frobenius,
            genus,
        })
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= 1 && is_member(self.a, self.d, n)
    }
}

pub fn floor_multiple_semigroup(a: u64, d: u64) -> Result<FloorMultipleSemigroup> {
    FloorMultipleSemigroup::new(a, d)
}

/// O(1) membership test: with `n = k·d + j`, `0 <= j < d`, `n ∈ M_a(d)` iff
/// `a·j < k`.
///
/// # Panics
///
/// Panics if any argument is zero.
pub fn is_member(a: u64, d: u64, n: u64) -> bool {
    assert!(a >= 1 && d >= 1 && n >= 1, "a, d and n must be positive");
    let k = n / d;
    let j = n % d;
    u128::from(a) * u128::from(j) < u128::from(k)
}

/// `σ_{a,d}(x)`: the number of `a`-floor multiples of `d` that are `<= x`,
/// summed over residue classes as `Σ_j ⌊(x − j(a·d + 1)) / d⌋⁺`.
///
/// Only classes with `j·(a·d + 1) <= x` contribute, so the cost is
/// O(min(d, x / (a·d))).
pub fn sigma(a: u64, d: u64, x: u64) -> u64 {
    assert!(a >= 1 && d >= 1, "a and d must be positive");
    let step = u128::from(a) * u128::from(d) + 1;
    let (wd, wx) = (u128::from(d), u128::from(x));
    let classes = (wx / step + 1).min(wd);
    let total: u128 = (0..classes).map(|j| (wx - j * step) / wd).sum();
    // total <= x
    total as u64
}

/// Counts members of `M_a(d)` in `1..=x` one by one.
pub fn sigma_brute(a: u64, d: u64, x: u64) -> u64 {
    (1..=x).filter(|&n| is_member(a, d, n)).count() as u64
}
