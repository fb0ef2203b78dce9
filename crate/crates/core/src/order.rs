//! The `a`-floor quotient relation.
//!
//! For a dilation parameter `a >= 1`, `d` is an *`a`-floor quotient* of `n`
//! (written `d ≼_a n`) when `a·d = ⌊a·n / k⌋` for some positive integer `k`.
//! The case `a = 1` is the floor quotient order. Every `≼_a` is a partial
//! order that sits between divisibility and the usual `≤` order.
//!
//! All products are formed in `u128`, so every predicate here is exact on the
//! full `u64` input range and none of them can fail on overflow.

use std::fmt;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{require_positive, Result};

#[inline]
fn check_positive(a: u64, d: u64, n: u64) {
    assert!(
        a >= 1 && d >= 1 && n >= 1,
        "a, d and n must all be positive"
    );
}

/// A validated `(a, d, n)` triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuotientQuery {
    pub a: u64,
    pub d: u64,
    pub n: u64,
}

impl QuotientQuery {
    pub fn new(a: u64, d: u64, n: u64) -> Result<Self> {
        require_positive("a", a)?;
        require_positive("d", d)?;
        require_positive("n", n)?;
        Ok(Self { a, d, n })
    }

    pub fn holds(&self) -> bool {
        is_a_floor_quotient(self.a, self.d, self.n)
    }

    pub fn characterizations(&self) -> Characterizations {
        characterization_suite(self.a, self.d, self.n)
    }

    pub fn cutting_lengths(&self) -> CuttingLengthSet {
        cutting_lengths(self.a, self.d, self.n)
    }
}

/// Returns `true` iff `d ≼_a n`.
///
/// Uses the reciprocal-duality test `a·d = ⌊a·n / ⌊n/d⌋⌋`, which is O(1).
/// Pairs with `d > n` are never related.
///
/// # Panics
///
/// Panics if any argument is zero.
pub fn is_a_floor_quotient(a: u64, d: u64, n: u64) -> bool {
    check_positive(a, d, n);
    if d > n {
        return false;
    }
    let q = u128::from(n / d);
    let (a, d, n) = (u128::from(a), u128::from(d), u128::from(n));
    a * d == (a * n) / q
}

/// The truth values of the six equivalent characterizations of `d ≼_a n`,
/// each decided independently of the others.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Characterizations {
    /// `a·d = ⌊a·n/k⌋` for some `k >= 1`.
    pub cutting: bool,
    /// `k·[d, d + 1/a) ⊇ [n, n + 1/a)` for some `k >= 1`.
    pub covering: bool,
    /// `k·[d, d + 1/a) ∩ [n, n + 1/a) ≠ ∅` for some `k >= 1`.
    pub intersection: bool,
    /// `n = d·k + r` with `0 <= r < min(d, k/a)` for some `k >= 1`.
    pub strong_remainder: bool,
    /// `⌊n/d⌋ > ⌊n/(d + 1/a)⌋`.
    pub tipping_point: bool,
    /// `a·d = ⌊a·n / ⌊n/d⌋⌋`.
    pub reciprocal_duality: bool,
}

impl Characterizations {
    pub const NAMES: [&'static str; 6] = [
        "cutting",
        "covering",
        "intersection",
        "strong_remainder",
        "tipping_point",
        "reciprocal_duality",
    ];

    pub fn as_array(&self) -> [bool; 6] {
        [
            self.cutting,
            self.covering,
            self.intersection,
            self.strong_remainder,
            self.tipping_point,
            self.reciprocal_duality,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let v = self.as_array();
        v.iter().all(|&b| b == v[0])
    }
}

/// Evaluates all six characterizations of `d ≼_a n`.
///
/// The existential conditions search `k` over `1..=n`, so this is O(n) and
/// meant for verification sweeps rather than production queries. Nothing
/// here asserts that the six answers agree.
///
/// # Panics
///
/// Panics if any argument is zero.
pub fn characterization_suite(a: u64, d: u64, n: u64) -> Characterizations {
    check_positive(a, d, n);
    let (a, d, n) = (u128::from(a), u128::from(d), u128::from(n));
    let ad = a * d;
    let an = a * n;

    // Products k·x with k <= n and x < 2^128 can saturate; a saturated value
    // is larger than every `an` or `an + 1` it is compared against, so the
    // comparisons stay exact.
    let cutting = (1..=n).any(|k| an / k == ad);
    let covering = (1..=n).any(|k| {
        let lo = k.saturating_mul(ad);
        lo <= an && an < lo.saturating_add(k)
    });
    let intersection =
        (1..=n).any(|k| k.saturating_mul(ad) < an + 1 && an < k.saturating_mul(ad + 1));
    let strong_remainder = (1..=n).any(|k| match k.checked_mul(d) {
        Some(dk) if dk <= n => {
            let r = n - dk;
            r < d && a * r < k
        }
        _ => false,
    });
    let tipping_point = n / d > an / (ad + 1);
    let reciprocal_duality = match n / d {
        0 => false,
        q => ad == an / q,
    };

    Characterizations {
        cutting,
        covering,
        intersection,
        strong_remainder,
        tipping_point,
        reciprocal_duality,
    }
}

/// The set of cutting lengths `{ k : a·d = ⌊a·n/k⌋ }`, which is always the
/// integer range `lo_exclusive < k <= hi_inclusive`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CuttingLengthSet {
    pub lo_exclusive: u64,
    pub hi_inclusive: u64,
}

impl CuttingLengthSet {
    pub fn is_empty(&self) -> bool {
        self.lo_exclusive >= self.hi_inclusive
    }

    pub fn len(&self) -> u64 {
        self.hi_inclusive.saturating_sub(self.lo_exclusive)
    }

    pub fn contains(&self, k: u64) -> bool {
        self.lo_exclusive < k && k <= self.hi_inclusive
    }

    pub fn iter(&self) -> RangeInclusive<u64> {
        if self.is_empty() {
            #[allow(clippy::reversed_empty_ranges)]
            return 1..=0;
        }
        self.lo_exclusive + 1..=self.hi_inclusive
    }
}

impl fmt::Display for CuttingLengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.lo_exclusive, self.hi_inclusive)
    }
}

/// Computes `K_a(d, n) = { k : ⌊a·n/(a·d + 1)⌋ < k <= ⌊n/d⌋ }`.
///
/// # Panics
///
/// Panics if any argument is zero.
pub fn cutting_lengths(a: u64, d: u64, n: u64) -> CuttingLengthSet {
    check_positive(a, d, n);
    let (wa, wd, wn) = (u128::from(a), u128::from(d), u128::from(n));
    // a·n / (a·d + 1) < n, so it fits in u64.
    let lo = (wa * wn / (wa * wd + 1)) as u64;
    CuttingLengthSet {
        lo_exclusive: lo,
        hi_inclusive: n / d,
    }
}

/// `δ(d, n) = n − d·⌊n/d⌋`, i.e. `n mod d`.
///
/// # Panics
///
/// Panics if `d` is zero.
pub fn quotient_discrepancy(d: u64, n: u64) -> u64 {
    assert!(d >= 1, "d must be positive");
    n % d
}

/// The set `S(d, n)` of all `a` with `d ≼_a n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "bound", rename_all = "lowercase")]
pub enum ScalingSet {
    /// Every positive `a` (exactly when `d | n`).
    All,
    /// `{1, ..., bound}` with `bound >= 1`.
    Initial(u64),
    /// No `a` at all (`d` is not even a floor quotient of `n`).
    Empty,
}

impl ScalingSet {
    pub fn contains(&self, a: u64) -> bool {
        match *self {
            ScalingSet::All => a >= 1,
            ScalingSet::Initial(bound) => 1 <= a && a <= bound,
            ScalingSet::Empty => false,
        }
    }

    /// Largest member, `None` for `All` and `Empty`.
    pub fn bound(&self) -> Option<u64> {
        match *self {
            ScalingSet::Initial(bound) => Some(bound),
            _ => None,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            ScalingSet::All => "all",
            ScalingSet::Initial(_) => "initial",
            ScalingSet::Empty => "empty",
        }
    }
}

impl fmt::Display for ScalingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalingSet::Initial(bound) => write!(f, "initial {bound}"),
            other => f.write_str(other.kind_name()),
        }
    }
}

/// Computes `S(d, n)` from the quotient discrepancy.
///
/// When `d ∤ n` but `d ≼_1 n`, the bound is the largest integer strictly
/// below `⌊n/d⌋ / δ(d, n)`, which is `(⌊n/d⌋ − 1) / δ` in integer division.
/// Pairs with `d > n` give `Empty`.
///
/// # Panics
///
/// Panics if `d` or `n` is zero.
pub fn scaling_set(d: u64, n: u64) -> ScalingSet {
    assert!(d >= 1 && n >= 1, "d and n must be positive");
    if d > n {
        return ScalingSet::Empty;
    }
    let delta = quotient_discrepancy(d, n);
    if delta == 0 {
        return ScalingSet::All;
    }
    let q = n / d;
    // d ≼_1 n iff δ < ⌊n/d⌋
    if delta >= q {
        return ScalingSet::Empty;
    }
    ScalingSet::Initial((q - 1) / delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_cutting(a: u64, d: u64, n: u64) -> Vec<u64> {
        (1..=n).filter(|&k| a * n / k == a * d).collect()
    }

    #[test]
    fn scaling_example_pairs() {
        assert!(is_a_floor_quotient(1, 5, 16));
        assert!(is_a_floor_quotient(2, 5, 16));
        assert!(!is_a_floor_quotient(3, 5, 16));
        assert!(is_a_floor_quotient(7, 13, 13));
    }

    #[test]
    fn two_is_not_a_2_floor_quotient_of_11() {
        // ⌊22/k⌋ takes the values 22, 11, 7, 5, 4, 3, 3, 2, ... and skips 6.
        assert!(brute_cutting(2, 3, 11).is_empty());
        assert!(!is_a_floor_quotient(2, 3, 11));
    }

    #[test]
    fn d_greater_than_n_is_unrelated() {
        assert!(!is_a_floor_quotient(1, 4, 3));
        assert_eq!(scaling_set(4, 3), ScalingSet::Empty);
        assert!(cutting_lengths(1, 4, 3).is_empty());
        assert!(!characterization_suite(1, 4, 3).cutting);
    }

    #[test]
    fn strong_remainder_bound_is_strict() {
        // n = 5 = 2·2 + 1 and r = 1 is not < 2/2.
        let c = characterization_suite(2, 2, 5);
        assert_eq!(c.as_array(), [false; 6]);
    }

    #[test]
    fn characterizations_true_cases() {
        assert_eq!(characterization_suite(1, 3, 10).as_array(), [true; 6]);
        assert_eq!(characterization_suite(1, 1, 1).as_array(), [true; 6]);
    }

    #[test]
    fn cutting_length_examples() {
        let k = cutting_lengths(1, 2, 7);
        assert_eq!(k.iter().collect::<Vec<_>>(), vec![3]);
        assert_eq!(k.iter().collect::<Vec<_>>(), brute_cutting(1, 2, 7));

        assert_eq!(cutting_lengths(1, 1, 1).iter().collect::<Vec<_>>(), vec![1]);

        let k = cutting_lengths(2, 5, 16);
        assert_eq!(
            k,
            CuttingLengthSet {
                lo_exclusive: 2,
                hi_inclusive: 3
            }
        );
        assert_eq!(k.len(), 1);
        assert!(k.contains(3) && !k.contains(2) && !k.contains(4));
    }

    #[test]
    fn empty_cutting_set_iterates_nothing() {
        let k = cutting_lengths(3, 5, 16);
        assert!(k.is_empty());
        assert_eq!(k.len(), 0);
        assert_eq!(k.iter().count(), 0);
    }

    #[test]
    fn discrepancy_examples() {
        assert_eq!(quotient_discrepancy(5, 16), 1);
        assert_eq!(quotient_discrepancy(5, 15), 0);
        assert_eq!(quotient_discrepancy(5, 18), 3);
    }

    #[test]
    fn scaling_set_examples() {
        assert_eq!(scaling_set(5, 15), ScalingSet::All);
        assert_eq!(scaling_set(5, 16), ScalingSet::Initial(2));
        assert_eq!(scaling_set(5, 17), ScalingSet::Initial(1));
        assert_eq!(scaling_set(5, 18), ScalingSet::Empty);
        for n in 1..50 {
            assert_eq!(scaling_set(1, n), ScalingSet::All);
        }
        // (2, 2b + 1) with b = 7: related exactly for a < 7.
        assert_eq!(scaling_set(2, 15), ScalingSet::Initial(6));
    }

    #[test]
    fn discrepancy_is_symmetric_on_floor_quotients() {
        for n in 1..200u64 {
            for d in 1..=n {
                if is_a_floor_quotient(1, d, n) {
                    assert_eq!(quotient_discrepancy(d, n), quotient_discrepancy(n / d, n));
                }
            }
        }
    }

    #[test]
    fn extreme_inputs_do_not_overflow() {
        let m = u64::MAX;
        assert!(is_a_floor_quotient(m, m, m));
        assert!(is_a_floor_quotient(m, 1, m));
        assert!(!is_a_floor_quotient(m, m - 1, m));
        assert!(!is_a_floor_quotient(1, m - 1, m));
        assert!(is_a_floor_quotient(1, m / 2, m));
        let k = cutting_lengths(m, 1, m);
        assert_eq!(k.hi_inclusive, m);
        assert!(!k.is_empty());
    }

    #[test]
    fn query_rejects_zero() {
        assert!(QuotientQuery::new(0, 1, 1).is_err());
        assert!(QuotientQuery::new(1, 0, 1).is_err());
        assert!(QuotientQuery::new(1, 1, 0).is_err());
        let q = QuotientQuery::new(2, 5, 16).unwrap();
        assert!(q.holds());
        assert!(q.characterizations().all_agree());
        assert_eq!(q.cutting_lengths().len(), 1);
    }

    #[test]
    #[should_panic]
    fn predicate_panics_on_zero() {
        is_a_floor_quotient(0, 1, 1);
    }

    #[test]
    fn scaling_display() {
        assert_eq!(ScalingSet::All.to_string(), "all");
        assert_eq!(ScalingSet::Initial(2).to_string(), "initial 2");
        assert_eq!(ScalingSet::Empty.to_string(), "empty");
    }
}
