//! Order intervals `Q_a[d, n]`, the small/large split of initial intervals,
//! the floor reciprocal map `J_n(k) = ⌊n/k⌋`, and stabilization thresholds.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::incidence::BitMatrix;
use crate::order::{is_a_floor_quotient, scaling_set, ScalingSet};

/// Divisors of `n` in increasing order, by trial division up to `√n`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "n must be positive");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let s = n.isqrt();
    for d in 1..=s {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
    }
    small.extend(large.into_iter().rev());
    small
}

/// The candidates `{1, ..., ⌊√n⌋} ∪ {⌊n/k⌋ : 1 <= k <= ⌊√n⌋}`, which are
/// exactly the floor quotients of `n`, in increasing order.
fn floor_quotient_candidates(n: u64) -> Vec<u64> {
    let s = n.isqrt();
    let mut out: Vec<u64> = (1..=s).collect();
    for k in (1..=s).rev() {
        let q = n / k;
        if q > s {
            out.push(q);
        }
    }
    out
}

/// The initial interval `Q_a[1, n]`, i.e. all `d` with `d ≼_a n`, sorted.
///
/// Costs O(√n) relation tests.
pub fn floor_quotients_initial(a: u64, n: u64) -> Vec<u64> {
    assert!(a >= 1 && n >= 1, "a and n must be positive");
    let mut out = floor_quotient_candidates(n);
    out.retain(|&d| is_a_floor_quotient(a, d, n));
    out
}

/// Number of elements of `Q_a[1, n]`, without allocating.
pub fn initial_interval_size(a: u64, n: u64) -> u64 {
    assert!(a >= 1 && n >= 1, "a and n must be positive");
    let s = n.isqrt();
    let mut count = 0;
    for d in 1..=s {
        count += u64::from(is_a_floor_quotient(a, d, n));
    }
    for k in 1..=s {
        let q = n / k;
        if q > s {
            count += u64::from(is_a_floor_quotient(a, q, n));
        }
    }
    count
}

/// The order interval `Q_a[lo, hi]` together with its full incidence matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderInterval {
    pub a: u64,
    pub lo: u64,
    pub hi: u64,
    elements: Vec<u64>,
    incidence: BitMatrix,
}

impl OrderInterval {
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn incidence(&self) -> &BitMatrix {
        &self.incidence
    }

    pub fn index_of(&self, e: u64) -> Option<usize> {
        self.elements.binary_search(&e).ok()
    }

    /// `elements[i] ≼_a elements[j]`.
    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.incidence.get(i, j)
    }

    /// Strict relations `e ≺_a f` between elements, ordered by `(e, f)`.
    pub fn relations(&self) -> Vec<(u64, u64)> {
        self.incidence
            .ones()
            .filter(|&(i, j)| i != j)
            .map(|(i, j)| (self.elements[i], self.elements[j]))
            .collect()
    }

    /// Number of incidences including the reflexive ones. This is the
    /// dimension of the incidence algebra of the interval.
    pub fn incidence_count(&self) -> u64 {
        self.incidence.count_ones()
    }

    /// The divisibility incidence on the same element set.
    pub fn divisor_incidence(&self) -> BitMatrix {
        let m = self.len();
        let mut div = BitMatrix::new(m);
        for i in 0..m {
            for j in i..m {
                if self.elements[j] % self.elements[i] == 0 {
                    div.set(i, j, true);
                }
            }
        }
        div
    }

    /// True when the interval is `D[lo, hi]` as a poset: every related pair is
    /// a divisor pair and vice versa.
    pub fn matches_divisor_order(&self) -> bool {
        self.incidence == self.divisor_incidence()
    }

    pub fn is_total_order(&self) -> bool {
        let m = self.len();
        (0..m).all(|i| (i + 1..m).all(|j| self.le(i, j)))
    }

    /// A finite bounded poset is a lattice iff every pair has a join.
    pub fn is_lattice(&self) -> bool {
        let m = self.len();
        (0..m).all(|i| (i + 1..m).all(|j| self.join(i, j).is_some()))
    }

    /// Index of the least upper bound of two elements, if it exists.
    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let m = self.len();
        let upper: Vec<usize> = (0..m).filter(|&k| self.le(i, k) && self.le(j, k)).collect();
        upper
            .iter()
            .copied()
            .find(|&u| upper.iter().all(|&v| self.le(u, v)))
    }
}

/// Builds `Q_a[d, n]`. The interval is empty when `d` is not an `a`-floor
/// quotient of `n`.
pub fn interval(a: u64, d: u64, n: u64) -> OrderInterval {
    assert!(a >= 1 && d >= 1 && n >= 1, "a, d and n must be positive");
    let elements: Vec<u64> = if is_a_floor_quotient(a, d, n) {
        floor_quotients_initial(a, n)
            .into_iter()
            .filter(|&e| e >= d && is_a_floor_quotient(a, d, e))
            .collect()
    } else {
        Vec::new()
    };
    let m = elements.len();
    let mut incidence = BitMatrix::new(m);
    for i in 0..m {
        incidence.set(i, i, true);
        for j in i + 1..m {
            if is_a_floor_quotient(a, elements[i], elements[j]) {
                incidence.set(i, j, true);
            }
        }
    }
    OrderInterval {
        a,
        lo: d,
        hi: n,
        elements,
        incidence,
    }
}

/// The floor reciprocal map `J_n(k) = ⌊n/k⌋` on `1..=n`.
pub fn floor_reciprocal(n: u64, k: u64) -> Result<u64> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "floor reciprocal needs 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    Ok(n / k)
}

/// `Q_a[1, n]` split into small (`d <= √n`) and large (`⌊n/d⌋ <= √n`) parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InitialDecomposition {
    pub a: u64,
    pub n: u64,
    pub minus: Vec<u64>,
    pub plus: Vec<u64>,
}

impl InitialDecomposition {
    /// Sorted union of both parts, which is `Q_a[1, n]`.
    pub fn union(&self) -> Vec<u64> {
        let mut all: Vec<u64> = self.minus.iter().chain(&self.plus).copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    pub fn common(&self) -> Vec<u64> {
        self.minus
            .iter()
            .copied()
            .filter(|d| self.plus.binary_search(d).is_ok())
            .collect()
    }
}

pub fn decomposition(a: u64, n: u64) -> InitialDecomposition {
    let all = floor_quotients_initial(a, n);
    let wide_n = u128::from(n);
    let square = |x: u64| u128::from(x) * u128::from(x);
    let minus = all
        .iter()
        .copied()
        .filter(|&d| square(d) <= wide_n)
        .collect();
    let plus = all
        .iter()
        .copied()
        .filter(|&d| square(n / d) <= wide_n)
        .collect();
    InitialDecomposition { a, n, minus, plus }
}

/// Upper bound on both stabilization thresholds of `n`, from the interval
/// stabilization theorem with `d = 1`.
pub fn stabilization_cap(n: u64) -> u64 {
    (n / 2).max(1)
}

/// One more than the largest `a` for which `d ≼_a n` still holds, or 1 if
/// the pair is related for no `a` at all. Only meaningful when `d ∤ n`.
fn release_point(d: u64, n: u64) -> u64 {
    match scaling_set(d, n) {
        ScalingSet::Initial(bound) => bound + 1,
        ScalingSet::Empty => 1,
        ScalingSet::All => unreachable!("{d} divides {n}"),
    }
}

fn check_cap(n: u64, threshold: u64, what: &str) -> u64 {
    assert!(
        threshold <= stabilization_cap(n),
        "Q_a[1, {n}] failed to reach the divisor {what} by the stabilization cap"
    );
    threshold
}

/// Smallest `a` with `Q_a[1, n] = D[1, n]` as sets.
///
/// Each `S(d, n)` is an initial segment of the positive integers, so the
/// threshold is one past the largest scaling bound among the floor quotients
/// of `n` that do not divide it. Costs O(√n).
///
/// # Panics
///
/// Panics if the threshold exceeds `max(1, ⌊n/2⌋)`, which would contradict
/// the stabilization theorem.
pub fn set_stabilization_threshold(n: u64) -> u64 {
    assert!(n >= 1, "n must be positive");
    let t = floor_quotient_candidates(n)
        .into_iter()
        .filter(|&d| n % d != 0)
        .map(|d| release_point(d, n))
        .max()
        .unwrap_or(1);
    check_cap(n, t, "set")
}

/// Smallest `a` with `Q_a[1, n] = D[1, n]` as posets.
///
/// Once the element sets agree only relations between divisors can differ,
/// so the set threshold is raised past the scaling bound of every divisor
/// pair `e < f` with `e ∤ f`.
///
/// # Panics
///
/// Panics if the threshold exceeds `max(1, ⌊n/2⌋)`.
pub fn poset_stabilization_threshold(n: u64) -> u64 {
    let divs = divisors(n);
    let stray = divs
        .iter()
        .enumerate()
        .flat_map(|(i, &e)| divs[i + 1..].iter().map(move |&f| (e, f)))
        .filter(|&(e, f)| f % e != 0)
        .map(|(e, f)| release_point(e, f))
        .max()
        .unwrap_or(1);
    check_cap(n, set_stabilization_threshold(n).max(stray), "poset")
}
