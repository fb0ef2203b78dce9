//! Zeta and Möbius functions of `≼_a` on finite intervals.

use crate::error::{Error, Result};
use crate::intervals::{interval, OrderInterval};
use crate::order::is_a_floor_quotient;

/// `ζ_a(d, n)`: 1 if `d ≼_a n`, else 0.
pub fn zeta(a: u64, d: u64, n: u64) -> i64 {
    i64::from(is_a_floor_quotient(a, d, n))
}

/// Möbius values on an order interval `Q_a[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusTable {
    interval: OrderInterval,
    mu: Vec<i64>,
    full_mu: Option<Vec<i64>>,
}

fn overflow() -> Error {
    Error::Overflow("a Möbius value")
}

/// Runs `μ(s, s) = 1`, `μ(s, m) = −Σ_{s ≼ e ≺ m} μ(s, e)` from element index
/// `start`. Ascending element order is a linear extension since `e ≼_a m`
/// implies `e <= m`. Unrelated entries are 0.
fn mu_row(iv: &OrderInterval, start: usize) -> Result<Vec<i64>> {
    let m = iv.len();
    let mut row = vec![0i64; m];
    row[start] = 1;
    for j in start + 1..m {
        if !iv.le(start, j) {
            continue;
        }
        let mut acc = 0i64;
        for (k, &mu) in row.iter().enumerate().take(j).skip(start) {
            if mu != 0 && iv.le(k, j) {
                acc = acc.checked_add(mu).ok_or_else(overflow)?;
            }
        }
        row[j] = acc.checked_neg().ok_or_else(overflow)?;
    }
    Ok(row)
}

impl MoebiusTable {
    /// `μ_a(lo, e)` for every element `e` of `Q_a[d, n]`.
    pub fn build(a: u64, d: u64, n: u64) -> Result<Self> {
        let interval = interval(a, d, n);
        let mu = if interval.is_empty() {
            Vec::new()
        } else {
            mu_row(&interval, 0)?
        };
        Ok(Self {
            interval,
            mu,
            full_mu: None,
        })
    }

    /// Like [`build`](Self::build), also filling the whole matrix
    /// `μ_a(e_i, e_j)`.
    pub fn build_full(a: u64, d: u64, n: u64) -> Result<Self> {
        let mut table = Self::build(a, d, n)?;
        let m = table.interval.len();
        let mut full = Vec::with_capacity(m * m);
        for i in 0..m {
            full.extend(mu_row(&table.interval, i)?);
        }
        table.full_mu = Some(full);
        Ok(table)
    }

    pub fn interval(&self) -> &OrderInterval {
        &self.interval
    }

    /// `μ_a(lo, e)` indexed like `interval().elements()`.
    pub fn mu(&self) -> &[i64] {
        &self.mu
    }

    /// `μ_a(lo, e)`, or 0 when `e` is outside the interval.
    pub fn value_at(&self, e: u64) -> i64 {
        self.interval.index_of(e).map_or(0, |i| self.mu[i])
    }

    /// `μ_a(lo, hi)`; 0 for an empty interval.
    pub fn top(&self) -> i64 {
        self.mu.last().copied().unwrap_or(0)
    }

    /// Row-major `μ_a(e_i, e_j)`, present only for tables made with
    /// [`build_full`](Self::build_full).
    pub fn full_mu(&self) -> Option<&[i64]> {
        self.full_mu.as_deref()
    }

    pub fn full_mu_at(&self, i: usize, j: usize) -> Option<i64> {
        let m = self.interval.len();
        self.full_mu.as_ref().map(|f| f[i * m + j])
    }
}

/// `μ_a(d, n)`.
///
/// Returns 0 for unrelated pairs. For `a >= ⌊n/d⌋` the interval is already
/// the divisor interval and the classical value `μ_D(d, n)` is returned
/// directly; otherwise the interval recursion is run.
pub fn moebius_value(a: u64, d: u64, n: u64) -> Result<i64> {
    if !is_a_floor_quotient(a, d, n) {
        return Ok(0);
    }
    if a >= n / d {
        return Ok(divisor_moebius(d, n));
    }
    Ok(MoebiusTable::build(a, d, n)?.top())
}

/// The classical Möbius function, by trial division.
pub fn classical_moebius(m: u64) -> i64 {
    assert!(m >= 1, "m must be positive");
    let mut m = m;
    let mut sign = 1;
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// Möbius function of the divisor order: `μ(n/d)` if `d | n`, else 0.
pub fn divisor_moebius(d: u64, n: u64) -> i64 {
    assert!(d >= 1 && n >= 1, "d and n must be positive");
    if n % d == 0 {
        classical_moebius(n / d)
    } else {
        0
    }
}
