//! Aggregate counts over many initial intervals, the averaged-size theorem,
//! the small/medium/large heuristic, and per-`n` survey rows for plotting.
//!
//! Integer sums are exact. Real-valued outputs are plain `f64` and carry no
//! exactness claims.

mod heuristic;
mod survey;

pub use heuristic::{
    heuristic_estimate, simulate_random_quotients, HeuristicEstimate, SimulationSummary,
};
pub use survey::{survey, Columns, SurveyRow};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{require_positive, Error, Result};
use crate::intervals::{floor_quotients_initial, initial_interval_size};
use crate::semigroup::sigma;

/// Soft caps bounding the runtime of the sweeping operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `x` accepted by the summatory functions.
    pub max_x: u64,
    /// Largest `n_max` accepted by [`survey`].
    pub max_survey_n: u64,
}

impl Limits {
    pub const DEFAULT_MAX_X: u64 = 1_000_000;
    pub const DEFAULT_MAX_SURVEY_N: u64 = 100_000;

    /// The same cap for every sweep.
    pub fn uniform(cap: u64) -> Self {
        Self {
            max_x: cap,
            max_survey_n: cap,
        }
    }

    pub(crate) fn check_x(&self, x: u64) -> Result<()> {
        if x > self.max_x {
            return Err(Error::CapExceeded {
                what: "x",
                value: x,
                cap: self.max_x,
            });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_x: Self::DEFAULT_MAX_X,
            max_survey_n: Self::DEFAULT_MAX_SURVEY_N,
        }
    }
}

fn check_sum_args(a: u64, x: u64, limits: &Limits) -> Result<()> {
    require_positive("a", a)?;
    require_positive("x", x)?;
    limits.check_x(x)
}

/// `Σ_{n=1}^x |Q_a[1, n]|`, summing interval sizes directly.
///
/// O(x^{3/2}) relation tests, split across the rayon pool.
pub fn interval_size_sum(a: u64, x: u64, limits: &Limits) -> Result<u64> {
    check_sum_args(a, x, limits)?;
    Ok((1..=x)
        .into_par_iter()
        .map(|n| initial_interval_size(a, n))
        .sum())
}

/// `Σ_{d=1}^x σ_{a,d}(x)`, the same total counted by quotient instead of by
/// multiple.
pub fn interval_size_sum_by_sigma(a: u64, x: u64, limits: &Limits) -> Result<u64> {
    check_sum_args(a, x, limits)?;
    Ok((1..=x).into_par_iter().map(|d| sigma(a, d, x)).sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AverageReport {
    pub a: u64,
    pub x: u64,
    /// `(1/x) Σ_{n<=x} |Q_a[1, n]|`.
    pub average: f64,
    /// `(4/3)·√(x/a)`.
    pub predicted: f64,
    /// `|average / predicted − 1|`.
    pub relative_error: f64,
}

pub fn average_size_report(a: u64, x: u64, limits: &Limits) -> Result<AverageReport> {
    let total = interval_size_sum(a, x, limits)?;
    let average = total as f64 / x as f64;
    let predicted = 4.0 / 3.0 * (x as f64 / a as f64).sqrt();
    Ok(AverageReport {
        a,
        x,
        average,
        predicted,
        relative_error: (average / predicted - 1.0).abs(),
    })
}

/// The sum of interval sizes split at the per-`n` point `√(n/a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MedianSplit {
    /// `Σ_n |{ d ∈ Q_a[1, n] : a·d² <= n }|`.
    pub below: u64,
    /// The rest of `Σ_n |Q_a[1, n]|`.
    pub above: u64,
}

pub fn median_split_sums(a: u64, x: u64, limits: &Limits) -> Result<MedianSplit> {
    check_sum_args(a, x, limits)?;
    let (below, total) = (1..=x)
        .into_par_iter()
        .map(|n| {
            let q = floor_quotients_initial(a, n);
            let wa = u128::from(a);
            let below = q
                .iter()
                .filter(|&&d| wa * u128::from(d) * u128::from(d) <= u128::from(n))
                .count() as u64;
            (below, q.len() as u64)
        })
        .reduce(|| (0, 0), |l, r| (l.0 + r.0, l.1 + r.1));
    Ok(MedianSplit {
        below,
        above: total - below,
    })
}

/// `Σ_d σ_{a,d}(x)` split into the small (`a·d² <= x`), medium
/// (`a·d² > x >= d²`) and large (`d² > x`) ranges of `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegionSums {
    pub small: u64,
    pub medium: u64,
    pub large: u64,
}

impl RegionSums {
    pub fn total(&self) -> u64 {
        self.small + self.medium + self.large
    }
}

pub fn region_sums(a: u64, x: u64, limits: &Limits) -> Result<RegionSums> {
    check_sum_args(a, x, limits)?;
    let wx = u128::from(x);
    let (small, medium, large) = (1..=x)
        .into_par_iter()
        .map(|d| {
            let s = sigma(a, d, x);
            let sq = u128::from(d) * u128::from(d);
            if u128::from(a) * sq <= wx {
                (s, 0, 0)
            } else if sq <= wx {
                (0, s, 0)
            } else {
                (0, 0, s)
            }
        })
        .reduce(|| (0, 0, 0), |l, r| (l.0 + r.0, l.1 + r.1, l.2 + r.2));
    Ok(RegionSums {
        small,
        medium,
        large,
    })
}
