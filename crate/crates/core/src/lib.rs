//! The `a`-floor quotient partial orders on the positive integers.
//!
//! For a positive integer `a`, `d ≼_a n` holds when `d = ⌊n/k⌋` for some
//! positive `k` and the remainder `n − k·d` is small compared to `k`. At
//! `a = 1` this is the floor quotient order; as `a` grows it shrinks to the
//! divisor order on every bounded range.
//!
//! ```
//! use floorq::{is_a_floor_quotient, floor_quotients_initial};
//!
//! assert!(is_a_floor_quotient(5, 2, 13));
//! assert!(!is_a_floor_quotient(6, 2, 13));
//! assert_eq!(floor_quotients_initial(3, 10), vec![1, 2, 5, 10]);
//! ```

pub mod analytics;
pub mod error;
pub mod incidence;
pub mod intervals;
pub mod moebius;
pub mod order;
pub mod semigroup;

pub use analytics::{
    average_size_report, heuristic_estimate, interval_size_sum, interval_size_sum_by_sigma,
    median_split_sums, region_sums, simulate_random_quotients, survey, AverageReport, Columns,
    HeuristicEstimate, Limits, MedianSplit, RegionSums, SimulationSummary, SurveyRow,
};
pub use error::{Error, Result};
pub use incidence::BitMatrix;
pub use intervals::{
    decomposition, divisors, floor_quotients_initial, floor_reciprocal, initial_interval_size,
    interval, poset_stabilization_threshold, set_stabilization_threshold, stabilization_cap,
    InitialDecomposition, OrderInterval,
};
pub use moebius::{classical_moebius, divisor_moebius, moebius_value, zeta, MoebiusTable};
pub use order::{
    characterization_suite, cutting_lengths, is_a_floor_quotient, quotient_discrepancy,
    scaling_set, Characterizations, CuttingLengthSet, QuotientQuery, ScalingSet,
};
pub use semigroup::{
    floor_multiple_semigroup, is_member, sigma, sigma_brute, FloorMultipleSemigroup,
};
