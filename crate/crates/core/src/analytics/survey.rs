use rayon::prelude::*;
use serde::Serialize;

use super::Limits;
use crate::error::{require_positive, Error, Result};
use crate::intervals::{decomposition, poset_stabilization_threshold, set_stabilization_threshold};

/// Column groups to fill in a survey.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Columns {
    /// `size_minus`, `size_plus`, `size_total` for the fixed `a`.
    pub sizes: bool,
    /// `set_threshold`, `poset_threshold`, which do not depend on `a`.
    pub thresholds: bool,
    /// `minus_ratio` and `plus_minus_ratio`, diagnostic only.
    pub ratios: bool,
}

impl Columns {
    pub const SIZES: Self = Self {
        sizes: true,
        thresholds: false,
        ratios: false,
    };
    pub const THRESHOLDS: Self = Self {
        sizes: false,
        thresholds: true,
        ratios: false,
    };

    pub fn is_empty(&self) -> bool {
        !(self.sizes || self.thresholds || self.ratios)
    }

    /// Header names of the filled columns, in output order.
    pub fn header(&self) -> Vec<&'static str> {
        let mut h = vec!["n"];
        if self.sizes {
            h.extend(["size_minus", "size_plus", "size_total"]);
        }
        if self.thresholds {
            h.extend(["set_threshold", "poset_threshold"]);
        }
        if self.ratios {
            h.extend(["minus_ratio", "plus_minus_ratio"]);
        }
        h
    }
}

/// One survey line. Columns that were not requested are `None`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurveyRow {
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size_minus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size_plus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size_total: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set_threshold: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poset_threshold: Option<u64>,
    /// `|Q_a^-(n)| / ((2/√a − 1/a)·√n)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minus_ratio: Option<f64>,
    /// `|Q_a^+(n)| / |Q_a^-(n)|`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plus_minus_ratio: Option<f64>,
}

impl SurveyRow {
    /// The filled fields as strings, in [`Columns::header`] order.
    pub fn values(&self) -> Vec<String> {
        let ints = [
            self.size_minus,
            self.size_plus,
            self.size_total,
            self.set_threshold,
            self.poset_threshold,
        ];
        let mut v = vec![self.n.to_string()];
        v.extend(ints.iter().flatten().map(u64::to_string));
        v.extend(
            [self.minus_ratio, self.plus_minus_ratio]
                .iter()
                .flatten()
                .map(|r| format!("{r:.6}")),
        );
        v
    }
}

fn row(a: u64, n: u64, columns: Columns) -> SurveyRow {
    let mut r = SurveyRow {
        n,
        size_minus: None,
        size_plus: None,
        size_total: None,
        set_threshold: None,
        poset_threshold: None,
        minus_ratio: None,
        plus_minus_ratio: None,
    };
    if columns.sizes || columns.ratios {
        let dec = decomposition(a, n);
        let (minus, plus) = (dec.minus.len() as u64, dec.plus.len() as u64);
        if columns.sizes {
            r.size_minus = Some(minus);
            r.size_plus = Some(plus);
            r.size_total = Some(dec.union().len() as u64);
        }
        if columns.ratios {
            let af = a as f64;
            let scale = (2.0 / af.sqrt() - 1.0 / af) * (n as f64).sqrt();
            r.minus_ratio = Some(minus as f64 / scale);
            r.plus_minus_ratio = Some(plus as f64 / minus as f64);
        }
    }
    if columns.thresholds {
        r.set_threshold = Some(set_stabilization_threshold(n));
        r.poset_threshold = Some(poset_stabilization_threshold(n));
    }
    r
}

/// One row per `n` in `1..=n_max`, in order. Rows are computed on the rayon
/// pool; the result does not depend on the number of threads.
pub fn survey(a: u64, n_max: u64, columns: Columns, limits: &Limits) -> Result<Vec<SurveyRow>> {
    require_positive("a", a)?;
    require_positive("n_max", n_max)?;
    if n_max > limits.max_survey_n {
        return Err(Error::CapExceeded {
            what: "n_max",
            value: n_max,
            cap: limits.max_survey_n,
        });
    }
    Ok((1..=n_max)
        .into_par_iter()
        .map(|n| row(a, n, columns))
        .collect())
}
