//! Cyclic codes over `R` and their binary residue and torsion codes.

mod binary;
mod linalg;
mod report;
mod ring_code;
mod survey;
mod verify;

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

pub use binary::{low_weight_search, BinaryCyclicCode};
pub use linalg::{span_basis, span_dimension};
pub use report::{CodeReport, GcSummary, PolyText, ReportOptions};
pub use ring_code::{make_code, CyclicCodeR, GcProfile};
pub use survey::{ClosureMethod, ClosureVerdict, Survey};
pub use verify::{ConstraintReport, PairConstraint, VerifyMethod, PAIRWISE_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Hamming,
    Lee,
    Euclidean,
    Gc,
}

/// Histogram weight -> count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightEnumerator {
    pub metric: Metric,
    #[serde(serialize_with = "string_keys")]
    pub counts: BTreeMap<usize, u64>,
    /// False when only part of the code was visited.
    pub complete: bool,
}

fn string_keys<S: Serializer>(counts: &BTreeMap<usize, u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(counts.iter().map(|(k, v)| (k.to_string(), v)))
}

impl WeightEnumerator {
    pub fn from_histogram(metric: Metric, hist: &[u64]) -> Self {
        let counts = hist.iter().enumerate().filter(|(_, &c)| c > 0).map(|(w, &c)| (w, c)).collect();
        Self { metric, counts, complete: true }
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn get(&self, weight: usize) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    /// Smallest nonzero weight present.
    pub fn min_nonzero(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    /// `A_i = A_{n-i}` for all `i`.
    pub fn is_symmetric(&self, n: usize) -> bool {
        self.counts.iter().all(|(&w, &c)| w <= n && self.get(n - w) == c)
    }

    pub fn scaled(&self, factor: u64) -> Self {
        Self {
            metric: self.metric,
            counts: self.counts.iter().map(|(&w, &c)| (w, c * factor)).collect(),
            complete: self.complete,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Theorem,
    BruteForce,
    Both,
    Bound,
    /// The code has fewer than two words.
    Degenerate,
}

/// A minimum distance: exact when `value` is set, else a certified interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Distance {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<[usize; 2]>,
    pub provenance: Provenance,
}

impl Distance {
    pub fn exact(value: usize, provenance: Provenance) -> Self {
        Self { value: Some(value), interval: None, provenance }
    }

    pub fn degenerate() -> Self {
        Self { value: None, interval: None, provenance: Provenance::Degenerate }
    }

    /// Collapses to an exact value when the ends meet.
    pub fn bounded(lower: usize, upper: usize) -> Self {
        if lower >= upper {
            Self::exact(upper, Provenance::Bound)
        } else {
            Self { value: None, interval: Some([lower, upper]), provenance: Provenance::Bound }
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.provenance == Provenance::Degenerate
    }

    pub fn lower(&self) -> Option<usize> {
        self.value.or(self.interval.map(|i| i[0]))
    }

    pub fn upper(&self) -> Option<usize> {
        self.value.or(self.interval.map(|i| i[1]))
    }
}
