//! Benchmark reports and their TSV / JSON renderings.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::UnresolvedPair;
use crate::method::Method;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairScore {
    pub term1: String,
    pub term2: String,
    pub gold: f64,
    /// Null when the method failed on this pair.
    pub score: Option<f64>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkReport {
    pub dataset: String,
    pub method: Method,
    /// Pairs in the dataset.
    pub total: usize,
    /// Pairs entering the correlation.
    pub n: usize,
    pub spearman: Option<f64>,
    /// Absent for rank-only datasets and when undefined.
    pub pearson: Option<f64>,
    pub unresolved: usize,
    /// Resolved pairs removed by cleaning.
    pub filtered: usize,
    /// Pairs on which the method returned an error.
    pub errored: usize,
    pub notes: Vec<String>,
    pub unresolved_pairs: Vec<UnresolvedPair>,
    pub scores: Vec<PairScore>,
    pub wall_time_ms: f64,
}

impl BenchmarkReport {
    /// Dataset pairs that did not enter the correlation.
    pub fn excluded(&self) -> usize {
        self.total - self.n
    }

    pub fn fully_unresolved(&self) -> bool {
        self.total > 0 && self.unresolved == self.total
    }
}

fn cell(v: Option<f64>) -> String {
    v.map_or_else(|| "NA".to_string(), |v| format!("{v:.6}"))
}

pub const TSV_HEADER: &str = "dataset\tmethod\tn\tspearman\tpearson\texcluded";

/// One row per report. Deterministic for identical inputs: no timings.
pub fn reports_to_tsv(reports: &[BenchmarkReport]) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for r in reports {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            r.dataset,
            r.method,
            r.n,
            cell(r.spearman),
            cell(r.pearson),
            r.excluded()
        )
        .expect("writing to a String");
    }
    out
}

pub fn reports_to_json(reports: &[BenchmarkReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}
