//! Benchmark harness: resolve dataset terms, optionally keep only connected
//! pairs, score with each method and correlate against the gold values.

pub mod correlation;
pub mod dataset;
pub mod report;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use correlation::{average_ranks, pearson, spearman};
pub use dataset::{
    load_dataset, load_mapping, parse_dataset, parse_mapping, Dataset, GoldKind, GoldenPair,
    TermMapping,
};
pub use report::{reports_to_json, reports_to_tsv, BenchmarkReport, PairScore};

use crate::method::{Method, MethodParams, Scorer};
use crate::path::{any_path, PathQuery};
use crate::store::{TermId, TripleStore};

/// Max undirected distance for a pair to survive cleaning.
pub const CLEAN_RADIUS: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnresolvedReason {
    /// No mapping entry and not itself an absolute IRI.
    Unmapped,
    /// The IRI is not a resource of the graph.
    NotInGraph,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedPair {
    /// Position in the dataset.
    pub index: usize,
    pub a: TermId,
    pub b: TermId,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnresolvedPair {
    pub index: usize,
    pub term: String,
    pub reason: UnresolvedReason,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Resolution {
    pub resolved: Vec<ResolvedPair>,
    pub unresolved: Vec<UnresolvedPair>,
}

fn resolve_term(
    term: &str,
    mapping: &TermMapping,
    store: &TripleStore,
) -> Result<TermId, UnresolvedReason> {
    let iri = match mapping.get(term) {
        Some(iri) => iri,
        None if dataset::is_absolute_iri(term) => term,
        None => return Err(UnresolvedReason::Unmapped),
    };
    store.resource(iri).ok_or(UnresolvedReason::NotInGraph)
}

/// Maps both terms of every pair to resources. A pair with an unresolvable
/// term is set aside, reporting its first failing term.
pub fn resolve(pairs: &[GoldenPair], mapping: &TermMapping, store: &TripleStore) -> Resolution {
    let mut out = Resolution::default();
    for (index, pair) in pairs.iter().enumerate() {
        let a = resolve_term(&pair.term1, mapping, store);
        let b = resolve_term(&pair.term2, mapping, store);
        match (a, b) {
            (Ok(a), Ok(b)) => out.resolved.push(ResolvedPair { index, a, b }),
            (Err(reason), _) => out.unresolved.push(UnresolvedPair {
                index,
                term: pair.term1.clone(),
                reason,
            }),
            (_, Err(reason)) => out.unresolved.push(UnresolvedPair {
                index,
                term: pair.term2.clone(),
                reason,
            }),
        }
    }
    out
}

/// True when a ≡ b or an undirected path of length ≤ 2 joins them.
pub fn is_connected(store: &TripleStore, a: TermId, b: TermId) -> bool {
    a == b
        || any_path(store, &PathQuery::undirected(a, b, CLEAN_RADIUS))
            .expect("distinct endpoints and a positive bound")
}

/// Keeps the pairs joined by an undirected path of length ≤ 2.
pub fn clean(pairs: &[ResolvedPair], store: &TripleStore) -> Vec<ResolvedPair> {
    pairs
        .iter()
        .filter(|p| is_connected(store, p.a, p.b))
        .cloned()
        .collect()
}

/// Scores every resolvable pair of `dataset` with each method and correlates
/// the scores against the gold values. Method errors on a pair yield a null
/// score, excluded from the correlation.
pub fn run_benchmark(
    store: &TripleStore,
    methods: &[Method],
    dataset: &Dataset,
    mapping: &TermMapping,
    params: &MethodParams,
    clean_pairs: bool,
) -> Vec<BenchmarkReport> {
    let resolution = resolve(&dataset.pairs, mapping, store);
    let kept = if clean_pairs {
        clean(&resolution.resolved, store)
    } else {
        resolution.resolved.clone()
    };
    let filtered = resolution.resolved.len() - kept.len();
    let scorer = Scorer::new(store, params.clone());

    methods
        .iter()
        .map(|&method| {
            let started = Instant::now();
            let scores: Vec<PairScore> = kept
                .par_iter()
                .map(|p| {
                    let pair = &dataset.pairs[p.index];
                    let (score, error) = match scorer.score(method, p.a, p.b) {
                        Ok(v) => (Some(v), None),
                        Err(e) => (None, Some(e.to_string())),
                    };
                    PairScore {
                        term1: pair.term1.clone(),
                        term2: pair.term2.clone(),
                        gold: dataset.gold(pair),
                        score,
                        error,
                    }
                })
                .collect();
            let (gold, got): (Vec<f64>, Vec<f64>) = scores
                .iter()
                .filter_map(|s| s.score.map(|v| (s.gold, v)))
                .unzip();
            let errored = scores.len() - got.len();
            let mut notes = Vec::new();
            let spearman = match correlation::spearman(&gold, &got) {
                Ok(v) => Some(v),
                Err(e) => {
                    notes.push(format!("spearman: {e}"));
                    None
                }
            };
            let pearson = match dataset.kind {
                GoldKind::Rank => None,
                GoldKind::Score => match correlation::pearson(&gold, &got) {
                    Ok(v) => Some(v),
                    Err(e) => {
                        notes.push(format!("pearson: {e}"));
                        None
                    }
                },
            };
            BenchmarkReport {
                dataset: dataset.name.clone(),
                method,
                total: dataset.pairs.len(),
                n: got.len(),
                spearman,
                pearson,
                unresolved: resolution.unresolved.len(),
                filtered,
                errored,
                notes,
                unresolved_pairs: resolution.unresolved.clone(),
                scores,
                wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
            }
        })
        .collect()
}
