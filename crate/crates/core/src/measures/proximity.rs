//! Predicate-weighted proximity (ProxM).

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{canonical, LogBase};
use crate::error::MeasureError;
use crate::path::{visit_paths, PathQuery};
use crate::store::{TermId, TripleStore};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PredicateWeightKind {
    /// w(p) = −log Pr(p)
    PredicateIc,
    UserTable,
}

/// Per-predicate weights together with Ω, the largest weight in their domain.
#[derive(Debug, Clone, PartialEq)]
pub struct PredicateWeights {
    kind: PredicateWeightKind,
    by_id: HashMap<TermId, f64>,
    omega: f64,
}

impl PredicateWeights {
    /// w(p) = −log Pr(p), evaluated as log(N / c(p)).
    pub fn predicate_ic(store: &TripleStore, base: LogBase) -> Self {
        let total = store.triple_count() as f64;
        let by_id: HashMap<TermId, f64> = store
            .predicates()
            .map(|(p, n)| (p, base.log(total / n as f64)))
            .collect();
        let omega = by_id.values().copied().fold(0.0, f64::max);
        Self {
            kind: PredicateWeightKind::PredicateIc,
            by_id,
            omega,
        }
    }

    /// Weights keyed by predicate IRI. Ω is taken over the whole table, so
    /// entries for predicates absent from the graph still count.
    pub fn from_table(store: &TripleStore, table: &BTreeMap<String, f64>) -> Self {
        let by_id = table
            .iter()
            .filter_map(|(iri, &w)| store.lookup(iri).map(|id| (id, w)))
            .collect();
        let omega = table.values().copied().fold(0.0, f64::max);
        Self {
            kind: PredicateWeightKind::UserTable,
            by_id,
            omega,
        }
    }

    pub fn kind(&self) -> PredicateWeightKind {
        self.kind
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn weight(&self, store: &TripleStore, p: TermId) -> Result<f64, MeasureError> {
        self.by_id
            .get(&p)
            .copied()
            .ok_or_else(|| MeasureError::UnweightedPredicate(store.iri(p).to_string()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProxParams {
    pub h: usize,
    /// Ω(𝒢)
    pub omega: f64,
    /// Δ(𝒢)
    pub delta: usize,
    pub weights: PredicateWeights,
}

impl ProxParams {
    pub fn new(store: &TripleStore, h: usize, weights: PredicateWeights) -> Self {
        Self {
            h,
            omega: weights.omega(),
            delta: store.max_out_degree(),
            weights,
        }
    }
}

/// (1/Ω) Σ_n 1/(2Δ)^n Σ_{P of length n} Σ_{t ∈ P} w(p_t) over undirected paths.
/// Identity gives 1; a weight domain with Ω ≤ 0 gives 0.
pub fn proximity(
    store: &TripleStore,
    a: TermId,
    b: TermId,
    params: &ProxParams,
) -> Result<f64, MeasureError> {
    if params.h == 0 {
        return Err(MeasureError::InvalidBound);
    }
    if a == b {
        return Ok(1.0);
    }
    if params.omega <= 0.0 {
        return Ok(0.0);
    }
    let (start, end) = canonical(a, b);
    let mut by_length = vec![0.0; params.h + 1];
    let mut failure = None;
    visit_paths(
        store,
        &PathQuery::undirected(start, end, params.h),
        |steps| {
            for step in steps {
                match params.weights.weight(store, step.triple.p) {
                    Ok(w) => by_length[steps.len()] += w,
                    Err(e) => failure = Some(e),
                }
            }
        },
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    let delta = params.delta as f64;
    let mut total = 0.0;
    for (n, sum) in by_length.iter().enumerate().skip(1) {
        total += sum / (2f64.powi(n as i32) * delta.powi(n as i32));
    }
    Ok(total / params.omega)
}
