//! Information-content triple weights and the ICM path measure.

use serde::{Deserialize, Serialize};

use super::{canonical, LogBase};
use crate::error::MeasureError;
use crate::path::{visit_paths, PathQuery};
use crate::store::{TermId, Triple, TripleStore};

/// Stand-in for 1/0 when the best path is made only of max-weight triples.
pub const ZERO_COST_SCORE: f64 = 1e9;

/// `-log(prob)`; `prob` must lie in (0, 1].
pub fn information_content(prob: f64, base: LogBase) -> Result<f64, MeasureError> {
    if !(prob > 0.0 && prob <= 1.0) {
        return Err(MeasureError::ProbabilityDomain(prob));
    }
    Ok(-base.log(prob))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IcWeightKind {
    /// IC(p) + IC(o | p)
    JointIc,
    /// IC(p) + IC(o)
    CombIc,
    /// IC(p) + PMI(p, o)
    IcPmi,
}

/// Probability estimates for a triple, as triple-count ratios over |𝒢|.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TripleProbabilities {
    pub predicate: f64,
    pub object: f64,
    pub joint: f64,
}

impl TripleProbabilities {
    pub fn of(store: &TripleStore, t: &Triple) -> Result<Self, MeasureError> {
        if !store.contains(t) {
            return Err(MeasureError::UnknownTriple);
        }
        let total = store.triple_count() as f64;
        Ok(Self {
            predicate: store.predicate_count(t.p) as f64 / total,
            object: store.count_o(t.o) as f64 / total,
            joint: store.count_po(t.p, t.o) as f64 / total,
        })
    }
}

/// Each kind is evaluated as one logarithm of a ratio of triple counts:
/// jointIC = log(N / c(p,o)), combIC = log(N² / (c(p) c(o))) and
/// IC+PMI = log(N² c(p,o) / (c(p)² c(o))). Mathematically equal weights
/// therefore compare equal, which keeps `w_max − w` exactly zero where it
/// should be.
pub fn ic_triple_weight(
    store: &TripleStore,
    kind: IcWeightKind,
    t: &Triple,
    base: LogBase,
) -> Result<f64, MeasureError> {
    if !store.contains(t) {
        return Err(MeasureError::UnknownTriple);
    }
    let n = store.triple_count() as u128;
    let cp = store.predicate_count(t.p) as u128;
    let co = store.count_o(t.o) as u128;
    let cpo = store.count_po(t.p, t.o) as u128;
    let (num, den) = match kind {
        IcWeightKind::JointIc => (n, cpo),
        IcWeightKind::CombIc => (n * n, cp * co),
        IcWeightKind::IcPmi => (n * n * cpo, cp * cp * co),
    };
    Ok(base.log(num as f64 / den as f64))
}

/// Triple weights of one kind together with their maximum over the graph.
#[derive(Debug, Clone)]
pub struct IcWeights {
    kind: IcWeightKind,
    base: LogBase,
    w_max: f64,
}

impl IcWeights {
    pub fn new(store: &TripleStore, kind: IcWeightKind, base: LogBase) -> Self {
        let w_max = store
            .triples()
            .iter()
            .map(|t| ic_triple_weight(store, kind, t, base).expect("stored triple"))
            .fold(f64::NEG_INFINITY, f64::max);
        Self { kind, base, w_max }
    }

    pub fn kind(&self) -> IcWeightKind {
        self.kind
    }

    pub fn w_max(&self) -> f64 {
        self.w_max
    }

    pub fn weight(&self, store: &TripleStore, t: &Triple) -> Result<f64, MeasureError> {
        ic_triple_weight(store, self.kind, t, self.base)
    }
}

/// 1 / min over undirected paths ≤ h of Σ (w_max − w(t)).
/// Identity gives 1, no path gives 0.
pub fn icm(
    store: &TripleStore,
    weights: &IcWeights,
    a: TermId,
    b: TermId,
    h: usize,
) -> Result<f64, MeasureError> {
    if h == 0 {
        return Err(MeasureError::InvalidBound);
    }
    if a == b {
        return Ok(1.0);
    }
    let (start, end) = canonical(a, b);
    let mut best: Option<f64> = None;
    let mut failure = None;
    visit_paths(store, &PathQuery::undirected(start, end, h), |steps| {
        let mut cost = 0.0;
        for step in steps {
            match weights.weight(store, &step.triple) {
                Ok(w) => cost += weights.w_max - w,
                Err(e) => failure = Some(e),
            }
        }
        best = Some(best.map_or(cost, |b: f64| b.min(cost)));
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(match best {
        None => 0.0,
        Some(c) if c <= 0.0 => ZERO_COST_SCORE,
        Some(c) => 1.0 / c,
    })
}
