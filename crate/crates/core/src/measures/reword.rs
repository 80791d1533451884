//! REWOrD: PF-ITF predicate informativeness, relatedness spaces and the
//! most informative path.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{canonical, LogBase};
use crate::error::MeasureError;
use crate::path::{visit_paths, Path, PathQuery};
use crate::store::{TermId, Triple, TripleStore};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PredicateDirection {
    In,
    Out,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RewordStrategy {
    Incoming,
    Outgoing,
    Average,
    Mip,
    Full,
}

/// log(|𝒢| / |T(p)|); 0 for a predicate with no triples.
pub fn itf(store: &TripleStore, p: TermId, base: LogBase) -> f64 {
    let n = store.predicate_count(p);
    if n == 0 {
        return 0.0;
    }
    base.log(store.triple_count() as f64 / n as f64)
}

fn touching(store: &TripleStore, r: TermId) -> Result<f64, MeasureError> {
    match store.touching_count(r) {
        0 => Err(MeasureError::IsolatedResource(store.iri(r).to_string())),
        n => Ok(n as f64),
    }
}

/// PF(direction) × ITF(p) of predicate `p` at resource `r`.
pub fn pf_itf(
    store: &TripleStore,
    r: TermId,
    p: TermId,
    direction: PredicateDirection,
    base: LogBase,
) -> Result<f64, MeasureError> {
    let total = touching(store, r)?;
    let count = match direction {
        PredicateDirection::In => store.count_po(p, r),
        PredicateDirection::Out => store.count_sp(r, p),
    };
    Ok(count as f64 / total * itf(store, p, base))
}

/// Mean of the outgoing PF-ITF at the subject and incoming PF-ITF at the object.
pub fn triple_informativeness(
    store: &TripleStore,
    t: &Triple,
    base: LogBase,
) -> Result<f64, MeasureError> {
    let out = pf_itf(store, t.s, t.p, PredicateDirection::Out, base)?;
    let inc = pf_itf(store, t.o, t.p, PredicateDirection::In, base)?;
    Ok((out + inc) / 2.0)
}

pub fn path_informativeness(
    store: &TripleStore,
    path: &Path,
    base: LogBase,
) -> Result<f64, MeasureError> {
    if path.is_empty() {
        return Err(MeasureError::EmptyPath);
    }
    let mut sum = 0.0;
    for step in path.steps() {
        sum += triple_informativeness(store, &step.triple, base)?;
    }
    Ok(sum / path.len() as f64)
}

/// Predicate → accumulated informativeness.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct RelatednessSpace(pub BTreeMap<TermId, f64>);

impl RelatednessSpace {
    pub fn of(
        store: &TripleStore,
        r: TermId,
        direction: PredicateDirection,
        base: LogBase,
    ) -> Result<Self, MeasureError> {
        touching(store, r)?;
        let mut space = BTreeMap::new();
        let predicates: Vec<TermId> = match direction {
            PredicateDirection::In => store.incoming(r).map(|(_, t)| t.p).collect(),
            PredicateDirection::Out => store.outgoing(r).map(|(_, t)| t.p).collect(),
        };
        for p in predicates {
            if let std::collections::btree_map::Entry::Vacant(e) = space.entry(p) {
                e.insert(pf_itf(store, r, p, direction, base)?);
            }
        }
        Ok(Self(space))
    }

    /// Coordinate-wise mean of the incoming and outgoing spaces.
    pub fn average(incoming: &Self, outgoing: &Self) -> Self {
        let mut out = BTreeMap::new();
        for (&p, &v) in incoming.0.iter().chain(outgoing.0.iter()) {
            *out.entry(p).or_insert(0.0) += v;
        }
        for v in out.values_mut() {
            *v /= 2.0;
        }
        Self(out)
    }

    pub fn add(&mut self, p: TermId, value: f64) {
        *self.0.entry(p).or_insert(0.0) += value;
    }

    pub fn get(&self, p: TermId) -> f64 {
        self.0.get(&p).copied().unwrap_or(0.0)
    }

    pub fn norm(&self) -> f64 {
        self.0.values().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Cosine similarity; 0 if either space is all-zero.
    pub fn cosine(&self, other: &Self) -> f64 {
        let dot: f64 = self
            .0
            .iter()
            .filter_map(|(p, v)| other.0.get(p).map(|w| v * w))
            .sum();
        let norms = self.norm() * other.norm();
        if norms == 0.0 {
            0.0
        } else {
            dot / norms
        }
    }
}

/// The most informative undirected path of length ≤ h between two distinct
/// resources, with its informativeness. Ties keep the first path enumerated
/// from the lower-id endpoint.
pub fn most_informative_path(
    store: &TripleStore,
    a: TermId,
    b: TermId,
    h: usize,
    base: LogBase,
) -> Result<Option<(Path, f64)>, MeasureError> {
    let (start, end) = canonical(a, b);
    let mut best: Option<(Path, f64)> = None;
    let mut failure = None;
    visit_paths(store, &PathQuery::undirected(start, end, h), |steps| {
        let path = Path::new(start, end, steps.to_vec());
        match path_informativeness(store, &path, base) {
            Ok(i) => {
                if best.as_ref().is_none_or(|(_, b)| i > *b) {
                    best = Some((path, i));
                }
            }
            Err(e) => failure = Some(e),
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(best),
    }
}

pub fn reword(
    store: &TripleStore,
    strategy: RewordStrategy,
    a: TermId,
    b: TermId,
    h: usize,
    base: LogBase,
) -> Result<f64, MeasureError> {
    if h == 0 {
        return Err(MeasureError::InvalidBound);
    }
    use PredicateDirection::{In, Out};
    let spaces = |dir| -> Result<_, MeasureError> {
        Ok((
            RelatednessSpace::of(store, a, dir, base)?,
            RelatednessSpace::of(store, b, dir, base)?,
        ))
    };
    match strategy {
        RewordStrategy::Incoming | RewordStrategy::Outgoing => {
            let dir = if strategy == RewordStrategy::Incoming {
                In
            } else {
                Out
            };
            let (sa, sb) = spaces(dir)?;
            Ok(sa.cosine(&sb))
        }
        RewordStrategy::Average => {
            let (ia, ib) = spaces(In)?;
            let (oa, ob) = spaces(Out)?;
            Ok(RelatednessSpace::average(&ia, &oa).cosine(&RelatednessSpace::average(&ib, &ob)))
        }
        RewordStrategy::Mip => {
            touching(store, a)?;
            touching(store, b)?;
            if a == b {
                return Ok(0.0);
            }
            Ok(most_informative_path(store, a, b, h, base)?.map_or(0.0, |(_, i)| i))
        }
        RewordStrategy::Full => {
            let (mut sa, mut sb) = spaces(In)?;
            if a != b {
                if let Some((mip, _)) = most_informative_path(store, a, b, h, base)? {
                    for step in mip.steps() {
                        let i = triple_informativeness(store, &step.triple, base)?;
                        sa.add(step.triple.p, i);
                        sb.add(step.triple.p, i);
                    }
                }
            }
            Ok(sa.cosine(&sb))
        }
    }
}
