//! Measures over 1-hop neighbourhoods: WLM and the two LODDO strategies.

use std::collections::BTreeSet;

use crate::store::{TermId, TripleStore};

/// In-link sets A and B: subjects of the triples whose object is `a` (resp. `b`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InLinkSets {
    pub a: BTreeSet<TermId>,
    pub b: BTreeSet<TermId>,
}

impl InLinkSets {
    pub fn new(store: &TripleStore, a: TermId, b: TermId) -> Self {
        Self {
            a: store.subjects_linking_to(a),
            b: store.subjects_linking_to(b),
        }
    }
}

/// Link-based distance in [0, +inf].
///
/// Both in-link sets empty gives 1 (the inf/inf convention); identical sets
/// give 0; disjoint sets give +inf.
pub fn wlm_distance(store: &TripleStore, a: TermId, b: TermId) -> f64 {
    let sets = InLinkSets::new(store, a, b);
    let (na, nb) = (sets.a.len(), sets.b.len());
    if na == 0 && nb == 0 {
        return 1.0;
    }
    if sets.a == sets.b {
        return 0.0;
    }
    let common = sets.a.intersection(&sets.b).count();
    if common == 0 {
        return f64::INFINITY;
    }
    let numerator = (na.max(nb) as f64).ln() - (common as f64).ln();
    let denominator = (store.resource_count() as f64).ln() - (na.min(nb) as f64).ln();
    if denominator <= 0.0 {
        return if numerator == 0.0 { 0.0 } else { f64::INFINITY };
    }
    numerator / denominator
}

fn description_overlap(store: &TripleStore, a: TermId, b: TermId) -> (usize, usize, usize) {
    let da = store.description(a);
    let db = store.description(b);
    let common = da.intersection(&db).count();
    (da.len(), db.len(), common)
}

/// |D(a) ∩ D(b)| / min(|D(a)|, |D(b)|)
pub fn lod_overlap(store: &TripleStore, a: TermId, b: TermId) -> f64 {
    if a == b {
        return 1.0;
    }
    let (na, nb, common) = description_overlap(store, a, b);
    common as f64 / na.min(nb) as f64
}

/// |D(a) ∩ D(b)| / |D(a) ∪ D(b)|
pub fn lod_jaccard(store: &TripleStore, a: TermId, b: TermId) -> f64 {
    if a == b {
        return 1.0;
    }
    let (na, nb, common) = description_overlap(store, a, b);
    common as f64 / (na + nb - common) as f64
}
