//! Triple-pattern distances: LDSD (direct, indirect, combined), its globally
//! normalised variants, and the path-propagated PLDSD.
//!
//! All distances have the shape `1 / (1 + Σ contributions)` where each
//! contribution is a pattern indicator (or count) over `1 + log(total)`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{canonical, LogBase};
use crate::error::MeasureError;
use crate::path::{visit_paths, PathQuery};
use crate::store::{TermId, Triple, TripleStore};

/// Per-predicate pattern counts for an ordered pair (a, b).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicatePattern {
    pub predicate: Option<TermId>,
    /// ⟨a, p, b⟩ ∈ 𝒢
    pub cd_ab: bool,
    /// ⟨b, p, a⟩ ∈ 𝒢
    pub cd_ba: bool,
    /// Resources reachable from a (resp. b) via p.
    pub cd_total_a: usize,
    pub cd_total_b: usize,
    /// Shared objects n with ⟨a,p,n⟩ and ⟨b,p,n⟩.
    pub cprime_io: usize,
    /// Shared subjects n with ⟨n,p,a⟩ and ⟨n,p,b⟩.
    pub cprime_ii: usize,
    /// Other resources sharing an object with a (resp. b) via p.
    pub cio_total_a: usize,
    pub cio_total_b: usize,
    /// Other resources sharing a subject with a (resp. b) via p.
    pub cii_total_a: usize,
    pub cii_total_b: usize,
}

impl PredicatePattern {
    pub fn cd(&self) -> u8 {
        self.cd_ab as u8
    }

    pub fn cio(&self) -> u8 {
        (self.cprime_io > 0) as u8
    }

    pub fn cii(&self) -> u8 {
        (self.cprime_ii > 0) as u8
    }
}

/// Pattern counts for a pair, one entry per predicate with a nonzero pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternCounts {
    pub entries: Vec<PredicatePattern>,
    /// (p, n) with ⟨a,p,n⟩ and ⟨b,p,n⟩.
    pub shared_objects: Vec<(TermId, TermId)>,
    /// (p, n) with ⟨n,p,a⟩ and ⟨n,p,b⟩.
    pub shared_subjects: Vec<(TermId, TermId)>,
}

impl PatternCounts {
    pub fn get(&self, p: TermId) -> Option<&PredicatePattern> {
        self.entries.iter().find(|e| e.predicate == Some(p))
    }
}

/// Global counts used by the γ normalisation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalPatternCounts {
    /// Triples with predicate p.
    pub cdp: usize,
    /// Unordered pairs of distinct subjects linking into r via p.
    pub ciop: usize,
    /// Unordered pairs of distinct objects linked from r via p.
    pub ciip: usize,
}

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn global_pattern_counts(store: &TripleStore, p: TermId, r: TermId) -> GlobalPatternCounts {
    GlobalPatternCounts {
        cdp: store.predicate_count(p),
        ciop: pairs(store.count_po(p, r)),
        ciip: pairs(store.count_sp(r, p)),
    }
}

/// Merge-joins two (predicate, node) lists sorted by (predicate, node).
fn shared(x: &[(TermId, TermId)], y: &[(TermId, TermId)]) -> Vec<(TermId, TermId)> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(x[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Resources other than `r` that share a p-object with `r`.
fn cio_total(store: &TripleStore, p: TermId, r: TermId) -> usize {
    let mut others = BTreeSet::new();
    for t in store.outgoing_with(r, p) {
        others.extend(store.incoming_with(p, t.o).map(|u| u.s));
    }
    others.remove(&r);
    others.len()
}

/// Resources other than `r` that share a p-subject with `r`.
fn cii_total(store: &TripleStore, p: TermId, r: TermId) -> usize {
    let mut others = BTreeSet::new();
    for t in store.incoming_with(p, r) {
        others.extend(store.outgoing_with(t.s, p).iter().map(|u| u.o));
    }
    others.remove(&r);
    others.len()
}

pub fn pattern_counts(store: &TripleStore, a: TermId, b: TermId) -> PatternCounts {
    let out_a: Vec<(TermId, TermId)> = store.outgoing(a).map(|(_, t)| (t.p, t.o)).collect();
    let out_b: Vec<(TermId, TermId)> = store.outgoing(b).map(|(_, t)| (t.p, t.o)).collect();
    let in_a: Vec<(TermId, TermId)> = store.incoming(a).map(|(_, t)| (t.p, t.s)).collect();
    let in_b: Vec<(TermId, TermId)> = store.incoming(b).map(|(_, t)| (t.p, t.s)).collect();
    let shared_objects = shared(&out_a, &out_b);
    let shared_subjects = shared(&in_a, &in_b);

    let mut by_predicate: HashMap<TermId, PredicatePattern> = HashMap::new();
    for &(p, o) in &out_a {
        if o == b {
            by_predicate.entry(p).or_insert_with(|| new_entry(p)).cd_ab = true;
        }
    }
    for &(p, o) in &out_b {
        if o == a {
            by_predicate.entry(p).or_insert_with(|| new_entry(p)).cd_ba = true;
        }
    }
    for &(p, _) in &shared_objects {
        by_predicate
            .entry(p)
            .or_insert_with(|| new_entry(p))
            .cprime_io += 1;
    }
    for &(p, _) in &shared_subjects {
        by_predicate
            .entry(p)
            .or_insert_with(|| new_entry(p))
            .cprime_ii += 1;
    }

    let mut entries: Vec<PredicatePattern> = by_predicate
        .into_values()
        .map(|mut e| {
            let p = e.predicate.expect("entries carry their predicate");
            e.cd_total_a = store.count_sp(a, p);
            e.cd_total_b = store.count_sp(b, p);
            if e.cprime_io > 0 {
                e.cio_total_a = cio_total(store, p, a);
                e.cio_total_b = cio_total(store, p, b);
            }
            if e.cprime_ii > 0 {
                e.cii_total_a = cii_total(store, p, a);
                e.cii_total_b = cii_total(store, p, b);
            }
            e
        })
        .collect();
    entries.sort_by_key(|e| e.predicate);
    PatternCounts {
        entries,
        shared_objects,
        shared_subjects,
    }
}

fn new_entry(p: TermId) -> PredicatePattern {
    PredicatePattern {
        predicate: Some(p),
        ..PredicatePattern::default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LdsdVariant {
    /// Direct links only.
    Dw,
    /// Indirect links only.
    Iw,
    /// Direct and indirect.
    Cw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LdsdgnVariant {
    Alpha,
    Beta,
    Gamma,
}

/// `1 / (1 + log x)` with the count clamped to 1; only a self-comparison can
/// present a zero total.
fn damp(base: LogBase, total: f64) -> f64 {
    1.0 / (1.0 + base.log(total.max(1.0)))
}

fn direct_sum(counts: &PatternCounts, base: LogBase) -> f64 {
    counts
        .entries
        .iter()
        .map(|e| {
            let mut s = 0.0;
            if e.cd_ab {
                s += damp(base, e.cd_total_a as f64);
            }
            if e.cd_ba {
                s += damp(base, e.cd_total_b as f64);
            }
            s
        })
        .sum()
}

fn indirect_sum(counts: &PatternCounts, base: LogBase) -> f64 {
    counts
        .entries
        .iter()
        .map(|e| {
            let mut s = 0.0;
            if e.cprime_io > 0 {
                s += damp(base, e.cio_total_a as f64);
            }
            if e.cprime_ii > 0 {
                s += damp(base, e.cii_total_a as f64);
            }
            s
        })
        .sum()
}

/// Linked-data semantic distance. Identity is not special-cased: `ldsd(v, a, a)` is the
/// formula evaluated on a's self-patterns.
pub fn ldsd(store: &TripleStore, variant: LdsdVariant, a: TermId, b: TermId, base: LogBase) -> f64 {
    let counts = pattern_counts(store, a, b);
    let f = match variant {
        LdsdVariant::Dw => direct_sum(&counts, base),
        LdsdVariant::Iw => indirect_sum(&counts, base),
        LdsdVariant::Cw => direct_sum(&counts, base) + indirect_sum(&counts, base),
    };
    1.0 / (1.0 + f)
}

/// Globally normalised LDSD. `d(r, r) = 0` for every variant.
pub fn ldsdgn(
    store: &TripleStore,
    variant: LdsdgnVariant,
    a: TermId,
    b: TermId,
    base: LogBase,
) -> f64 {
    if a == b {
        return 0.0;
    }
    let counts = pattern_counts(store, a, b);
    let f = match variant {
        LdsdgnVariant::Alpha => {
            direct_sum(&counts, base)
                + counts
                    .entries
                    .iter()
                    .map(|e| {
                        e.cprime_io as f64 * damp(base, e.cio_total_a as f64)
                            + e.cprime_ii as f64 * damp(base, e.cii_total_a as f64)
                    })
                    .sum::<f64>()
        }
        LdsdgnVariant::Beta => {
            direct_sum(&counts, base)
                + counts
                    .entries
                    .iter()
                    .map(|e| {
                        let io = (e.cio_total_a + e.cio_total_b) as f64 / 2.0;
                        let ii = (e.cii_total_a + e.cii_total_b) as f64 / 2.0;
                        e.cprime_io as f64 * damp(base, io) + e.cprime_ii as f64 * damp(base, ii)
                    })
                    .sum::<f64>()
        }
        LdsdgnVariant::Gamma => {
            let direct: f64 = counts
                .entries
                .iter()
                .map(|e| {
                    let p = e.predicate.expect("entries carry their predicate");
                    let n = (e.cd_ab as u8 + e.cd_ba as u8) as f64;
                    n * damp(base, store.predicate_count(p) as f64)
                })
                .sum();
            let via_objects: f64 = counts
                .shared_objects
                .iter()
                .map(|&(p, n)| damp(base, global_pattern_counts(store, p, n).ciop as f64))
                .sum();
            let via_subjects: f64 = counts
                .shared_subjects
                .iter()
                .map(|&(p, n)| damp(base, global_pattern_counts(store, p, n).ciip as f64))
                .sum();
            direct + via_objects + via_subjects
        }
    };
    1.0 / (1.0 + f)
}

/// Max over undirected paths of length ≤ `h` of ∏ (1 − LDSD_cw(s_i, o_i)).
/// Already a relatedness; 0 when no path exists (including `a == b`).
pub fn pldsd(
    store: &TripleStore,
    a: TermId,
    b: TermId,
    h: usize,
    base: LogBase,
) -> Result<f64, MeasureError> {
    if h == 0 {
        return Err(MeasureError::InvalidBound);
    }
    if a == b {
        return Ok(0.0);
    }
    let (start, end) = canonical(a, b);
    let mut cw_cache: HashMap<(TermId, TermId), f64> = HashMap::new();
    let mut best = 0.0f64;
    let mut paths: Vec<Vec<Triple>> = Vec::new();
    visit_paths(store, &PathQuery::undirected(start, end, h), |steps| {
        paths.push(steps.iter().map(|s| s.triple).collect())
    })?;
    for path in paths {
        let mut product = 1.0;
        for t in path {
            let cw = *cw_cache
                .entry((t.s, t.o))
                .or_insert_with(|| ldsd(store, LdsdVariant::Cw, t.s, t.o, base));
            product *= 1.0 - cw;
        }
        best = best.max(product);
    }
    Ok(best)
}
