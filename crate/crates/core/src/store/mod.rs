//! Immutable, interned triple store.
//!
//! Triples are kept once, sorted by (subject, predicate, object); the position
//! in that order is the triple's [`TripleId`]. A second permutation orders the
//! same ids by (object, predicate, subject). Together with per-term offset
//! tables these two orders answer every subject-, object-, (subject,
//! predicate)- and (predicate, object)-bound lookup with a slice.

mod builder;
mod ntriples;

use std::collections::BTreeSet;
use std::io::BufRead;

use indexmap::IndexSet;
use serde::{Deserialize, Serialize};

pub use builder::{IngestOptions, IngestStats, StoreBuilder};

use crate::error::IngestError;

pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

/// Dense handle for an interned IRI. Resources and predicates share one space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TermId(u32);

impl TermId {
    pub(crate) fn from_index(idx: usize) -> Self {
        TermId(idx as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Position of a triple in subject-predicate-object order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TripleId(pub(crate) u32);

impl TripleId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub s: TermId,
    pub p: TermId,
    pub o: TermId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LinkDirection {
    In,
    Out,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateCount {
    pub iri: String,
    pub count: usize,
}

/// Corpus statistics printed by `kgrel stats`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoreSummary {
    pub triples: usize,
    pub resources: usize,
    pub predicates: Vec<PredicateCount>,
    pub ingest: IngestStats,
}

impl StoreSummary {
    pub fn to_tsv(&self) -> String {
        let mut out = format!("triples\t{}\nresources\t{}\n", self.triples, self.resources);
        for pc in &self.predicates {
            out.push_str(&format!("predicate\t{}\t{}\n", pc.iri, pc.count));
        }
        out
    }
}

#[derive(Debug)]
pub struct TripleStore {
    terms: IndexSet<Box<str>>,
    spo: Vec<Triple>,
    ops: Vec<u32>,
    subject_offsets: Vec<u32>,
    object_offsets: Vec<u32>,
    predicate_counts: Vec<u32>,
    is_resource: Vec<bool>,
    resource_count: usize,
    max_out_degree: usize,
    type_predicate: Option<TermId>,
    stats: IngestStats,
}

/// Reads N-Triples from `source` and seals the result.
pub fn ingest<R: BufRead>(source: R, opts: IngestOptions) -> Result<TripleStore, IngestError> {
    let mut builder = StoreBuilder::new(opts);
    builder.ingest(source)?;
    Ok(builder.seal())
}

impl TripleStore {
    pub(crate) fn from_sorted(
        terms: IndexSet<Box<str>>,
        spo: Vec<Triple>,
        stats: IngestStats,
    ) -> Self {
        let n = terms.len();
        let mut subject_offsets = vec![0u32; n + 1];
        let mut object_offsets = vec![0u32; n + 1];
        let mut predicate_counts = vec![0u32; n];
        let mut is_resource = vec![false; n];
        for t in &spo {
            subject_offsets[t.s.index() + 1] += 1;
            object_offsets[t.o.index() + 1] += 1;
            predicate_counts[t.p.index()] += 1;
            is_resource[t.s.index()] = true;
            is_resource[t.o.index()] = true;
        }
        for i in 0..n {
            subject_offsets[i + 1] += subject_offsets[i];
            object_offsets[i + 1] += object_offsets[i];
        }
        let mut ops: Vec<u32> = (0..spo.len() as u32).collect();
        ops.sort_unstable_by_key(|&id| {
            let t = spo[id as usize];
            (t.o, t.p, t.s)
        });
        let max_out_degree = subject_offsets
            .windows(2)
            .map(|w| (w[1] - w[0]) as usize)
            .max()
            .unwrap_or(0);
        let resource_count = is_resource.iter().filter(|&&r| r).count();
        let type_predicate = terms.get_index_of(RDF_TYPE).map(TermId::from_index);
        TripleStore {
            terms,
            spo,
            ops,
            subject_offsets,
            object_offsets,
            predicate_counts,
            is_resource,
            resource_count,
            max_out_degree,
            type_predicate,
            stats,
        }
    }

    /// Builds a store from bare-IRI statements with default options.
    pub fn from_iris<'a, I>(statements: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, &'a str, &'a str)>,
    {
        let mut builder = StoreBuilder::new(IngestOptions::default());
        for (s, p, o) in statements {
            builder.add(s, p, o);
        }
        builder.seal()
    }

    pub fn from_ntriples(text: &str, opts: IngestOptions) -> Self {
        ingest(text.as_bytes(), opts).expect("reading from memory cannot fail")
    }

    pub fn empty() -> Self {
        StoreBuilder::default().seal()
    }

    pub fn ingest_stats(&self) -> &IngestStats {
        &self.stats
    }

    /// |𝒢|: number of distinct triples.
    pub fn triple_count(&self) -> usize {
        self.spo.len()
    }

    /// |R|: terms occurring as subject or object of at least one triple.
    pub fn resource_count(&self) -> usize {
        self.resource_count
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn lookup(&self, iri: &str) -> Option<TermId> {
        self.terms.get_index_of(iri).map(TermId::from_index)
    }

    /// Handle for `iri` only if it occurs as subject or object.
    pub fn resource(&self, iri: &str) -> Option<TermId> {
        self.lookup(iri).filter(|&id| self.is_resource(id))
    }

    pub fn iri(&self, id: TermId) -> &str {
        &self.terms[id.index()]
    }

    pub fn is_resource(&self, id: TermId) -> bool {
        self.is_resource.get(id.index()).copied().unwrap_or(false)
    }

    pub fn resources(&self) -> impl Iterator<Item = TermId> + '_ {
        self.is_resource
            .iter()
            .enumerate()
            .filter(|(_, &r)| r)
            .map(|(i, _)| TermId::from_index(i))
    }

    pub fn type_predicate(&self) -> Option<TermId> {
        self.type_predicate
    }

    pub fn is_type_predicate(&self, p: TermId) -> bool {
        self.type_predicate == Some(p)
    }

    pub fn triples(&self) -> &[Triple] {
        &self.spo
    }

    pub fn triple(&self, id: TripleId) -> Triple {
        self.spo[id.index()]
    }

    pub fn triple_id(&self, t: &Triple) -> Option<TripleId> {
        self.spo.binary_search(t).ok().map(|i| TripleId(i as u32))
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.triple_id(t).is_some()
    }

    fn subject_range(&self, s: TermId) -> std::ops::Range<usize> {
        match self.subject_offsets.get(s.index()..=s.index() + 1) {
            Some(w) => w[0] as usize..w[1] as usize,
            None => 0..0,
        }
    }

    fn object_range(&self, o: TermId) -> std::ops::Range<usize> {
        match self.object_offsets.get(o.index()..=o.index() + 1) {
            Some(w) => w[0] as usize..w[1] as usize,
            None => 0..0,
        }
    }

    /// Triples with subject `s`, as (id, triple), ordered by predicate then object.
    pub fn outgoing(&self, s: TermId) -> impl Iterator<Item = (TripleId, Triple)> + '_ {
        self.subject_range(s)
            .map(move |i| (TripleId(i as u32), self.spo[i]))
    }

    /// Triples with object `o`, as (id, triple), ordered by predicate then subject.
    pub fn incoming(&self, o: TermId) -> impl Iterator<Item = (TripleId, Triple)> + '_ {
        self.ops[self.object_range(o)]
            .iter()
            .map(move |&i| (TripleId(i), self.spo[i as usize]))
    }

    /// Triples ⟨s, p, ?⟩.
    pub fn outgoing_with(&self, s: TermId, p: TermId) -> &[Triple] {
        let slice = &self.spo[self.subject_range(s)];
        let lo = slice.partition_point(|t| t.p < p);
        let hi = slice.partition_point(|t| t.p <= p);
        &slice[lo..hi]
    }

    /// Triples ⟨?, p, o⟩ as ids into subject order.
    fn incoming_ids_with(&self, p: TermId, o: TermId) -> &[u32] {
        let slice = &self.ops[self.object_range(o)];
        let lo = slice.partition_point(|&i| self.spo[i as usize].p < p);
        let hi = slice.partition_point(|&i| self.spo[i as usize].p <= p);
        &slice[lo..hi]
    }

    /// Triples ⟨?, p, o⟩.
    pub fn incoming_with(&self, p: TermId, o: TermId) -> impl Iterator<Item = Triple> + '_ {
        self.incoming_ids_with(p, o)
            .iter()
            .map(move |&i| self.spo[i as usize])
    }

    /// |⟨s, p, ?⟩|
    pub fn count_sp(&self, s: TermId, p: TermId) -> usize {
        self.outgoing_with(s, p).len()
    }

    /// |⟨?, p, o⟩|
    pub fn count_po(&self, p: TermId, o: TermId) -> usize {
        self.incoming_ids_with(p, o).len()
    }

    /// |⟨?, ?, o⟩|
    pub fn count_o(&self, o: TermId) -> usize {
        self.object_range(o).len()
    }

    /// Exactly the triples matching every bound position.
    pub fn triples_matching(
        &self,
        s: Option<TermId>,
        p: Option<TermId>,
        o: Option<TermId>,
    ) -> Vec<Triple> {
        let keep = |t: &Triple| p.is_none_or(|p| t.p == p) && o.is_none_or(|o| t.o == o);
        match (s, p, o) {
            (Some(s), Some(p), _) => self
                .outgoing_with(s, p)
                .iter()
                .copied()
                .filter(keep)
                .collect(),
            (Some(s), None, _) => self.outgoing(s).map(|(_, t)| t).filter(keep).collect(),
            (None, Some(p), Some(o)) => self.incoming_with(p, o).collect(),
            (None, None, Some(o)) => self.incoming(o).map(|(_, t)| t).collect(),
            (None, _, None) => self.spo.iter().copied().filter(keep).collect(),
        }
    }

    pub fn degree(&self, r: TermId, direction: LinkDirection) -> usize {
        let out = self.subject_range(r).len();
        let inc = self.object_range(r).len();
        match direction {
            LinkDirection::Out => out,
            LinkDirection::In => inc,
            LinkDirection::Both => out + inc,
        }
    }

    /// Distinct triples in which `r` appears (a self-loop counts once).
    pub fn touching_count(&self, r: TermId) -> usize {
        let loops = self.outgoing(r).filter(|(_, t)| t.o == r).count();
        self.degree(r, LinkDirection::Both) - loops
    }

    pub fn predicate_count(&self, p: TermId) -> usize {
        self.predicate_counts.get(p.index()).copied().unwrap_or(0) as usize
    }

    /// Predicates with at least one triple, in handle order.
    pub fn predicates(&self) -> impl Iterator<Item = (TermId, usize)> + '_ {
        self.predicate_counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (TermId::from_index(i), c as usize))
    }

    /// Δ(𝒢)
    pub fn max_out_degree(&self) -> usize {
        self.max_out_degree
    }

    /// Subjects of triples whose object is `r`.
    pub fn subjects_linking_to(&self, r: TermId) -> BTreeSet<TermId> {
        self.incoming(r).map(|(_, t)| t.s).collect()
    }

    /// `r` plus every resource linked to it in either direction by a non-`rdf:type` predicate.
    pub fn description(&self, r: TermId) -> BTreeSet<TermId> {
        let mut set: BTreeSet<TermId> = self
            .outgoing(r)
            .filter(|(_, t)| !self.is_type_predicate(t.p))
            .map(|(_, t)| t.o)
            .collect();
        set.extend(
            self.incoming(r)
                .filter(|(_, t)| !self.is_type_predicate(t.p))
                .map(|(_, t)| t.s),
        );
        set.insert(r);
        set
    }

    pub fn summary(&self) -> StoreSummary {
        let mut predicates: Vec<PredicateCount> = self
            .predicates()
            .map(|(p, count)| PredicateCount {
                iri: self.iri(p).to_string(),
                count,
            })
            .collect();
        predicates.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.iri.cmp(&b.iri)));
        StoreSummary {
            triples: self.triple_count(),
            resources: self.resource_count(),
            predicates,
            ingest: self.stats.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture::{self, Fixture};

    #[test]
    fn fixture_totals() {
        let store = fixture::store();
        assert_eq!(store.triple_count(), 22);
        assert_eq!(store.resource_count(), 13);
    }

    #[test]
    fn empty_store_answers_empty() {
        let store = TripleStore::from_ntriples("", IngestOptions::default());
        assert_eq!(store.triple_count(), 0);
        assert_eq!(store.resource_count(), 0);
        assert_eq!(store.max_out_degree(), 0);
        assert!(store.triples_matching(None, None, None).is_empty());
        assert!(store.lookup("http://example.org/ra").is_none());
    }

    #[test]
    fn literal_objects_are_dropped() {
        let text = format!("{}<a> <p> \"x\" .\n", fixture::NTRIPLES);
        let store = TripleStore::from_ntriples(&text, IngestOptions::default());
        assert_eq!(store.triple_count(), 22);
        assert_eq!(store.ingest_stats().literals_skipped, 1);

        let keep = IngestOptions {
            drop_literals: false,
            ..IngestOptions::default()
        };
        let store = TripleStore::from_ntriples(&text, keep);
        assert_eq!(store.triple_count(), 23);
    }

    #[test]
    fn malformed_lines_are_counted_not_fatal() {
        let text = format!("garbage\n{}<a> <p>\n", fixture::NTRIPLES);
        let store = TripleStore::from_ntriples(&text, IngestOptions::default());
        assert_eq!(store.triple_count(), 22);
        assert_eq!(store.ingest_stats().malformed, 2);
    }

    #[test]
    fn incoming_pattern_on_ra() {
        let f = Fixture::new();
        let got: BTreeSet<Triple> = f
            .store
            .triples_matching(None, None, Some(f.r("ra")))
            .into_iter()
            .collect();
        let want: BTreeSet<Triple> = [
            ("r4", "p2", "ra"),
            ("r9", "p3", "ra"),
            ("r9", "p1", "ra"),
            ("r11", "p2", "ra"),
            ("rb", "p3", "ra"),
        ]
        .into_iter()
        .map(|(s, p, o)| f.t(s, p, o))
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn bound_patterns() {
        let f = Fixture::new();
        assert_eq!(
            f.store
                .triples_matching(Some(f.r("ra")), Some(f.p("p2")), None)
                .len(),
            2
        );
        assert!(f
            .store
            .triples_matching(Some(f.r("ra")), Some(f.p("p3")), Some(f.r("rb")))
            .is_empty());
        assert_eq!(
            f.store
                .triples_matching(Some(f.r("ra")), Some(f.p("p2")), Some(f.r("rb")))
                .len(),
            1
        );
    }

    #[test]
    fn degrees_and_counts() {
        let f = Fixture::new();
        let s = &f.store;
        assert_eq!(s.degree(f.r("ra"), LinkDirection::Out), 4);
        assert_eq!(s.degree(f.r("ra"), LinkDirection::Both), 9);
        assert_eq!(s.degree(f.r("rb"), LinkDirection::Both), 9);
        assert_eq!(s.predicate_count(f.p("p2")), 9);
        assert_eq!(s.predicate_count(s.type_predicate().unwrap()), 2);
        assert_eq!(s.predicate_count(TermId(9999)), 0);
        assert_eq!(s.max_out_degree(), 4);
        assert_eq!(s.count_po(f.p("p2"), f.r("rb")), 4);
        assert_eq!(s.count_sp(f.r("ra"), f.p("p2")), 2);
    }

    #[test]
    fn degree_of_unused_term_is_zero() {
        let mut b = StoreBuilder::new(IngestOptions::default());
        b.add("a", "p", "b");
        let store = b.seal();
        // the predicate is interned but never a subject or object
        let p = store.lookup("p").unwrap();
        assert_eq!(store.degree(p, LinkDirection::In), 0);
        assert!(!store.is_resource(p));
        assert_eq!(store.max_out_degree(), 1);
    }

    #[test]
    fn descriptions_exclude_type_only_links() {
        let f = Fixture::new();
        assert_eq!(
            f.store.description(f.r("ra")),
            f.set(&["ra", "rb", "r3", "r4", "r9", "r10", "r11"])
        );
        assert_eq!(
            f.store.description(f.r("rb")),
            f.set(&["rb", "ra", "r3", "r4", "r7", "r8", "r11"])
        );
    }

    #[test]
    fn isolated_description_is_itself() {
        let mut b = StoreBuilder::new(IngestOptions::default());
        b.add("a", RDF_TYPE, "c");
        let store = b.seal();
        let a = store.lookup("a").unwrap();
        assert_eq!(store.description(a), BTreeSet::from([a]));
    }

    #[test]
    fn duplicates_stored_once() {
        let text = format!("{0}{0}", fixture::NTRIPLES);
        let store = TripleStore::from_ntriples(&text, IngestOptions::default());
        assert_eq!(store.triple_count(), 22);
        assert_eq!(store.ingest_stats().duplicates, 22);
    }

    #[test]
    fn excluding_rdf_type_drops_its_triples() {
        let opts = IngestOptions {
            exclude_predicates: vec![RDF_TYPE.to_string()],
            ..IngestOptions::default()
        };
        let store = TripleStore::from_ntriples(fixture::NTRIPLES, opts);
        assert_eq!(store.triple_count(), 20);
        assert_eq!(store.ingest_stats().excluded, 2);
    }

    #[test]
    fn max_triples_caps_ingestion() {
        let opts = IngestOptions {
            max_triples: Some(5),
            ..IngestOptions::default()
        };
        let store = TripleStore::from_ntriples(fixture::NTRIPLES, opts);
        assert_eq!(store.triple_count(), 5);
    }

    #[test]
    fn interning_round_trips() {
        let store = fixture::store();
        for r in store.resources() {
            assert_eq!(store.lookup(store.iri(r)), Some(r));
        }
    }

    #[test]
    fn io_failure_reports_line() {
        struct Failing(usize);
        impl std::io::Read for Failing {
            fn read(&mut self, buf: &mut [u8]) -> std::io::Result<usize> {
                if self.0 == 0 {
                    return Err(std::io::Error::other("boom"));
                }
                self.0 -= 1;
                let line = b"<a> <p> <b> .\n";
                buf[..line.len()].copy_from_slice(line);
                Ok(line.len())
            }
        }
        let reader = std::io::BufReader::with_capacity(16, Failing(2));
        match ingest(reader, IngestOptions::default()) {
            Err(IngestError::Io { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn summary_lists_predicates_by_count() {
        let summary = fixture::store().summary();
        assert_eq!(summary.triples, 22);
        assert_eq!(summary.predicates[0].count, 9);
        assert!(summary.to_tsv().starts_with("triples\t22\nresources\t13\n"));
    }
}
