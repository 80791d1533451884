use std::collections::HashSet;
use std::io::BufRead;

use indexmap::IndexSet;
use serde::{Deserialize, Serialize};

use super::ntriples::{parse_line, Line, Token};
use super::{TermId, Triple, TripleStore};
use crate::error::IngestError;

/// Knobs applied while reading N-Triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestOptions {
    /// Skip statements whose object is a literal.
    pub drop_literals: bool,
    /// Predicate IRIs whose statements are discarded, e.g. the DBpedia wiki-link predicate.
    pub exclude_predicates: Vec<String>,
    /// Stop after this many accepted statements.
    pub max_triples: Option<u64>,
}

impl Default for IngestOptions {
    fn default() -> Self {
        Self {
            drop_literals: true,
            exclude_predicates: Vec::new(),
            max_triples: None,
        }
    }
}

/// Counters collected during ingestion.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestStats {
    pub lines: u64,
    pub statements: u64,
    pub literals_skipped: u64,
    pub excluded: u64,
    pub malformed: u64,
    pub duplicates: u64,
}

/// Single-writer accumulator; [`StoreBuilder::seal`] turns it into an immutable store.
#[derive(Debug, Default)]
pub struct StoreBuilder {
    opts: IngestOptions,
    excluded: HashSet<String>,
    terms: IndexSet<Box<str>>,
    triples: Vec<Triple>,
    stats: IngestStats,
}

impl StoreBuilder {
    pub fn new(opts: IngestOptions) -> Self {
        let excluded = opts.exclude_predicates.iter().cloned().collect();
        Self {
            opts,
            excluded,
            ..Self::default()
        }
    }

    pub fn stats(&self) -> &IngestStats {
        &self.stats
    }

    fn at_capacity(&self) -> bool {
        self.opts
            .max_triples
            .is_some_and(|cap| self.triples.len() as u64 >= cap)
    }

    fn intern(&mut self, key: &str) -> TermId {
        if let Some(idx) = self.terms.get_index_of(key) {
            return TermId::from_index(idx);
        }
        let (idx, _) = self.terms.insert_full(key.into());
        TermId::from_index(idx)
    }

    /// Adds one statement given as bare IRIs. Exclusion and capacity rules apply.
    pub fn add(&mut self, subject: &str, predicate: &str, object: &str) -> bool {
        if self.at_capacity() {
            return false;
        }
        if self.excluded.contains(predicate) {
            self.stats.excluded += 1;
            return false;
        }
        let s = self.intern(subject);
        let p = self.intern(predicate);
        let o = self.intern(object);
        self.triples.push(Triple { s, p, o });
        self.stats.statements += 1;
        true
    }

    /// Streams N-Triples lines from `reader`. Malformed lines are counted and skipped.
    pub fn ingest<R: BufRead>(&mut self, mut reader: R) -> Result<&mut Self, IngestError> {
        let mut buf = Vec::with_capacity(256);
        let mut line_no = 0u64;
        loop {
            if self.at_capacity() {
                break;
            }
            buf.clear();
            line_no += 1;
            match reader.read_until(b'\n', &mut buf) {
                Ok(0) => break,
                Ok(_) => {}
                Err(source) => {
                    return Err(IngestError::Io {
                        line: line_no,
                        source,
                    })
                }
            }
            self.stats.lines += 1;
            let Ok(text) = std::str::from_utf8(&buf) else {
                self.stats.malformed += 1;
                continue;
            };
            match parse_line(text.trim_end_matches(['\n', '\r'])) {
                Line::Skip => {}
                Line::Malformed => self.stats.malformed += 1,
                Line::Statement {
                    subject,
                    predicate,
                    object,
                } => {
                    if matches!(object, Token::Literal(_)) && self.opts.drop_literals {
                        self.stats.literals_skipped += 1;
                        continue;
                    }
                    self.add(subject.key(), predicate.key(), object.key());
                }
            }
        }
        Ok(self)
    }

    /// Deduplicates, builds every index and freezes the store.
    pub fn seal(self) -> TripleStore {
        let StoreBuilder {
            terms,
            mut triples,
            mut stats,
            ..
        } = self;
        assert!(
            terms.len() < u32::MAX as usize,
            "term space exceeds 32-bit handles"
        );
        triples.sort_unstable();
        let before = triples.len();
        triples.dedup();
        stats.duplicates = (before - triples.len()) as u64;
        TripleStore::from_sorted(terms, triples, stats)
    }
}
