//! The 22-triple running-example graph used throughout the tests.
//!
//! Resources are `http://example.org/{ra,rb,r1..r11}` and predicates
//! `http://example.org/{p1,p2,p3}` plus `rdf:type`.

use std::collections::BTreeSet;

use crate::store::{IngestOptions, TermId, Triple, TripleStore, RDF_TYPE};

pub const NTRIPLES: &str = include_str!("../data/running_example.nt");

pub const BASE: &str = "http://example.org/";

pub fn store() -> TripleStore {
    TripleStore::from_ntriples(NTRIPLES, IngestOptions::default())
}

/// Expands a short name (`ra`, `p2`, `type`) to its IRI.
pub fn iri(name: &str) -> String {
    if name == "type" {
        RDF_TYPE.to_string()
    } else {
        format!("{BASE}{name}")
    }
}

/// Fixture store with short-name lookups.
pub struct Fixture {
    pub store: TripleStore,
}

impl Default for Fixture {
    fn default() -> Self {
        Self::new()
    }
}

impl Fixture {
    pub fn new() -> Self {
        Self { store: store() }
    }

    pub fn r(&self, name: &str) -> TermId {
        self.store
            .lookup(&iri(name))
            .unwrap_or_else(|| panic!("{name} not in fixture"))
    }

    pub fn p(&self, name: &str) -> TermId {
        self.r(name)
    }

    pub fn t(&self, s: &str, p: &str, o: &str) -> Triple {
        Triple {
            s: self.r(s),
            p: self.p(p),
            o: self.r(o),
        }
    }

    pub fn set(&self, names: &[&str]) -> BTreeSet<TermId> {
        names.iter().map(|n| self.r(n)).collect()
    }
}
