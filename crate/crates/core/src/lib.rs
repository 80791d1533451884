//! Semantic relatedness over RDF knowledge graphs.
//!
//! [`store`] holds the interned triple store and N-Triples ingestion,
//! [`path`] enumerates bounded acyclic paths, [`measures`] implements the
//! relatedness families, [`method`] dispatches them by name and [`bench`]
//! correlates scores against human judgments.

pub mod bench;
pub mod error;
pub mod fixture;
pub mod measures;
pub mod method;
pub mod path;
pub mod store;

pub use error::{BenchError, IngestError, MeasureError, ParseMethodError};
pub use method::{to_relatedness, Conversion, Method, MethodParams, Scorer};
pub use path::{Path, PathDirection, PathQuery};
pub use store::{ingest, IngestOptions, TermId, Triple, TripleStore};
