use std::io;

use thiserror::Error;

/// Errors raised while reading N-Triples input.
#[derive(Debug, Error)]
pub enum IngestError {
    #[error("I/O failure at line {line}: {source}")]
    Io {
        line: u64,
        #[source]
        source: io::Error,
    },
}

/// Errors raised by graph queries and relatedness measures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeasureError {
    #[error("degenerate pair: start and end are the same resource")]
    DegeneratePair,
    #[error("path bound must be at least 1")]
    InvalidBound,
    #[error("k must be at least 1")]
    InvalidK,
    #[error("resource {0} does not occur in any triple")]
    IsolatedResource(String),
    #[error("triple is not part of the graph")]
    UnknownTriple,
    #[error("predicate {0} has no entry in the weight table")]
    UnweightedPredicate(String),
    #[error("probability {0} is outside (0, 1]")]
    ProbabilityDomain(f64),
    #[error("path is empty")]
    EmptyPath,
    #[error("value {0} is outside [0, 1]")]
    ConversionDomain(f64),
    #[error("alpha {0} is outside (0, 1]")]
    InvalidAlpha(f64),
}

/// Errors raised by the benchmark harness.
#[derive(Debug, Error)]
pub enum BenchError {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("{file}: row {row}: {message}")]
    Malformed {
        file: String,
        row: usize,
        message: String,
    },
    #[error("undefined correlation: {0}")]
    UndefinedCorrelation(&'static str),
    #[error(transparent)]
    UnknownMethod(#[from] ParseMethodError),
}

/// A method name outside the supported set.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown method `{0}`")]
pub struct ParseMethodError(pub String);
