//! WSRM edge relatedness and its path aggregation (ASRMP and the ψ mean).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::fuzzy::{hamacher_snorm, hamacher_tnorm};
use crate::error::MeasureError;
use crate::path::{visit_paths, PathQuery};
use crate::store::{LinkDirection, TermId, TripleStore};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AsrmpVariant {
    /// Directed paths of length exactly m.
    A,
    /// Directed paths of length at most m.
    B,
    /// Length-weighted mix over lengths 1..=m.
    C,
}

/// Predicates linking a to b over the out-degree of a.
pub fn wsrm(store: &TripleStore, a: TermId, b: TermId) -> f64 {
    let out = store.degree(a, LinkDirection::Out);
    if out == 0 {
        return 0.0;
    }
    let links = store.outgoing(a).filter(|(_, t)| t.o == b).count();
    links as f64 / out as f64
}

/// Directed paths as node sequences. Parallel triples between the same two
/// nodes collapse into one sequence; WSRM already counts them.
pub fn directed_node_paths(
    store: &TripleStore,
    q: &PathQuery,
) -> Result<BTreeSet<Vec<TermId>>, MeasureError> {
    let mut out = BTreeSet::new();
    visit_paths(store, q, |steps| {
        let mut nodes = Vec::with_capacity(steps.len() + 1);
        nodes.push(q.start);
        nodes.extend(steps.iter().map(|s| s.triple.o));
        out.insert(nodes);
    })?;
    Ok(out)
}

/// T-norm fold of WSRM along a node sequence.
pub fn path_strength(store: &TripleStore, nodes: &[TermId]) -> f64 {
    nodes
        .windows(2)
        .map(|w| wsrm(store, w[0], w[1]))
        .reduce(hamacher_tnorm)
        .unwrap_or(0.0)
}

fn snorm_over<'a>(store: &TripleStore, paths: impl Iterator<Item = &'a Vec<TermId>>) -> f64 {
    paths
        .map(|p| path_strength(store, p))
        .fold(0.0, hamacher_snorm)
}

/// Directed relatedness of a to b. 0 when no path qualifies and for a ≡ b.
pub fn asrmp(
    store: &TripleStore,
    variant: AsrmpVariant,
    m: usize,
    a: TermId,
    b: TermId,
) -> Result<f64, MeasureError> {
    if m == 0 {
        return Err(MeasureError::InvalidBound);
    }
    if a == b {
        return Ok(0.0);
    }
    match variant {
        AsrmpVariant::A => {
            let paths = directed_node_paths(store, &PathQuery::directed_exactly(a, b, m))?;
            Ok(snorm_over(store, paths.iter()))
        }
        AsrmpVariant::B => {
            let paths = directed_node_paths(store, &PathQuery::directed_at_most(a, b, m))?;
            Ok(snorm_over(store, paths.iter()))
        }
        AsrmpVariant::C => {
            let by_length: Vec<BTreeSet<Vec<TermId>>> = (1..=m)
                .map(|n| directed_node_paths(store, &PathQuery::directed_exactly(a, b, n)))
                .collect::<Result<_, _>>()?;
            let total: usize = by_length.iter().map(BTreeSet::len).sum();
            if total == 0 {
                return Ok(0.0);
            }
            Ok(by_length
                .iter()
                .map(|paths| paths.len() as f64 / total as f64 * snorm_over(store, paths.iter()))
                .sum())
        }
    }
}

/// ½ (asrmp(a, b) + asrmp(b, a))
pub fn psi(
    store: &TripleStore,
    variant: AsrmpVariant,
    m: usize,
    a: TermId,
    b: TermId,
) -> Result<f64, MeasureError> {
    Ok((asrmp(store, variant, m, a, b)? + asrmp(store, variant, m, b, a)?) / 2.0)
}
