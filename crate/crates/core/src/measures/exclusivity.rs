//! Exclusivity-weighted paths (ExclM).

use super::canonical;
use crate::error::MeasureError;
use crate::path::{top_k_paths, Path, PathQuery};
use crate::store::{TermId, Triple, TripleStore};

/// 1 / (|⟨s,p,?⟩| + |⟨?,p,o⟩| − 1)
pub fn exclusivity(store: &TripleStore, t: &Triple) -> Result<f64, MeasureError> {
    if !store.contains(t) {
        return Err(MeasureError::UnknownTriple);
    }
    let n = store.count_sp(t.s, t.p) + store.count_po(t.p, t.o) - 1;
    Ok(1.0 / n as f64)
}

/// 1 / Σ 1/exclusivity(t)
pub fn path_weight(store: &TripleStore, path: &Path) -> Result<f64, MeasureError> {
    if path.is_empty() {
        return Err(MeasureError::EmptyPath);
    }
    let mut sum = 0.0;
    for step in path.steps() {
        sum += 1.0 / exclusivity(store, &step.triple)?;
    }
    Ok(1.0 / sum)
}

/// Σ α^len · w(P) over the k heaviest undirected paths of length ≤ h.
pub fn excl_relatedness(
    store: &TripleStore,
    a: TermId,
    b: TermId,
    h: usize,
    k: usize,
    alpha: f64,
) -> Result<f64, MeasureError> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(MeasureError::InvalidAlpha(alpha));
    }
    if h == 0 {
        return Err(MeasureError::InvalidBound);
    }
    if k == 0 {
        return Err(MeasureError::InvalidK);
    }
    if a == b {
        return Ok(0.0);
    }
    let (start, end) = canonical(a, b);
    let q = PathQuery::undirected(start, end, h);
    // weights of stored triples cannot fail
    let top = top_k_paths(store, &q, k, |p| path_weight(store, p).unwrap_or(0.0))?;
    let mut total = 0.0;
    for p in &top {
        total += alpha.powi(p.len() as i32) * path_weight(store, p)?;
    }
    Ok(total)
}
