//! Bounded enumeration of acyclic paths between two resources.
//!
//! A path never revisits a node, endpoints included. Undirected paths may
//! traverse a triple against its orientation; node acyclicity already implies
//! that no triple is used twice. Paths come out in lexicographic order of
//! their triple-id sequences.

use serde::{Deserialize, Serialize};

use crate::error::MeasureError;
use crate::store::{TermId, Triple, TripleId, TripleStore};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathDirection {
    Directed,
    Undirected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LengthMode {
    Exactly,
    AtMost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathQuery {
    pub start: TermId,
    pub end: TermId,
    pub direction: PathDirection,
    pub length_mode: LengthMode,
    pub bound: usize,
}

impl PathQuery {
    pub fn undirected(start: TermId, end: TermId, max_len: usize) -> Self {
        Self {
            start,
            end,
            direction: PathDirection::Undirected,
            length_mode: LengthMode::AtMost,
            bound: max_len,
        }
    }

    pub fn directed_exactly(start: TermId, end: TermId, len: usize) -> Self {
        Self {
            start,
            end,
            direction: PathDirection::Directed,
            length_mode: LengthMode::Exactly,
            bound: len,
        }
    }

    pub fn directed_at_most(start: TermId, end: TermId, max_len: usize) -> Self {
        Self {
            start,
            end,
            direction: PathDirection::Directed,
            length_mode: LengthMode::AtMost,
            bound: max_len,
        }
    }

    fn accepts_length(&self, len: usize) -> bool {
        match self.length_mode {
            LengthMode::Exactly => len == self.bound,
            LengthMode::AtMost => len >= 1 && len <= self.bound,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub id: TripleId,
    pub triple: Triple,
    /// True when the triple is walked subject → object.
    pub forward: bool,
}

impl Step {
    pub fn from_node(&self) -> TermId {
        if self.forward {
            self.triple.s
        } else {
            self.triple.o
        }
    }

    pub fn to_node(&self) -> TermId {
        if self.forward {
            self.triple.o
        } else {
            self.triple.s
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    start: TermId,
    end: TermId,
    steps: Vec<Step>,
}

impl Path {
    pub fn new(start: TermId, end: TermId, steps: Vec<Step>) -> Self {
        Self { start, end, steps }
    }

    pub fn start(&self) -> TermId {
        self.start
    }

    pub fn end(&self) -> TermId {
        self.end
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn triple_ids(&self) -> Vec<TripleId> {
        self.steps.iter().map(|s| s.id).collect()
    }

    /// Visited nodes, start first.
    pub fn nodes(&self) -> Vec<TermId> {
        let mut nodes = Vec::with_capacity(self.steps.len() + 1);
        nodes.push(self.start);
        nodes.extend(self.steps.iter().map(Step::to_node));
        nodes
    }

    /// Same path walked from the other end.
    pub fn reversed(&self) -> Path {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|s| Step {
                forward: !s.forward,
                ..*s
            })
            .collect();
        Path::new(self.end, self.start, steps)
    }

    /// Checks chaining, endpoint agreement and the no-repeated-node rule.
    pub fn is_well_formed(&self) -> bool {
        if self.steps.is_empty() {
            return false;
        }
        let mut at = self.start;
        for step in &self.steps {
            if step.from_node() != at {
                return false;
            }
            at = step.to_node();
        }
        if at != self.end {
            return false;
        }
        let mut nodes = self.nodes();
        nodes.sort_unstable();
        nodes.windows(2).all(|w| w[0] != w[1])
    }
}

fn check(q: &PathQuery) -> Result<(), MeasureError> {
    if q.bound == 0 {
        return Err(MeasureError::InvalidBound);
    }
    if q.start == q.end {
        return Err(MeasureError::DegeneratePair);
    }
    Ok(())
}

/// Calls `visit` with the steps of every path satisfying `q`, in enumeration order.
pub fn visit_paths<F>(store: &TripleStore, q: &PathQuery, mut visit: F) -> Result<(), MeasureError>
where
    F: FnMut(&[Step]),
{
    walk(store, q, &mut |steps| {
        visit(steps);
        true
    })
}

/// Walks paths until `visit` returns false.
fn walk(
    store: &TripleStore,
    q: &PathQuery,
    visit: &mut dyn FnMut(&[Step]) -> bool,
) -> Result<(), MeasureError> {
    check(q)?;
    let mut walker = Walker {
        store,
        q,
        steps: Vec::with_capacity(q.bound),
        on_path: vec![q.start],
        stopped: false,
    };
    walker.extend(q.start, visit);
    Ok(())
}

struct Walker<'a> {
    store: &'a TripleStore,
    q: &'a PathQuery,
    steps: Vec<Step>,
    on_path: Vec<TermId>,
    stopped: bool,
}

impl Walker<'_> {
    fn candidates(&self, node: TermId) -> Vec<Step> {
        let mut out: Vec<Step> = self
            .store
            .outgoing(node)
            .map(|(id, triple)| Step {
                id,
                triple,
                forward: true,
            })
            .collect();
        if self.q.direction == PathDirection::Undirected {
            out.extend(self.store.incoming(node).map(|(id, triple)| Step {
                id,
                triple,
                forward: false,
            }));
            out.sort_unstable_by_key(|s| (s.id, !s.forward));
        }
        out
    }

    fn extend(&mut self, node: TermId, visit: &mut dyn FnMut(&[Step]) -> bool) {
        let depth = self.steps.len();
        if depth == self.q.bound {
            return;
        }
        let last = depth + 1 == self.q.bound;
        for step in self.candidates(node) {
            if self.stopped {
                return;
            }
            let next = step.to_node();
            if next == self.q.end {
                if self.q.accepts_length(depth + 1) {
                    self.steps.push(step);
                    self.stopped = !visit(&self.steps);
                    self.steps.pop();
                }
                continue;
            }
            if last || self.on_path.contains(&next) {
                continue;
            }
            self.steps.push(step);
            self.on_path.push(next);
            self.extend(next, visit);
            self.on_path.pop();
            self.steps.pop();
        }
    }
}

/// Every acyclic path satisfying `q`.
pub fn enumerate_paths(store: &TripleStore, q: &PathQuery) -> Result<Vec<Path>, MeasureError> {
    let mut paths = Vec::new();
    visit_paths(store, q, |steps| {
        paths.push(Path::new(q.start, q.end, steps.to_vec()))
    })?;
    Ok(paths)
}

/// True if at least one path satisfies `q`.
pub fn any_path(store: &TripleStore, q: &PathQuery) -> Result<bool, MeasureError> {
    let mut found = false;
    walk(store, q, &mut |_| {
        found = true;
        false
    })?;
    Ok(found)
}

/// The `k` heaviest paths; equal weights keep enumeration order.
pub fn top_k_paths<W>(
    store: &TripleStore,
    q: &PathQuery,
    k: usize,
    path_weight: W,
) -> Result<Vec<Path>, MeasureError>
where
    W: Fn(&Path) -> f64,
{
    if k == 0 {
        return Err(MeasureError::InvalidK);
    }
    let mut scored: Vec<(f64, Path)> = enumerate_paths(store, q)?
        .into_iter()
        .map(|p| (path_weight(&p), p))
        .collect();
    scored.sort_by(|a, b| b.0.total_cmp(&a.0));
    scored.truncate(k);
    Ok(scored.into_iter().map(|(_, p)| p).collect())
}
