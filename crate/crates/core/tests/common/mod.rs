//! Random graphs and brute-force reference implementations.
//!
//! The reference code scans the raw triple list and enumerates paths by
//! naive recursion. It only borrows term handles and triple order from the
//! store so results can be compared one to one.

#![allow(dead_code)]

use std::collections::BTreeSet;

use kgrel::{TermId, Triple, TripleStore};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A graph with at most `max_nodes` nodes, at most `max_triples` statements
/// and 1..=3 predicates. Duplicate statements collapse on sealing.
pub fn random_graph(rng: &mut impl Rng, max_nodes: usize, max_triples: usize) -> TripleStore {
    let nodes = rng.gen_range(2..=max_nodes);
    let preds = rng.gen_range(1..=3);
    let n = rng.gen_range(1..=max_triples);
    let statements: Vec<(String, String, String)> = (0..n)
        .map(|_| {
            (
                format!("http://t/n{}", rng.gen_range(0..nodes)),
                format!("http://t/p{}", rng.gen_range(0..preds)),
                format!("http://t/n{}", rng.gen_range(0..nodes)),
            )
        })
        .collect();
    TripleStore::from_iris(
        statements
            .iter()
            .map(|(s, p, o)| (s.as_str(), p.as_str(), o.as_str())),
    )
}

/// Statements as (subject, predicate, object) indices.
pub type Edges = Vec<(usize, usize, usize)>;

pub fn edges(max_nodes: usize, max_triples: usize) -> impl Strategy<Value = Edges> {
    prop::collection::vec((0..max_nodes, 0..3usize, 0..max_nodes), 1..=max_triples)
}

pub fn node_iri(i: usize) -> String {
    format!("http://t/n{i}")
}

pub fn predicate_iri(j: usize) -> String {
    format!("http://t/p{j}")
}

pub fn graph_from(edges: &[(usize, usize, usize)]) -> TripleStore {
    let st: Vec<(String, String, String)> = edges
        .iter()
        .map(|&(s, p, o)| (node_iri(s), predicate_iri(p), node_iri(o)))
        .collect();
    TripleStore::from_iris(
        st.iter()
            .map(|(s, p, o)| (s.as_str(), p.as_str(), o.as_str())),
    )
}

pub fn ntriples(edges: &[(usize, usize, usize)]) -> String {
    edges
        .iter()
        .map(|&(s, p, o)| {
            format!(
                "<{}> <{}> <{}> .\n",
                node_iri(s),
                predicate_iri(p),
                node_iri(o)
            )
        })
        .collect()
}

pub fn resources(store: &TripleStore) -> Vec<TermId> {
    store.resources().collect()
}

/// Two distinct resources, if the graph has them.
pub fn random_pair(rng: &mut impl Rng, store: &TripleStore) -> Option<(TermId, TermId)> {
    let rs = resources(store);
    if rs.len() < 2 {
        return None;
    }
    let picked: Vec<&TermId> = rs.choose_multiple(rng, 2).collect();
    Some((*picked[0], *picked[1]))
}

pub fn close(x: f64, y: f64, rel: f64) -> bool {
    x == y || (x - y).abs() <= rel * x.abs().max(y.abs())
}

fn hamacher_t(x: f64, y: f64) -> f64 {
    if x == 0.0 && y == 0.0 {
        0.0
    } else {
        x * y / (x + y - x * y)
    }
}

fn hamacher_s(x: f64, y: f64) -> f64 {
    if x * y == 1.0 {
        1.0
    } else {
        (x + y - 2.0 * x * y) / (1.0 - x * y)
    }
}

/// One step of a path: a triple and whether it is walked subject to object.
pub type Edge = (usize, bool);

pub struct Oracle {
    pub ts: Vec<Triple>,
}

impl Oracle {
    pub fn new(store: &TripleStore) -> Self {
        Self {
            ts: store.triples().to_vec(),
        }
    }

    fn n(&self) -> f64 {
        self.ts.len() as f64
    }

    fn count(&self, f: impl Fn(&Triple) -> bool) -> usize {
        self.ts.iter().filter(|t| f(t)).count()
    }

    fn has(&self, s: TermId, p: TermId, o: TermId) -> bool {
        self.ts.iter().any(|t| t.s == s && t.p == p && t.o == o)
    }

    fn predicates(&self) -> BTreeSet<TermId> {
        self.ts.iter().map(|t| t.p).collect()
    }

    fn nodes(&self) -> BTreeSet<TermId> {
        self.ts.iter().flat_map(|t| [t.s, t.o]).collect()
    }

    /// Every acyclic path from `a` to `b`, ordered by its sequence of
    /// (triple position, backward flag).
    pub fn paths(
        &self,
        a: TermId,
        b: TermId,
        directed: bool,
        min: usize,
        max: usize,
    ) -> Vec<Vec<Edge>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut seen = vec![a];
        self.dfs(a, b, directed, min, max, &mut cur, &mut seen, &mut out);
        out.sort_by_key(|p| p.iter().map(|&(i, fwd)| (i, !fwd)).collect::<Vec<_>>());
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        at: TermId,
        b: TermId,
        directed: bool,
        min: usize,
        max: usize,
        cur: &mut Vec<Edge>,
        seen: &mut Vec<TermId>,
        out: &mut Vec<Vec<Edge>>,
    ) {
        if cur.len() == max {
            return;
        }
        for (i, t) in self.ts.iter().enumerate() {
            let mut moves = Vec::new();
            if t.s == at {
                moves.push((t.o, true));
            }
            if !directed && t.o == at {
                moves.push((t.s, false));
            }
            for (next, fwd) in moves {
                if seen.contains(&next) {
                    continue;
                }
                cur.push((i, fwd));
                if next == b {
                    if cur.len() >= min {
                        out.push(cur.clone());
                    }
                } else {
                    seen.push(next);
                    self.dfs(next, b, directed, min, max, cur, seen, out);
                    seen.pop();
                }
                cur.pop();
            }
        }
    }

    fn ordered(a: TermId, b: TermId) -> (TermId, TermId) {
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    // LDSD_cw with natural logs.
    pub fn ldsd_cw(&self, a: TermId, b: TermId) -> f64 {
        let damp = |x: usize| 1.0 / (1.0 + (x as f64).ln());
        let nodes = self.nodes();
        let mut f = 0.0;
        for p in self.predicates() {
            if self.has(a, p, b) {
                f += damp(self.count(|t| t.s == a && t.p == p));
            }
            if self.has(b, p, a) {
                f += damp(self.count(|t| t.s == b && t.p == p));
            }
            let shares_object = |x: TermId, y: TermId| {
                nodes
                    .iter()
                    .any(|&n| self.has(x, p, n) && self.has(y, p, n))
            };
            let shares_subject = |x: TermId, y: TermId| {
                nodes
                    .iter()
                    .any(|&n| self.has(n, p, x) && self.has(n, p, y))
            };
            if shares_object(a, b) {
                f += damp(
                    nodes
                        .iter()
                        .filter(|&&x| x != a && shares_object(a, x))
                        .count(),
                );
            }
            if shares_subject(a, b) {
                f += damp(
                    nodes
                        .iter()
                        .filter(|&&x| x != a && shares_subject(a, x))
                        .count(),
                );
            }
        }
        1.0 / (1.0 + f)
    }

    pub fn pldsd(&self, a: TermId, b: TermId, h: usize) -> f64 {
        if a == b {
            return 0.0;
        }
        let (s, e) = Self::ordered(a, b);
        self.paths(s, e, false, 1, h)
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&(i, _)| 1.0 - self.ldsd_cw(self.ts[i].s, self.ts[i].o))
                    .product::<f64>()
            })
            .fold(0.0, f64::max)
    }

    /// kind: 0 joint, 1 comb, 2 pmi; base 10.
    pub fn ic_weight(&self, kind: usize, t: &Triple) -> f64 {
        let n = self.n();
        let cp = self.count(|u| u.p == t.p) as f64;
        let co = self.count(|u| u.o == t.o) as f64;
        let cpo = self.count(|u| u.p == t.p && u.o == t.o) as f64;
        let ratio = match kind {
            0 => n / cpo,
            1 => (n * n) / (cp * co),
            _ => (n * n * cpo) / (cp * cp * co),
        };
        ratio.log10()
    }

    pub fn icm(&self, kind: usize, a: TermId, b: TermId, h: usize) -> f64 {
        if a == b {
            return 1.0;
        }
        let w_max = self
            .ts
            .iter()
            .map(|t| self.ic_weight(kind, t))
            .fold(f64::NEG_INFINITY, f64::max);
        let (s, e) = Self::ordered(a, b);
        let costs: Vec<f64> = self
            .paths(s, e, false, 1, h)
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&(i, _)| w_max - self.ic_weight(kind, &self.ts[i]))
                    .sum()
            })
            .collect();
        match costs.into_iter().reduce(f64::min) {
            None => 0.0,
            Some(c) if c <= 0.0 => 1e9,
            Some(c) => 1.0 / c,
        }
    }

    pub fn exclm(&self, a: TermId, b: TermId, h: usize, k: usize, alpha: f64) -> f64 {
        if a == b {
            return 0.0;
        }
        let (s, e) = Self::ordered(a, b);
        let mut scored: Vec<(f64, usize)> = self
            .paths(s, e, false, 1, h)
            .iter()
            .map(|p| {
                let inv: usize = p
                    .iter()
                    .map(|&(i, _)| {
                        let t = self.ts[i];
                        self.count(|u| u.s == t.s && u.p == t.p)
                            + self.count(|u| u.p == t.p && u.o == t.o)
                            - 1
                    })
                    .sum();
                (1.0 / inv as f64, p.len())
            })
            .collect();
        // stable: equal weights keep path order
        scored.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
        scored
            .iter()
            .take(k)
            .map(|&(w, len)| alpha.powi(len as i32) * w)
            .sum()
    }

    fn wsrm(&self, x: TermId, y: TermId) -> f64 {
        let out = self.count(|t| t.s == x);
        if out == 0 {
            0.0
        } else {
            self.count(|t| t.s == x && t.o == y) as f64 / out as f64
        }
    }

    fn node_paths(&self, a: TermId, b: TermId, min: usize, max: usize) -> BTreeSet<Vec<TermId>> {
        self.paths(a, b, true, min, max)
            .iter()
            .map(|p| {
                let mut nodes = vec![a];
                nodes.extend(p.iter().map(|&(i, _)| self.ts[i].o));
                nodes
            })
            .collect()
    }

    fn snorm_paths(&self, paths: &BTreeSet<Vec<TermId>>) -> f64 {
        paths
            .iter()
            .map(|nodes| {
                nodes
                    .windows(2)
                    .map(|w| self.wsrm(w[0], w[1]))
                    .reduce(hamacher_t)
                    .unwrap()
            })
            .fold(0.0, hamacher_s)
    }

    /// variant: 'a', 'b' or 'c'; directed from a to b.
    pub fn asrmp(&self, variant: char, m: usize, a: TermId, b: TermId) -> f64 {
        if a == b {
            return 0.0;
        }
        match variant {
            'a' => self.snorm_paths(&self.node_paths(a, b, m, m)),
            'b' => self.snorm_paths(&self.node_paths(a, b, 1, m)),
            _ => {
                let sets: Vec<_> = (1..=m).map(|n| self.node_paths(a, b, n, n)).collect();
                let total: usize = sets.iter().map(|s| s.len()).sum();
                if total == 0 {
                    return 0.0;
                }
                sets.iter()
                    .map(|s| s.len() as f64 / total as f64 * self.snorm_paths(s))
                    .sum()
            }
        }
    }

    pub fn psi(&self, variant: char, m: usize, a: TermId, b: TermId) -> f64 {
        (self.asrmp(variant, m, a, b) + self.asrmp(variant, m, b, a)) / 2.0
    }

    /// Predicate IC weights, base 10.
    pub fn proxm(&self, a: TermId, b: TermId, h: usize) -> f64 {
        if a == b {
            return 1.0;
        }
        let w = |p: TermId| (self.n() / self.count(|t| t.p == p) as f64).log10();
        let omega = self.predicates().into_iter().map(w).fold(0.0, f64::max);
        if omega <= 0.0 {
            return 0.0;
        }
        let delta = self
            .nodes()
            .iter()
            .map(|&r| self.count(|t| t.s == r))
            .max()
            .unwrap() as f64;
        let (s, e) = Self::ordered(a, b);
        let mut total = 0.0;
        for len in 1..=h {
            let sum: f64 = self
                .paths(s, e, false, len, len)
                .iter()
                .map(|p| p.iter().map(|&(i, _)| w(self.ts[i].p)).sum::<f64>())
                .sum();
            total += sum / (2.0 * delta).powi(len as i32);
        }
        total / omega
    }

    fn pf_itf(&self, r: TermId, p: TermId, incoming: bool) -> f64 {
        let touching = self.count(|t| t.s == r || t.o == r) as f64;
        let c = if incoming {
            self.count(|t| t.p == p && t.o == r)
        } else {
            self.count(|t| t.s == r && t.p == p)
        } as f64;
        c / touching * (self.n() / self.count(|t| t.p == p) as f64).log10()
    }

    /// Informativeness of the most informative path, base 10.
    pub fn reword_mip(&self, a: TermId, b: TermId, h: usize) -> f64 {
        if a == b {
            return 0.0;
        }
        let (s, e) = Self::ordered(a, b);
        self.paths(s, e, false, 1, h)
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&(i, _)| {
                        let t = self.ts[i];
                        (self.pf_itf(t.s, t.p, false) + self.pf_itf(t.o, t.p, true)) / 2.0
                    })
                    .sum::<f64>()
                    / p.len() as f64
            })
            .fold(0.0, f64::max)
    }
}
