mod common;

use std::collections::BTreeSet;

use common::{edges, graph_from, Oracle};
use kgrel::path::{enumerate_paths, LengthMode, PathDirection, Step};
use kgrel::{PathQuery, TermId};
use proptest::prelude::*;

fn query(
    a: TermId,
    b: TermId,
    direction: PathDirection,
    length_mode: LengthMode,
    bound: usize,
) -> PathQuery {
    PathQuery {
        start: a,
        end: b,
        direction,
        length_mode,
        bound,
    }
}

fn keys(steps: &[Step]) -> Vec<(usize, bool)> {
    steps.iter().map(|s| (s.id.index(), s.forward)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn enumeration_matches_naive_dfs(es in edges(8, 20)) {
        let store = graph_from(&es);
        let oracle = Oracle::new(&store);
        let rs: Vec<TermId> = store.resources().collect();
        for &a in &rs {
            for &b in &rs {
                if a == b {
                    continue;
                }
                for bound in 1..=4 {
                    for direction in [PathDirection::Directed, PathDirection::Undirected] {
                        for mode in [LengthMode::Exactly, LengthMode::AtMost] {
                            let got: Vec<_> = enumerate_paths(&store, &query(a, b, direction, mode, bound))
                                .unwrap()
                                .iter()
                                .map(|p| keys(p.steps()))
                                .collect();
                            let min = if mode == LengthMode::Exactly { bound } else { 1 };
                            let want = oracle.paths(a, b, direction == PathDirection::Directed, min, bound);
                            prop_assert_eq!(got, want);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn paths_are_well_formed_and_reversible(es in edges(8, 20), h in 1..4usize) {
        let store = graph_from(&es);
        let rs: Vec<TermId> = store.resources().collect();
        for &a in &rs {
            for &b in &rs {
                if a == b {
                    continue;
                }
                let ab = enumerate_paths(&store, &PathQuery::undirected(a, b, h)).unwrap();
                for p in &ab {
                    prop_assert!(p.is_well_formed());
                }
                let forward: BTreeSet<_> = ab.iter().map(|p| keys(p.reversed().steps())).collect();
                let back: BTreeSet<_> = enumerate_paths(&store, &PathQuery::undirected(b, a, h))
                    .unwrap()
                    .iter()
                    .map(|p| keys(p.steps()))
                    .collect();
                prop_assert_eq!(forward, back);
            }
        }
    }

    #[test]
    fn at_most_is_union_of_exact(es in edges(8, 20), h in 1..4usize) {
        let store = graph_from(&es);
        let rs: Vec<TermId> = store.resources().collect();
        for &a in &rs {
            for &b in &rs {
                if a == b {
                    continue;
                }
                let at_most = enumerate_paths(&store, &PathQuery::directed_at_most(a, b, h)).unwrap();
                let mut union = Vec::new();
                for n in 1..=h {
                    union.extend(enumerate_paths(&store, &PathQuery::directed_exactly(a, b, n)).unwrap());
                }
                let distinct: BTreeSet<_> = at_most.iter().map(|p| keys(p.steps())).collect();
                prop_assert_eq!(distinct.len(), at_most.len());
                let u: BTreeSet<_> = union.iter().map(|p| keys(p.steps())).collect();
                prop_assert_eq!(distinct, u);
            }
        }
    }
}
