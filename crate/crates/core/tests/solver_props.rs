mod common;

use fflab_core::engine::{is_winning, run_from};
use fflab_core::oracle::{oracle_ffn, Oracle};
use fflab_core::solver::{SearchOptions, Solver};
use fflab_core::{Graph, NodeSet, Variant};
use proptest::prelude::*;

const VARIANTS: [Variant; 2] = [Variant::Firefighter, Variant::Hunter];

#[test]
fn pruned_search_matches_naive_search_and_oracle() {
    let fast = Solver::default();
    let naive = Solver::new(SearchOptions::naive());
    for g in common::all_graphs(6) {
        for variant in VARIANTS {
            for m in 0..=g.n() {
                let a = fast.search(&g, m, variant, None).unwrap();
                let b = naive.search(&g, m, variant, None).unwrap();
                let want = Oracle::new(&g, m, variant).unwrap().shortest_t();
                assert_eq!(a.shortest, want, "pruned {variant} m={m} on {:?}", g.edges());
                assert_eq!(b.shortest, want, "naive {variant} m={m} on {:?}", g.edges());
                if let Some(w) = &a.witness {
                    assert!(is_winning(&g, w, variant));
                    assert_eq!(Some(w.len()), want);
                }
            }
        }
    }
}

#[test]
fn ffn_matches_oracle_on_graphs_up_to_six_nodes() {
    for g in common::all_graphs(6) {
        for variant in VARIANTS {
            let r = fflab_core::ffn(&g, variant).unwrap();
            assert_eq!(r.ffn, oracle_ffn(&g, variant).unwrap(), "{variant} on {:?}", g.edges());
        }
    }
}

#[test]
fn winnable_sets_are_closed_downward() {
    let solver = Solver::default();
    for g in common::all_graphs(6) {
        let n = g.n();
        for variant in VARIANTS {
            for m in 1..n.max(1) {
                let win: Vec<bool> = (0..1u64 << n)
                    .map(|b| {
                        let start = NodeSet::from_mask(n, b);
                        solver.search_from(&g, &start, m, variant, None).unwrap().is_winning()
                    })
                    .collect();
                for b in 0..1u64 << n {
                    if !win[b as usize] {
                        continue;
                    }
                    for v in 0..n {
                        let smaller = b & !(1 << v);
                        assert!(win[smaller as usize], "{variant} m={m} {b:b} -> {smaller:b}");
                    }
                }
            }
        }
    }
}

#[test]
fn search_from_witness_clears_its_start() {
    let solver = Solver::default();
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
    let start = NodeSet::from_nodes(6, [0, 2, 4]).unwrap();
    let d = solver.search_from(&g, &start, 3, Variant::Firefighter, None).unwrap();
    let w = d.witness.unwrap();
    assert!(run_from(&g, start, &w, Variant::Firefighter).last().unwrap().is_empty());
}

fn graph_and_subgraph() -> impl Strategy<Value = (Graph, Graph)> {
    (1usize..=7)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let k = pairs.len();
            (
                Just(n),
                Just(pairs),
                proptest::collection::vec(any::<bool>(), k),
                proptest::collection::vec(any::<bool>(), k),
                proptest::collection::vec(any::<bool>(), n),
            )
        })
        .prop_map(|(n, pairs, keep, keep_sub, keep_node)| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, k)| **k).map(|(e, _)| *e).collect();
            let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
            let mut nodes: Vec<usize> = (0..n).filter(|&v| keep_node[v]).collect();
            if nodes.is_empty() {
                nodes.push(0);
            }
            let sub_edges = edges
                .iter()
                .zip(&keep_sub)
                .filter(|((u, v), k)| **k && nodes.contains(u) && nodes.contains(v))
                .map(|((u, v), _)| {
                    let pos = |x: usize| nodes.iter().position(|&y| y == x).unwrap();
                    (pos(*u), pos(*v))
                });
            let sub = Graph::from_edges(nodes.len(), sub_edges).unwrap();
            (g, sub)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn subgraphs_never_need_more_firefighters((g, sub) in graph_and_subgraph()) {
        let big = fflab_core::ffn(&g, Variant::Firefighter).unwrap().ffn;
        let small = fflab_core::ffn(&sub, Variant::Firefighter).unwrap().ffn;
        prop_assert!(small <= big);
    }

    #[test]
    fn every_solver_witness_verifies((g, _) in graph_and_subgraph()) {
        for variant in VARIANTS {
            let r = fflab_core::ffn(&g, variant).unwrap();
            let w = r.witness.unwrap();
            prop_assert!(w.budget() == r.ffn);
            prop_assert!(is_winning(&g, &w, variant));
            prop_assert_eq!(Some(w.len()), r.t_m);
        }
    }
}
