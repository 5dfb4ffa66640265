use fflab_core::gadgets::*;
use fflab_core::oracle::Oracle;
use fflab_core::{Graph, NodeSet, Variant};
use proptest::prelude::*;

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=5).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let k = pairs.len();
        proptest::collection::vec(any::<bool>(), k).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, k)| **k).map(|(e, _)| *e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn valid_params() -> impl Strategy<Value = (usize, usize)> {
    (1usize..4).prop_flat_map(|beta| (beta + 3..=2 * beta + 2, Just(beta)))
}

#[test]
fn fixed_gadgets_pass_the_block_audit() {
    let p = GadgetParams::default();
    let mut gadgets = vec![
        g_family(2, p).unwrap(),
        g_family(3, p).unwrap(),
        time_gadget(&Graph::new(2), 2, 1).unwrap(),
        time_gadget(&Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap(), 3, 2).unwrap(),
        path_clique(3).unwrap(),
    ];
    for m in 2..=5 {
        gadgets.push(aux_h(m, p).unwrap());
    }
    for g in &gadgets {
        g.audit().unwrap();
    }
    assert_eq!(g_family(2, p).unwrap().graph.n(), 14);
    assert_eq!(time_gadget(&Graph::new(2), 2, 1).unwrap().graph.n(), 30);
    assert_eq!(hunter_transform(&fflab_core::make_family(fflab_core::Family::Path(3)).unwrap()).n(), 11);
}

#[test]
fn aux_h_forces_full_commitment() {
    let p = GadgetParams::default();
    for m in 2..=4 {
        let h = aux_h(m, p).unwrap();
        let k = h.label("K").clone();
        assert_eq!(fflab_core::ffn(&h.graph, Variant::Firefighter).unwrap().ffn, m);
        let oracle = Oracle::new(&h.graph, m, Variant::Firefighter).unwrap();
        let t = oracle.shortest_t().unwrap();
        assert!(t >= p.alpha, "m={m}: T={t}");
        // Walk every shortest strategy from V; none may leave part of K unattended.
        let full = NodeSet::full(h.graph.n());
        let mut frontier = vec![full.clone()];
        let mut seen = std::collections::BTreeSet::new();
        let mut full_steps = 0usize;
        while let Some(b) = frontier.pop() {
            if !seen.insert(b.to_vec()) {
                continue;
            }
            for (f, next) in oracle.optimal_moves(&b) {
                if !next.is_empty() {
                    assert!(k.is_subset(&f), "m={m}: move {f:?} from {b:?} skips the clique");
                }
                if f.len() == m {
                    full_steps += 1;
                }
                assert_ne!(next, full);
                frontier.push(next);
            }
        }
        assert!(full_steps >= p.alpha);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn aux_h_size(m in 2usize..8, (alpha, beta) in valid_params()) {
        let p = GadgetParams::new(alpha, beta).unwrap();
        let h = aux_h(m, p).unwrap();
        prop_assert_eq!(h.graph.n(), m - 1 + alpha);
        prop_assert!(h.audit().is_ok());
    }

    #[test]
    fn g_of_size(m in 2usize..5, (alpha, beta) in valid_params(), x in small_graph()) {
        let p = GadgetParams::new(alpha, beta).unwrap();
        let g = g_of(m, &x, p).unwrap();
        prop_assert_eq!(g.graph.n(), x.n() + 1 + m * (m - 1 + alpha + beta));
        prop_assert!(g.audit().is_ok());
        prop_assert_eq!(g.graph.induced_subgraph(&g.label("X").to_vec()), x);
    }

    #[test]
    fn g_family_size_formula(m in 2usize..4, beta in 1usize..3) {
        let p = GadgetParams::new(2 * beta + 2, beta).unwrap();
        prop_assert_eq!(g_family(m, p).unwrap().graph.n(), g_family_size(m, p));
    }

    #[test]
    fn time_gadget_size(g in small_graph(), t in 2usize..5, m in 1usize..4) {
        let h = time_gadget(&g, t, m).unwrap();
        prop_assert_eq!(h.graph.n(), 2 * g.n() + 8 * m + (2 * t + 2) * (t + 1) * m);
        prop_assert!(h.audit().is_ok());
    }

    #[test]
    fn hunter_transform_is_bipartite_with_expected_size(g in small_graph()) {
        let t = hunter_transform_labeled(&g);
        prop_assert_eq!(t.graph.n(), g.n() + g.edge_count() * (g.n() + 1));
        let (left, right) = t.graph.bipartition().expect("bipartite");
        prop_assert_eq!(left.len() + right.len(), t.graph.n());
        for (u, v) in t.graph.edges() {
            prop_assert!(t.label("V").contains(u) != t.label("V").contains(v));
        }
    }

    #[test]
    fn three_partition_tree_size(
        triple in proptest::array::uniform3(1usize..5),
        k in 1usize..3,
        shape in prop_oneof![Just(TreeShape::Star), Just(TreeShape::Path), Just(TreeShape::Arbitrary)],
    ) {
        let a: Vec<usize> = (0..k).flat_map(|_| triple).collect();
        let m: usize = a.iter().sum();
        let g = three_partition_tree(&a, shape).unwrap();
        prop_assert_eq!(g.graph.n(), 1 + m + a.len() * m);
        prop_assert!(g.graph.is_tree());
    }
}
