mod common;

use fflab_core::bounds::*;
use fflab_core::engine::is_winning;
use fflab_core::{Graph, Variant};

fn exact(g: &Graph) -> usize {
    fflab_core::ffn(g, Variant::Firefighter).unwrap().ffn
}

fn open_nb_count(g: &Graph, w: &fflab_core::NodeSet) -> usize {
    g.neighborhood(w).len()
}

#[test]
fn lower_and_upper_bounds_bracket_exact_value() {
    for g in common::all_graphs(7) {
        let f = exact(&g);
        assert!(lb_min_degree(&g) <= f);
        assert!(lb_edge_count(&g) <= f);
        assert!(lb_characterization(&g) <= f);
        let (lb, cert) = lb_expansion(&g).unwrap();
        assert!(lb <= f && (lb == 0 || cert.verify(&g)), "expansion on {:?}", g.edges());
        let (lb, cert) = lb_subgraph_expansion(&g, usize::MAX);
        assert!(lb <= f && (lb == 0 || cert.verify(&g)), "subgraph on {:?}", g.edges());
        let ub = ub_constructive(&g, &UbHints::default()).unwrap();
        assert!(ub.m >= f, "upper {} < {f} via {} on {:?}", ub.m, ub.rule, g.edges());
        assert!(is_winning(&g, &ub.strategy, Variant::Firefighter));
        assert!(ub.strategy.budget() <= ub.m);
    }
}

#[test]
fn expansion_criterion_implies_lower_bound() {
    for g in common::all_graphs(7) {
        let f = exact(&g);
        for m in 1..=g.n() {
            for i in 1..=g.n() + 1 - m {
                if expansion_holds(&g, i, m).unwrap() {
                    assert!(f >= m, "i={i} m={m} on {:?}", g.edges());
                }
            }
        }
    }
}

#[test]
fn limited_neighbours_solvers_agree() {
    for g in common::all_graphs(7) {
        for m in 0..=3 {
            for k in 0..=g.n() {
                let a = limited_neighbours_bruteforce(&g, m, k).unwrap();
                let b = limited_neighbours_bounded_m(&g, m, k).unwrap();
                assert_eq!(a.is_some(), b.is_some(), "m={m} k={k} on {:?}", g.edges());
                for w in a.iter().chain(b.iter()) {
                    assert_eq!(w.len(), k);
                    assert!(open_nb_count(&g, w) < m);
                }
            }
        }
    }
}

#[test]
fn characterization_matches_solver() {
    for g in common::all_graphs(7) {
        let f = exact(&g);
        match char_small_ffn(&g) {
            Some(v) => assert_eq!(v, f, "{:?}", g.edges()),
            None => assert!(g.n() == 0 || f >= 3, "{:?}", g.edges()),
        }
    }
}

#[test]
fn alternating_flips_bound() {
    for d in (1..=21).step_by(2) {
        assert!(check_alternating_flips(d, 0));
        assert_eq!(flips(alternating_sum(d)), d);
        for x in 1..=1024i64 {
            assert!(check_alternating_flips(d, x), "d={d} x={x}");
            assert!(check_alternating_flips(d, -x), "d={d} x=-{x}");
        }
    }
}

#[test]
fn conjecture_forward_direction_on_small_connected_graphs() {
    for g in common::connected_graphs(6) {
        let r = check_conjecture(&g, exact(&g)).unwrap();
        assert!(r.forward_ok, "{:?}", g.edges());
        if let Some(c) = &r.certificate {
            assert!(c.verify(&g));
        }
    }
}

#[test]
fn path_decomposition_hint_gives_width_plus_one() {
    let c6 = fflab_core::make_family(fflab_core::Family::Cycle(6)).unwrap();
    let bags = vec![vec![0, 1, 5], vec![1, 2, 5], vec![2, 4, 5], vec![2, 3, 4]];
    let hints = UbHints {
        path_decomposition: Some(bags),
        removal: None,
    };
    let ub = ub_constructive(&c6, &hints).unwrap();
    assert_eq!(ub.m, 3);
    assert!(is_winning(&c6, &ub.strategy, Variant::Firefighter));
}
