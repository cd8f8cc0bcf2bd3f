use linkless::g6;
use linkless::linking::{
    build_diagram, enumerate_disjoint_cycle_pairs, is_nil_linking, linking_report, linking_report_exhaustive, lk2,
};
use linkless::minors::{
    has_k6_minor_any_component, has_minor, is_il_minor, is_isomorphic, triangle_y_move, y_triangle_move,
};
use linkless::Graph;
use proptest::prelude::*;

/// Random graph on `lo..=hi` vertices; each pair is an edge with a drawn
/// probability, so sparse and dense graphs both appear.
fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 0.0f64..=1.0).prop_flat_map(|(n, p)| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(p.clamp(0.01, 0.99)), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_and_perm(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(lo, hi).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn g6_round_trip(g in graph(1, 32)) {
        let bytes = g6::encode(&g);
        prop_assert_eq!(g6::decode(&bytes).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(1, 32)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.order() * (g.order() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn relabelling_preserves_everything((g, perm) in graph_and_perm(1, 9)) {
        let h = g.permuted(&perm);
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(g.degree_profile(), h.degree_profile());
        prop_assert_eq!(is_nil_linking(&g), is_nil_linking(&h));
        prop_assert_eq!(has_k6_minor_any_component(&g), has_k6_minor_any_component(&h));
    }

    #[test]
    fn moves_are_inverse(g in graph(3, 12)) {
        for t in g.triangles() {
            let y = triangle_y_move(&g, t).unwrap();
            prop_assert_eq!(y.order(), g.order() + 1);
            prop_assert_eq!(y_triangle_move(&y, g.order()).unwrap(), g);
        }
    }

    #[test]
    fn linking_is_minor_monotone(g in graph(6, 9)) {
        let nil = is_nil_linking(&g);
        for e in g.edges().take(4) {
            let smaller = g.without_edge(e.u, e.v).unwrap();
            if nil {
                prop_assert!(is_nil_linking(&smaller));
            }
        }
        for e in g.non_edges().take(4) {
            let larger = g.with_edge(e.u, e.v).unwrap();
            if !nil {
                prop_assert!(!is_nil_linking(&larger));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn deciders_agree(g in graph(6, 9)) {
        prop_assert_eq!(is_nil_linking(&g), !is_il_minor(&g));
    }

    #[test]
    fn reduced_and_exhaustive_systems_agree(g in graph(6, 8)) {
        prop_assert_eq!(linking_report(&g).nil, linking_report_exhaustive(&g).nil);
    }

    #[test]
    fn k6_search_matches_general_minor_test(g in graph(6, 9)) {
        let k6 = Graph::complete(6).unwrap();
        prop_assert_eq!(has_k6_minor_any_component(&g), has_minor(&g, &k6));
    }

    #[test]
    fn lk2_is_symmetric(g in graph(6, 8)) {
        let d = build_diagram(&g);
        for pair in enumerate_disjoint_cycle_pairs(&g).take(64) {
            let there = lk2(&d, &pair.c1, &pair.c2).unwrap();
            let back = lk2(&d, &pair.c2, &pair.c1).unwrap();
            prop_assert_eq!(there, back);
            prop_assert_eq!(there, pair.lk2);
        }
    }
}
