//! Structural facts about the enumerated maxnIL graphs.

use std::fs;
use std::path::{Path, PathBuf};

use linkless::g6::G6Reader;
use linkless::minors::{has_k6_minor_any_component, is_isomorphic};
use linkless::planarity::{apex_report, two_apex};
use linkless::search::{apex_maxnil_from_triangulations, complement_verdict, degree3_extensions, is_maxnil_candidate};
use linkless::Graph;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn load(name: &str) -> Vec<Graph> {
    let bytes = fs::read(data(name)).unwrap();
    G6Reader::new(&bytes[..]).map(|r| r.unwrap().graph.unwrap()).collect()
}

#[test]
fn order10_survivors_are_triangular_3_connected_and_2_apex() {
    let graphs = load("order10_maxnil.g6");
    assert_eq!(graphs.len(), 107);
    for g in &graphs {
        assert!(g.is_triangular());
        assert!(g.vertex_connectivity_at_least(3));
        assert!(two_apex(g).is_some());
        assert!((20..=30).contains(&g.edge_count()));
        if apex_report(g).is_apex {
            assert_eq!(g.edge_count(), 30);
        }
    }
}

#[test]
fn order10_list_is_sorted_for_output() {
    let graphs = load("order10_maxnil.g6");
    let keys: Vec<_> = graphs
        .iter()
        .map(|g| (g.edge_count(), linkless::g6::encode(g)))
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn order10_apex_graphs_are_the_triangulation_cones() {
    let cones = apex_maxnil_from_triangulations(load("triangulations_n9.g6")).unwrap();
    let apex: Vec<Graph> = load("order10_maxnil.g6")
        .into_iter()
        .filter(|g| apex_report(g).is_apex)
        .collect();
    assert_eq!(cones.len(), apex.len());
    assert!(cones.iter().all(|c| apex.iter().any(|a| is_isomorphic(a, c))));
}

/// Among the constructed order-11 maxnIL graphs, some complement has no
/// `K6` minor, so the pair is simultaneously `K6`-minor-free.
#[test]
fn some_order11_complement_is_k6_minor_free() {
    let order10 = load("order10_maxnil.g6");
    let ext = degree3_extensions(&order10).unwrap();
    let found = ext
        .graphs
        .iter()
        .filter(|g| is_maxnil_candidate(g))
        .find(|g| complement_verdict(g).k6_minor_free);
    let g = found.expect("a K6-minor-free complement");
    assert!(!has_k6_minor_any_component(g));
}
