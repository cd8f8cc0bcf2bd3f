//! Minor testing and the minor-based intrinsic linking decision.

mod branch;
mod family;
mod iso;
mod k6;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use branch::{find_minor, has_minor, BranchDecomposition};
pub use family::{
    generate_petersen_family, move_neighbors, petersen_family, triangle_y_move, y_triangle_move, PetersenFamily,
};
pub use iso::{find_isomorphism, is_isomorphic, refined_colors, Fingerprint, IsoSet};
pub use k6::{has_k6_minor, has_k6_minor_any_component, has_k6_minor_any_component_by, k6_minor_search, K6Search};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error("vertices {0:?} do not form a triangle")]
    NotATriangle([usize; 3]),
    #[error("vertex {0} does not have degree 3")]
    NotDegreeThree(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("search exceeded its time budget")]
    TimedOut,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Petersen-family member found as a minor, tried in family order, one
/// connected component at a time.
pub fn petersen_minor(g: &Graph) -> Option<usize> {
    let family = petersen_family();
    let parts: Vec<Graph> = g
        .components()
        .into_iter()
        .filter(|c| c.count_ones() >= 6)
        .map(|c| g.induced(c).expect("component fits"))
        .collect();
    family
        .members()
        .iter()
        .position(|m| parts.iter().any(|p| has_minor(p, m)))
}

/// Intrinsically linked iff some Petersen-family graph is a minor.
pub fn is_il_minor(g: &Graph) -> bool {
    petersen_minor(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33() -> Graph {
        Graph::complete_bipartite(3, 3).unwrap()
    }

    #[test]
    fn trivial_minors() {
        let k1 = Graph::empty(1).unwrap();
        assert!(has_minor(&Graph::cycle(5).unwrap(), &k1));
        assert!(!has_minor(&Graph::complete(5).unwrap(), &Graph::complete(6).unwrap()));
        assert!(has_minor(&Graph::complete(5).unwrap(), &Graph::complete(5).unwrap()));
        assert!(has_minor(&Graph::cycle(7).unwrap(), &Graph::cycle(3).unwrap()));
        assert!(!has_minor(&Graph::path(7).unwrap(), &Graph::cycle(3).unwrap()));
    }

    #[test]
    fn kuratowski_minors() {
        let p = Graph::petersen();
        let w = find_minor(&p, &k33()).expect("Petersen has a K3,3 minor");
        assert!(w.is_model_of(&p, &k33()));
        let w = find_minor(&p, &Graph::complete(5).unwrap()).expect("and a K5 minor");
        assert!(w.is_model_of(&p, &Graph::complete(5).unwrap()));
        assert!(!has_minor(&Graph::octahedron(), &Graph::complete(5).unwrap()));
        assert!(!has_minor(&Graph::octahedron(), &k33()));
        assert!(!has_minor(&Graph::icosahedron(), &Graph::complete(5).unwrap()));
    }

    #[test]
    fn k6_engines_agree_on_family() {
        let k6 = Graph::complete(6).unwrap();
        for m in petersen_family().members() {
            let expected = m.order() == 6;
            assert_eq!(has_k6_minor(m).unwrap(), expected);
            assert_eq!(has_minor(m, &k6), expected);
        }
    }

    #[test]
    fn il_by_minors() {
        assert!(is_il_minor(&Graph::complete(6).unwrap()));
        assert!(is_il_minor(&Graph::petersen()));
        assert!(!is_il_minor(&Graph::complete(5).unwrap()));
        assert!(!is_il_minor(&Graph::icosahedron()));
        let k44e = Graph::complete_bipartite(4, 4).unwrap().without_edge(0, 4).unwrap();
        assert!(petersen_family().position(&k44e).is_some());
        assert!(is_il_minor(&k44e));
        // K4,4 minus a perfect matching is the cube, which is planar
        let mut cube = Graph::complete_bipartite(4, 4).unwrap();
        for i in 0..4 {
            cube = cube.without_edge(i, 4 + i).unwrap();
        }
        assert!(!is_il_minor(&cube));
        let padded = Graph::petersen().disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        assert!(is_il_minor(&padded));
    }

    #[test]
    fn witnesses_are_models() {
        let g = Graph::complete(7).unwrap().without_edge(0, 1).unwrap();
        for m in petersen_family().members() {
            if let Some(w) = find_minor(&g, m) {
                assert!(w.is_model_of(&g, m));
            }
        }
    }
}
