//! Planarity through forbidden minors, and apex classification.

use thiserror::Error;

use crate::graph::{bits, Graph};
use crate::minors::has_minor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarityError {
    #[error("maximal planarity needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("apex criteria disagree: apex={apex}, full-degree vertex={full_degree}, cone over maximal planar={cone}")]
    ApexCriteriaDisagree { apex: bool, full_degree: bool, cone: bool },
}

/// Deletes vertices of degree at most 1 and suppresses vertices of degree 2
/// until neither applies. Both steps preserve planarity either way.
fn reduce(g: &Graph) -> Graph {
    let n = g.order();
    let mut adj: Vec<u32> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut alive = g.vertex_set();
    loop {
        let mut changed = false;
        for v in bits(alive) {
            match adj[v].count_ones() {
                0 | 1 => {
                    for w in bits(adj[v]) {
                        adj[w] &= !(1 << v);
                    }
                    adj[v] = 0;
                    alive &= !(1 << v);
                    changed = true;
                }
                2 => {
                    let a = adj[v].trailing_zeros() as usize;
                    let b = 31 - adj[v].leading_zeros() as usize;
                    adj[a] = (adj[a] & !(1 << v)) | 1 << b;
                    adj[b] = (adj[b] & !(1 << v)) | 1 << a;
                    adj[v] = 0;
                    alive &= !(1 << v);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    if alive == 0 {
        return Graph::empty(1).expect("one vertex fits");
    }
    let edges: Vec<(usize, usize)> = bits(alive)
        .flat_map(|u| bits(adj[u] & !((2u32 << u) - 1)).map(move |v| (u, v)))
        .collect();
    let full = Graph::from_edges(n, &edges).expect("edges stay in range");
    full.induced(alive).expect("alive set is non-empty")
}

/// True iff `g` has no `K5` and no `K3,3` minor.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return false;
    }
    let r = reduce(g);
    let n = r.order();
    if n < 5 {
        return true;
    }
    if r.edge_count() > 3 * n - 6 {
        return false;
    }
    let k5 = Graph::complete(5).expect("K5 fits");
    let k33 = Graph::complete_bipartite(3, 3).expect("K3,3 fits");
    !has_minor(&r, &k5) && !has_minor(&r, &k33)
}

/// Planar with the maximum `3n - 6` edges.
pub fn is_maximal_planar(g: &Graph) -> Result<bool, PlanarityError> {
    let n = g.order();
    if n < 3 {
        return Err(PlanarityError::TooSmall(n));
    }
    Ok(g.edge_count() == 3 * n - 6 && is_planar(g))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApexReport {
    pub is_apex: bool,
    /// First vertex, in index order, whose deletion leaves a planar graph.
    pub witness: Option<usize>,
}

pub fn apex_report(g: &Graph) -> ApexReport {
    if is_planar(g) {
        // any single deletion of a planar graph stays planar
        return ApexReport {
            is_apex: true,
            witness: Some(0),
        };
    }
    let witness = (0..g.order()).find(|&v| match g.without_vertex(v) {
        Ok(h) => is_planar(&h),
        Err(_) => true,
    });
    ApexReport {
        is_apex: witness.is_some(),
        witness,
    }
}

pub fn is_apex(g: &Graph) -> bool {
    apex_report(g).is_apex
}

/// A pair of vertices whose deletion leaves a planar graph, if any.
pub fn two_apex(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    if n <= 2 {
        return (n == 2).then_some((0, 1));
    }
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| {
        let rest = g.vertex_set() & !(1 << u) & !(1 << v);
        is_planar(&g.induced(rest).expect("rest is non-empty"))
    })
}

/// Some vertex adjacent to all others whose deletion leaves a maximal
/// planar graph.
pub fn is_cone_over_maximal_planar(g: &Graph) -> bool {
    let n = g.order();
    n >= 4
        && (0..n)
            .any(|v| g.degree(v) == n - 1 && is_maximal_planar(&g.without_vertex(v).expect("n >= 4")).unwrap_or(false))
}

/// Apex status of a maxnIL graph, read off its maximum degree.
///
/// With `verify` set, also checks that apex, having a full-degree vertex,
/// and being a cone over a maximal planar graph all agree.
pub fn classify_maxnil_apex(g: &Graph, verify: bool) -> Result<bool, PlanarityError> {
    let full_degree = g.order() > 0 && g.max_degree() == g.order() - 1;
    if verify {
        let apex = is_apex(g);
        let cone = is_cone_over_maximal_planar(g);
        if apex != full_degree || cone != full_degree {
            return Err(PlanarityError::ApexCriteriaDisagree {
                apex,
                full_degree,
                cone,
            });
        }
    }
    Ok(full_degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kuratowski_basics() {
        assert!(!is_planar(&Graph::complete(5).unwrap()));
        assert!(is_planar(&Graph::complete(4).unwrap()));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3).unwrap()));
        assert!(!is_planar(&Graph::petersen()));
        assert!(is_planar(&Graph::icosahedron()));
        assert!(is_planar(&Graph::cycle(9).unwrap()));
    }

    #[test]
    fn subdivisions_reduce_away() {
        // K3,3 with one edge subdivided twice
        let base = Graph::complete_bipartite(3, 3).unwrap().without_edge(0, 3).unwrap();
        let mut edges: Vec<(usize, usize)> = base.edges().map(|e| (e.u, e.v)).collect();
        edges.extend([(0, 6), (6, 7), (7, 3), (7, 8)]);
        let g = Graph::from_edges(9, &edges).unwrap();
        assert!(!is_planar(&g));
        assert!(is_planar(&g.without_edge(6, 7).unwrap()));
    }

    #[test]
    fn maximal_planar() {
        assert_eq!(is_maximal_planar(&Graph::complete(4).unwrap()), Ok(true));
        assert_eq!(is_maximal_planar(&Graph::cycle(5).unwrap()), Ok(false));
        assert_eq!(is_maximal_planar(&Graph::octahedron()), Ok(true));
        assert_eq!(
            is_maximal_planar(&Graph::complete(2).unwrap()),
            Err(PlanarityError::TooSmall(2))
        );
    }

    #[test]
    fn apex() {
        let r = apex_report(&Graph::complete(5).unwrap());
        assert!(r.is_apex);
        assert!(!is_apex(&Graph::complete(7).unwrap()));
        assert_eq!(r.witness, Some(0));
        assert_eq!(apex_report(&Graph::complete(6).unwrap()).witness, None);
        assert_eq!(two_apex(&Graph::complete(6).unwrap()), Some((0, 1)));
        assert!(two_apex(&Graph::complete(7).unwrap()).is_none());
    }

    #[test]
    fn maxnil_apex_classification() {
        let k6_minus = Graph::complete(6).unwrap().without_edge(0, 1).unwrap();
        assert_eq!(k6_minus.degree(2), 5);
        assert_eq!(classify_maxnil_apex(&k6_minus, true), Ok(true));
        let cone = Graph::icosahedron().cone().unwrap();
        assert_eq!(classify_maxnil_apex(&cone, true), Ok(true));
        // K7 is not maxnIL, and the criteria disagree on it
        assert!(matches!(
            classify_maxnil_apex(&Graph::complete(7).unwrap(), true),
            Err(PlanarityError::ApexCriteriaDisagree { .. })
        ));
    }
}
