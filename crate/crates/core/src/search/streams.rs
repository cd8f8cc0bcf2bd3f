//! Constructive sources of maxnIL graphs and per-graph verdicts.

use serde::Serialize;

use super::SearchError;
use crate::graph::Graph;
use crate::linking::{is_maxnil, is_nil_linking};
use crate::minors::{has_k6_minor_any_component, is_il_minor, IsoSet};
use crate::planarity::is_maximal_planar;

/// Cones over maximal planar graphs, deduplicated by isomorphism.
///
/// Fails on the first input that is not maximal planar, reporting its
/// 0-based position.
pub fn apex_maxnil_from_triangulations<I>(triangulations: I) -> Result<Vec<Graph>, SearchError>
where
    I: IntoIterator<Item = Graph>,
{
    let mut seen = IsoSet::new();
    for (index, t) in triangulations.into_iter().enumerate() {
        if !is_maximal_planar(&t).unwrap_or(false) {
            return Err(SearchError::NotMaximalPlanar { index });
        }
        seen.insert(t.cone()?);
    }
    Ok(seen.into_graphs())
}

/// Result of gluing a degree-3 vertex onto every triangle.
#[derive(Debug, Clone)]
pub struct Extensions {
    /// One per (input graph, triangle), before deduplication.
    pub raw: usize,
    /// Pairwise non-isomorphic extensions.
    pub graphs: Vec<Graph>,
}

pub fn degree3_extensions(graphs: &[Graph]) -> Result<Extensions, SearchError> {
    let mut raw = 0;
    let mut seen = IsoSet::new();
    for g in graphs {
        for [a, b, c] in g.triangles() {
            raw += 1;
            seen.insert(g.with_new_vertex(1 << a | 1 << b | 1 << c)?);
        }
    }
    Ok(Extensions {
        raw,
        graphs: seen.into_graphs(),
    })
}

/// `K6`-minor-free and maxnIL. The minor test runs first as a cheap kill.
pub fn is_maxnil_candidate(g: &Graph) -> bool {
    !has_k6_minor_any_component(g) && is_maxnil(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComplementVerdict {
    pub il_by_minors: bool,
    pub il_by_linking: bool,
    pub k6_minor_free: bool,
}

pub fn complement_verdict(g: &Graph) -> ComplementVerdict {
    let c = g.complement();
    ComplementVerdict {
        il_by_minors: is_il_minor(&c),
        il_by_linking: !is_nil_linking(&c),
        k6_minor_free: !has_k6_minor_any_component(&c),
    }
}

pub fn complement_verdicts(graphs: &[Graph]) -> Vec<ComplementVerdict> {
    graphs.iter().map(complement_verdict).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedron_cone() {
        let out = apex_maxnil_from_triangulations([Graph::octahedron()]).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].order(), 7);
        assert!(is_maxnil_candidate(&out[0]));
    }

    #[test]
    fn rejects_non_triangulation() {
        let err = apex_maxnil_from_triangulations([Graph::complete(4).unwrap(), Graph::cycle(5).unwrap()]);
        assert_eq!(err.unwrap_err(), SearchError::NotMaximalPlanar { index: 1 });
    }

    #[test]
    fn k5_extensions_are_not_maxnil() {
        let ext = degree3_extensions(&[Graph::complete(5).unwrap()]).unwrap();
        assert_eq!(ext.raw, 10);
        assert_eq!(ext.graphs.len(), 1);
        assert!(ext.graphs.iter().all(|g| !is_maxnil_candidate(g)));
    }

    #[test]
    fn complement_of_k6_minus() {
        let g = Graph::complete(6).unwrap().without_edge(0, 1).unwrap();
        let v = complement_verdict(&g);
        assert!(!v.il_by_minors && !v.il_by_linking && v.k6_minor_free);
    }
}
