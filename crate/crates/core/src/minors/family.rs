//! Triangle-star moves and the Petersen family they generate from `K6`.

use std::collections::VecDeque;
use std::sync::OnceLock;

use super::iso::{is_isomorphic, IsoSet};
use super::MinorError;
use crate::g6;
use crate::graph::{bits, Graph};

/// Replaces the triangle `t` by a new vertex (index `n`) joined to its corners.
pub fn triangle_y_move(g: &Graph, t: [usize; 3]) -> Result<Graph, MinorError> {
    let [a, b, c] = t;
    if a == b || b == c || a == c || !g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c) {
        return Err(MinorError::NotATriangle(t));
    }
    let stripped = g
        .without_edge(a, b)
        .and_then(|h| h.without_edge(b, c))
        .and_then(|h| h.without_edge(a, c))?;
    Ok(stripped.with_new_vertex(1 << a | 1 << b | 1 << c)?)
}

/// Deletes the degree-3 vertex `v` and joins its neighbours pairwise.
///
/// Pairs that are already adjacent stay single edges.
pub fn y_triangle_move(g: &Graph, v: usize) -> Result<Graph, MinorError> {
    if v >= g.order() || g.degree(v) != 3 {
        return Err(MinorError::NotDegreeThree(v));
    }
    let nb: Vec<usize> = bits(g.neighbors(v)).collect();
    let mut h = *g;
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        h = h.with_edge(nb[i], nb[j])?;
    }
    Ok(h.without_vertex(v)?)
}

/// A degree-3 vertex whose neighbours are pairwise non-adjacent, so the
/// move keeps the edge count.
fn clean_y_vertex(g: &Graph, v: usize) -> bool {
    let nb = g.neighbors(v);
    g.degree(v) == 3 && bits(nb).all(|w| g.neighbors(w) & nb == 0)
}

/// Every graph one move away from `g`: all triangle-to-star moves, and
/// star-to-triangle moves at degree-3 vertices with independent neighbourhoods.
pub fn move_neighbors(g: &Graph) -> Vec<Graph> {
    let mut out = Vec::new();
    for t in g.triangles() {
        if let Ok(h) = triangle_y_move(g, t) {
            out.push(h);
        }
    }
    for v in 0..g.order() {
        if clean_y_vertex(g, v) {
            out.push(y_triangle_move(g, v).expect("degree checked"));
        }
    }
    out
}

/// The seven forbidden minors for linkless embedding.
#[derive(Debug, Clone)]
pub struct PetersenFamily {
    members: Vec<Graph>,
    names: Vec<&'static str>,
}

impl PetersenFamily {
    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn name(&self, index: usize) -> &'static str {
        self.names[index]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Graph)> {
        self.names.iter().copied().zip(self.members.iter())
    }

    /// Index of the member isomorphic to `g`.
    pub fn position(&self, g: &Graph) -> Option<usize> {
        self.members.iter().position(|m| is_isomorphic(m, g))
    }
}

fn member_name(g: &Graph) -> &'static str {
    let k331 = Graph::complete_multipartite(&[3, 3, 1]).unwrap();
    let k44e = Graph::complete_bipartite(4, 4).unwrap().without_edge(0, 4).unwrap();
    if g.order() == 6 {
        "K6"
    } else if is_isomorphic(g, &k331) {
        "K3,3,1"
    } else if is_isomorphic(g, &k44e) {
        "K4,4-e"
    } else if is_isomorphic(g, &Graph::petersen()) {
        "Petersen"
    } else {
        match g.order() {
            7 => "G7",
            8 => "G8",
            9 => "G9",
            _ => "unnamed",
        }
    }
}

/// Breadth-first closure of `{K6}` under [`move_neighbors`], deduplicated by
/// isomorphism and sorted by (order, graph6 bytes).
pub fn generate_petersen_family() -> PetersenFamily {
    let mut seen = IsoSet::new();
    let mut queue = VecDeque::new();
    let k6 = Graph::complete(6).unwrap();
    seen.insert(k6);
    queue.push_back(k6);
    while let Some(g) = queue.pop_front() {
        for h in move_neighbors(&g) {
            if seen.insert(h) {
                queue.push_back(h);
            }
        }
    }
    let mut members = seen.into_graphs();
    members.sort_by_cached_key(|g| (g.order(), g6::encode(g)));
    let names = members.iter().map(member_name).collect();
    PetersenFamily { members, names }
}

/// Shared, lazily built family.
pub fn petersen_family() -> &'static PetersenFamily {
    static FAMILY: OnceLock<PetersenFamily> = OnceLock::new();
    FAMILY.get_or_init(generate_petersen_family)
}
