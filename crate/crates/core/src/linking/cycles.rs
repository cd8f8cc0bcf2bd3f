//! Simple cycles, induced cycles and disjoint cycle pairs.
//!
//! Every cycle is listed once: the DFS is rooted at the cycle's minimum
//! vertex, stays above it, and keeps only the direction whose second
//! vertex is smaller than its last.

use super::diagram::BookDiagram;
use super::LinkingError;
use crate::graph::{bits, Edge, Graph, VertexSet};

/// A simple cycle stored in canonical rotation and direction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
    mask: VertexSet,
}

impl Cycle {
    /// Builds a cycle from its vertex sequence, normalising rotation and
    /// direction. Adjacency in any particular graph is not checked.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self, LinkingError> {
        if vertices.len() < 3 {
            return Err(LinkingError::NotACycle(vertices));
        }
        let mut mask: VertexSet = 0;
        for &v in &vertices {
            if v >= crate::graph::MAX_VERTICES || mask >> v & 1 == 1 {
                return Err(LinkingError::NotACycle(vertices));
            }
            mask |= 1 << v;
        }
        let start = (0..vertices.len()).min_by_key(|&i| vertices[i]).unwrap();
        vertices.rotate_left(start);
        if vertices[1] > vertices[vertices.len() - 1] {
            vertices[1..].reverse();
        }
        Ok(Cycle { vertices, mask })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn mask(&self) -> VertexSet {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| Edge::new(self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// True iff every edge of the cycle is an edge of `g`.
    pub fn lies_in(&self, g: &Graph) -> bool {
        self.edges().all(|e| g.has_edge(e.u, e.v))
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    induced: bool,
    path: Vec<usize>,
    out: Vec<Cycle>,
}

impl Dfs<'_> {
    fn extend(&mut self, allowed: VertexSet, on_path: VertexSet) {
        let root = self.path[0];
        let last = *self.path.last().unwrap();
        let k = self.path.len();
        for w in bits(self.g.neighbors(last) & allowed & !on_path) {
            let nw = self.g.neighbors(w);
            if self.induced && k >= 2 {
                // w may touch only `last` and, when closing, the root
                let interior = on_path & !(1 << root) & !(1 << last);
                if nw & interior != 0 {
                    continue;
                }
            }
            let closes = k >= 2 && nw >> root & 1 == 1;
            if closes && self.path[1] < w {
                let mut vertices = self.path.clone();
                vertices.push(w);
                self.out.push(Cycle {
                    vertices,
                    mask: on_path | 1 << w,
                });
            }
            if self.induced && closes {
                continue;
            }
            self.path.push(w);
            self.extend(allowed, on_path | 1 << w);
            self.path.pop();
        }
    }
}

fn enumerate(g: &Graph, within: VertexSet, induced: bool) -> Vec<Cycle> {
    let mut dfs = Dfs {
        g,
        induced,
        path: Vec::new(),
        out: Vec::new(),
    };
    let within = within & g.vertex_set();
    for root in bits(within) {
        let above = within & !((2u32 << root) - 1);
        dfs.path.push(root);
        dfs.extend(above, 1 << root);
        dfs.path.pop();
    }
    dfs.out
}

/// All simple cycles of `g`, grouped by minimum vertex.
pub fn simple_cycles(g: &Graph) -> Vec<Cycle> {
    enumerate(g, g.vertex_set(), false)
}

/// All simple cycles of the subgraph induced on `within`.
pub fn simple_cycles_within(g: &Graph, within: VertexSet) -> Vec<Cycle> {
    enumerate(g, within, false)
}

/// Chordless cycles of `g`.
pub fn induced_cycles(g: &Graph) -> Vec<Cycle> {
    enumerate(g, g.vertex_set(), true)
}

/// Two vertex-disjoint cycles and their mod-2 linking number in the book
/// diagram. `c1` has the smaller minimum vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePair {
    pub c1: Cycle,
    pub c2: Cycle,
    pub lk2: u8,
}

/// Streams every unordered pair of vertex-disjoint simple cycles once.
pub struct DisjointCyclePairs {
    diagram: BookDiagram,
    cycles: Vec<Cycle>,
    edges: Vec<Vec<usize>>,
    i: usize,
    j: usize,
}

impl Iterator for DisjointCyclePairs {
    type Item = CyclePair;

    fn next(&mut self) -> Option<CyclePair> {
        while self.i < self.cycles.len() {
            while self.j < self.cycles.len() {
                let j = self.j;
                self.j += 1;
                if self.cycles[self.i].mask() & self.cycles[j].mask() == 0 {
                    let lk2 = self.diagram.over_parity(&self.edges[self.i], &self.edges[j]);
                    return Some(CyclePair {
                        c1: self.cycles[self.i].clone(),
                        c2: self.cycles[j].clone(),
                        lk2: lk2 as u8,
                    });
                }
            }
            self.i += 1;
            self.j = self.i + 1;
        }
        None
    }
}

pub fn enumerate_disjoint_cycle_pairs(g: &Graph) -> DisjointCyclePairs {
    let diagram = BookDiagram::new(g);
    let cycles = simple_cycles(g);
    let edges = cycles.iter().map(|c| diagram.cycle_edges(c)).collect();
    DisjointCyclePairs {
        diagram,
        cycles,
        edges,
        i: 0,
        j: 1,
    }
}

/// Fundamental cycles of `g[within]` for a breadth-first spanning forest,
/// as edge-index lists of `diagram`.
pub(crate) fn fundamental_cycles(g: &Graph, diagram: &BookDiagram, within: VertexSet) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut seen: VertexSet = 0;
    let mut queue = Vec::with_capacity(n);
    for root in bits(within) {
        if seen >> root & 1 == 1 {
            continue;
        }
        seen |= 1 << root;
        queue.clear();
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for w in bits(g.neighbors(v) & within & !seen) {
                seen |= 1 << w;
                parent[w] = v;
                depth[w] = depth[v] + 1;
                queue.push(w);
            }
        }
    }
    let mut out = Vec::new();
    for u in bits(within) {
        for v in bits(g.neighbors(u) & within) {
            if v < u || parent[u] == v || parent[v] == u {
                continue;
            }
            let mut cycle = vec![diagram.edge_index(u, v).unwrap()];
            let (mut a, mut b) = (u, v);
            while a != b {
                if depth[a] >= depth[b] {
                    cycle.push(diagram.edge_index(a, parent[a]).unwrap());
                    a = parent[a];
                } else {
                    cycle.push(diagram.edge_index(b, parent[b]).unwrap());
                    b = parent[b];
                }
            }
            out.push(cycle);
        }
    }
    out
}
