//! Book-style diagram of a graph: vertices on a circle in index order,
//! edges drawn as chords. Two chords cross iff their endpoints interleave,
//! and at every crossing the chord with the smaller first endpoint passes
//! over.

use super::cycles::Cycle;
use super::LinkingError;
use crate::graph::{Edge, Graph};

const NO_EDGE: u16 = u16::MAX;

#[derive(Debug, Clone)]
pub struct BookDiagram {
    n: usize,
    edges: Vec<Edge>,
    index: Vec<u16>,
    /// Row `e` holds the edges that `e` passes over.
    over: Vec<u64>,
    words: usize,
    crossings: Vec<(usize, usize)>,
}

/// True iff chords `e` and `f` interleave on the circle.
pub fn interleaved(e: Edge, f: Edge) -> bool {
    (e.u < f.u && f.u < e.v && e.v < f.v) || (f.u < e.u && e.u < f.v && f.v < e.v)
}

impl BookDiagram {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let edges: Vec<Edge> = g.edges().collect();
        let m = edges.len();
        let mut index = vec![NO_EDGE; n * n];
        for (i, e) in edges.iter().enumerate() {
            index[e.u * n + e.v] = i as u16;
            index[e.v * n + e.u] = i as u16;
        }
        let words = m.div_ceil(64).max(1);
        let mut over = vec![0u64; m * words];
        let mut crossings = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let (e, f) = (edges[i], edges[j]);
                if interleaved(e, f) {
                    let (top, bottom) = if e.u < f.u { (i, j) } else { (j, i) };
                    over[top * words + bottom / 64] |= 1 << (bottom % 64);
                    crossings.push((top, bottom));
                }
            }
        }
        BookDiagram {
            n,
            edges,
            index,
            over,
            words,
            crossings,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match self.index[u * self.n + v] {
            NO_EDGE => None,
            i => Some(i as usize),
        }
    }

    /// Crossings as `(over, under)` edge-index pairs.
    pub fn crossings(&self) -> &[(usize, usize)] {
        &self.crossings
    }

    #[inline]
    pub fn passes_over(&self, e: usize, f: usize) -> bool {
        self.over[e * self.words + f / 64] >> (f % 64) & 1 == 1
    }

    /// Parity of crossings where an edge of `top` passes over an edge of `bottom`.
    pub fn over_parity(&self, top: &[usize], bottom: &[usize]) -> bool {
        let mut parity = false;
        for &e in top {
            for &f in bottom {
                parity ^= self.passes_over(e, f);
            }
        }
        parity
    }

    /// Edge indices of a cycle's edges in traversal order.
    pub fn cycle_edges(&self, c: &Cycle) -> Vec<usize> {
        c.edges()
            .map(|e| self.edge_index(e.u, e.v).expect("cycle edge exists in the graph"))
            .collect()
    }

    /// Mod-2 linking number of two vertex-disjoint cycles.
    pub fn lk2(&self, c1: &Cycle, c2: &Cycle) -> Result<u8, LinkingError> {
        if c1.mask() & c2.mask() != 0 {
            return Err(LinkingError::NotDisjoint);
        }
        Ok(self.over_parity(&self.cycle_edges(c1), &self.cycle_edges(c2)) as u8)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_has_no_crossings() {
        let d = BookDiagram::new(&Graph::cycle(4).unwrap());
        assert!(d.crossings().is_empty());
    }

    #[test]
    fn k4_has_one_crossing() {
        let d = BookDiagram::new(&Graph::complete(4).unwrap());
        assert_eq!(d.crossings().len(), 1);
        let (top, bottom) = d.crossings()[0];
        assert_eq!(d.edges()[top], Edge::new(0, 2));
        assert_eq!(d.edges()[bottom], Edge::new(1, 3));
    }

    #[test]
    fn complete_graph_crossings_are_four_subsets() {
        for n in 4..=9 {
            let d = BookDiagram::new(&Graph::complete(n).unwrap());
            let subsets = n * (n - 1) * (n - 2) * (n - 3) / 24;
            assert_eq!(d.crossings().len(), subsets);
        }
    }

    #[test]
    fn k6_triangles_link_once() {
        let d = BookDiagram::new(&Graph::complete(6).unwrap());
        let a = Cycle::new(vec![0, 2, 4]).unwrap();
        let b = Cycle::new(vec![1, 3, 5]).unwrap();
        assert_eq!(d.lk2(&a, &b).unwrap(), 1);
        assert_eq!(d.lk2(&b, &a).unwrap(), 1);
        let c = Cycle::new(vec![0, 1, 2]).unwrap();
        let e = Cycle::new(vec![3, 4, 5]).unwrap();
        assert_eq!(d.lk2(&c, &e).unwrap(), 0);
        assert_eq!(d.lk2(&a, &c), Err(LinkingError::NotDisjoint));
    }
}
