//! Small simple undirected graphs stored as one adjacency bitset per vertex.
//!
//! Every operation returns a new [`Graph`]; values are `Copy` and can be
//! shared freely between worker threads.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest supported vertex count: one `u32` word per adjacency row.
pub const MAX_VERTICES: usize = 32;

/// Bitset of vertices.
pub type VertexSet = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph would need {0} vertices, at most {MAX_VERTICES} are supported")]
    CapacityExceeded(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("contraction set contains a cycle")]
    NotAForest,
    #[error("vertices {0:?} do not induce a complete subgraph")]
    NotAClique(Vec<usize>),
    #[error("clique maps have different lengths ({0} and {1})")]
    MapLengthMismatch(usize, usize),
    #[error("a graph needs at least one vertex")]
    Empty,
}

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds an edge from endpoints in either order.
    pub fn new(a: usize, b: usize) -> Self {
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

#[inline]
pub(crate) fn bits(mut set: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let i = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn full_set(n: usize) -> VertexSet {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Simple undirected graph on `1..=32` labeled vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [VertexSet; MAX_VERTICES],
}

/// Minimum degree, maximum degree and the ascending degree sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub sequence: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::CapacityExceeded(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges<E: Into<Edge> + Copy>(n: usize, edges: &[E]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &e in edges {
            let e: Edge = e.into();
            if e.u == e.v {
                return Err(GraphError::Loop(e.u));
            }
            if e.v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: e.v, n });
            }
            g.set_edge(e.u, e.v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and loops.
    pub fn from_adjacency(rows: &[VertexSet]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let all = full_set(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & !all != 0 {
                let vertex = (row & !all).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            if row >> i & 1 == 1 {
                return Err(GraphError::Loop(i));
            }
            for j in bits(row) {
                if rows[j] >> i & 1 == 0 {
                    return Err(GraphError::NotAnEdge(j, i));
                }
            }
            g.adj[i] = row;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = full_set(n);
        for i in 0..n {
            g.adj[i] = all & !(1 << i);
        }
        Ok(g)
    }

    /// Cycle `0-1-...-(n-1)-0`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<Edge> = (0..n).map(|i| Edge::new(i, (i + 1) % n)).collect();
        if n < 3 {
            return Err(GraphError::Loop(0));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<Edge> = (1..n).map(|i| Edge::new(i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// `K_{1,leaves}` with the center at index `leaves`.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        let edges: Vec<Edge> = (0..leaves).map(|i| Edge::new(i, leaves)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in a..a + b {
                edges.push(Edge::new(i, j));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self, GraphError> {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if part_of[i] != part_of[j] {
                    edges.push(Edge::new(i, j));
                }
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Petersen graph: outer cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push(Edge::new(i, (i + 1) % 5));
            edges.push(Edge::new(5 + i, 5 + (i + 2) % 5));
            edges.push(Edge::new(i, i + 5));
        }
        Graph::from_edges(10, &edges).expect("static construction")
    }

    /// Octahedron `K_{2,2,2}`.
    pub fn octahedron() -> Self {
        Graph::complete_multipartite(&[2, 2, 2]).expect("static construction")
    }

    /// Icosahedron: two poles, two pentagons, antiprism band between them.
    pub fn icosahedron() -> Self {
        let mut edges = Vec::with_capacity(30);
        for i in 0..5 {
            let upper = 1 + i;
            let lower = 6 + i;
            edges.push(Edge::new(0, upper));
            edges.push(Edge::new(11, lower));
            edges.push(Edge::new(upper, 1 + (i + 1) % 5));
            edges.push(Edge::new(lower, 6 + (i + 1) % 5));
            edges.push(Edge::new(upper, lower));
            edges.push(Edge::new(upper, 6 + (i + 1) % 5));
        }
        Graph::from_edges(12, &edges).expect("static construction")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Adjacency rows, one bitset per vertex.
    #[inline]
    pub fn rows(&self) -> &[VertexSet] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        full_set(self.n)
    }

    /// Edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_set(u + 1)).map(move |v| Edge { u, v }))
    }

    /// Non-adjacent vertex pairs in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let all = self.vertex_set();
        (0..self.n).flat_map(move |u| bits(!self.adj[u] & all & !full_set(u + 1)).map(move |v| Edge { u, v }))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let mut g = *self;
        g.set_edge(u, v);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut g = *self;
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Subgraph induced by `keep`, relabeled to `0..|keep|` preserving order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph, GraphError> {
        let keep = keep & self.vertex_set();
        let verts: Vec<usize> = bits(keep).collect();
        let mut g = Graph::empty(verts.len())?;
        for (i, &v) in verts.iter().enumerate() {
            let mut row = 0;
            for (j, &w) in verts.iter().enumerate() {
                if self.adj[v] >> w & 1 == 1 {
                    row |= 1 << j;
                }
            }
            g.adj[i] = row;
        }
        Ok(g)
    }

    pub fn without_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        self.induced(self.vertex_set() & !(1 << v))
    }

    /// Relabels vertex `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for e in self.edges() {
            g.set_edge(perm[e.u], perm[e.v]);
        }
        g
    }

    /// Disjoint union, `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(self.n + other.n)?;
        g.adj[..self.n].copy_from_slice(&self.adj[..self.n]);
        for i in 0..other.n {
            g.adj[self.n + i] = other.adj[i] << self.n;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_set();
        let mut g = *self;
        for i in 0..self.n {
            g.adj[i] = !self.adj[i] & all & !(1 << i);
        }
        g
    }

    /// Contracts every edge of a forest, merging parallel edges and dropping loops.
    ///
    /// Classes are relabeled in order of their smallest original vertex.
    pub fn contract_edges(&self, edges: &[Edge]) -> Result<Graph, GraphError> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in edges {
            if !self.has_edge(e.u, e.v) {
                return Err(GraphError::NotAnEdge(e.u, e.v));
            }
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a == b {
                return Err(GraphError::NotAForest);
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            parent[hi] = lo;
        }
        let mut label = vec![usize::MAX; self.n];
        let mut classes = 0;
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = classes;
                classes += 1;
            }
            label[v] = label[r];
        }
        let mut g = Graph::empty(classes)?;
        for e in self.edges() {
            let (a, b) = (label[e.u], label[e.v]);
            if a != b {
                g.set_edge(a, b);
            }
        }
        Ok(g)
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True if the subgraph induced by `set` is connected (the empty set counts as connected).
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        if set == 0 {
            return true;
        }
        self.reach(set.trailing_zeros() as usize, set) == set
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_set())
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertex_set();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left.trailing_zeros() as usize, left);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// True iff the graph stays connected after deleting any set of fewer than `k` vertices.
    ///
    /// Exhaustive over deletion sets.
    pub fn vertex_connectivity_at_least(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if k >= self.n {
            // only K_n reaches n-1; nothing reaches n
            return false;
        }
        fn rec(g: &Graph, removed: VertexSet, from: usize, left: usize) -> bool {
            if !g.is_connected_within(g.vertex_set() & !removed) {
                return false;
            }
            if left == 0 {
                return true;
            }
            (from..g.n).all(|v| rec(g, removed | 1 << v, v + 1, left - 1))
        }
        rec(self, 0, 0, k - 1)
    }

    pub fn is_triangular_edge(&self, e: Edge) -> Result<bool, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::NotAnEdge(e.u, e.v));
        }
        Ok(self.adj[e.u] & self.adj[e.v] != 0)
    }

    pub fn is_triangular(&self) -> bool {
        self.edges().all(|e| self.adj[e.u] & self.adj[e.v] != 0)
    }

    pub fn non_triangular_edges(&self) -> Vec<Edge> {
        self.edges().filter(|e| self.adj[e.u] & self.adj[e.v] == 0).collect()
    }

    /// Triangles `[a, b, c]` with `a < b < c`, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for e in self.edges() {
            for c in bits(self.adj[e.u] & self.adj[e.v] & !full_set(e.v + 1)) {
                out.push([e.u, e.v, c]);
            }
        }
        out
    }

    pub fn triangle_count(&self) -> usize {
        self.edges()
            .map(|e| (self.adj[e.u] & self.adj[e.v] & !full_set(e.v + 1)).count_ones() as usize)
            .sum()
    }

    /// Adds a vertex (index `n`) adjacent to every existing vertex.
    pub fn cone(&self) -> Result<Graph, GraphError> {
        if self.n >= MAX_VERTICES {
            return Err(GraphError::CapacityExceeded(self.n + 1));
        }
        let mut g = *self;
        let apex = self.n;
        g.n += 1;
        for v in 0..self.n {
            g.set_edge(v, apex);
        }
        Ok(g)
    }

    /// Adds a vertex (index `n`) adjacent to `targets`.
    pub fn with_new_vertex(&self, targets: VertexSet) -> Result<Graph, GraphError> {
        if self.n >= MAX_VERTICES {
            return Err(GraphError::CapacityExceeded(self.n + 1));
        }
        if targets & !self.vertex_set() != 0 {
            return Err(GraphError::VertexOutOfRange {
                vertex: (targets & !self.vertex_set()).trailing_zeros() as usize,
                n: self.n,
            });
        }
        let mut g = *self;
        let v = self.n;
        g.n += 1;
        for t in bits(targets) {
            g.set_edge(t, v);
        }
        Ok(g)
    }

    /// True if `vertices` are distinct and pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        let mut seen = 0u32;
        for &v in vertices {
            if v >= self.n || seen >> v & 1 == 1 {
                return false;
            }
            seen |= 1 << v;
        }
        vertices.iter().all(|&v| self.adj[v] & seen == seen & !(1 << v))
    }

    /// Glues `g1` and `g2` along the cliques `map1[i] ~ map2[i]`.
    ///
    /// Vertices of `g1` keep their labels; the unshared vertices of `g2`
    /// follow in increasing order. The edge set is the union of both.
    pub fn clique_sum(g1: &Graph, g2: &Graph, map1: &[usize], map2: &[usize]) -> Result<Graph, GraphError> {
        if map1.len() != map2.len() {
            return Err(GraphError::MapLengthMismatch(map1.len(), map2.len()));
        }
        if !g1.is_clique(map1) {
            return Err(GraphError::NotAClique(map1.to_vec()));
        }
        if !g2.is_clique(map2) {
            return Err(GraphError::NotAClique(map2.to_vec()));
        }
        let n = g1.n + g2.n - map1.len();
        let mut g = Graph::empty(n)?;
        g.adj[..g1.n].copy_from_slice(&g1.adj[..g1.n]);
        let mut label = vec![usize::MAX; g2.n];
        for (&a, &b) in map1.iter().zip(map2) {
            label[b] = a;
        }
        let mut next = g1.n;
        for l in label.iter_mut() {
            if *l == usize::MAX {
                *l = next;
                next += 1;
            }
        }
        for e in g2.edges() {
            g.set_edge(label[e.u], label[e.v]);
        }
        Ok(g)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut sequence: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        sequence.sort_unstable();
        DegreeProfile {
            min: sequence[0],
            max: sequence[self.n - 1],
            sequence,
        }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(u: usize, v: usize) -> Edge {
        Edge::new(u, v)
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(k6.complement(), Graph::empty(6).unwrap());
        assert_eq!(k6.edge_count(), 15);
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5).unwrap();
        let cc = c5.complement();
        assert_eq!(cc.edge_count(), 5);
        assert!((0..5).all(|v| cc.degree(v) == 2));
        assert!(cc.is_connected());
    }

    #[test]
    fn contract_cycle_and_complete() {
        let c4 = Graph::cycle(4).unwrap();
        let c3 = c4.contract_edges(&[e(0, 1)]).unwrap();
        assert_eq!(c3, Graph::cycle(3).unwrap());

        let k7 = Graph::complete(7).unwrap();
        for edge in k7.edges() {
            assert_eq!(k7.contract_edges(&[edge]).unwrap(), Graph::complete(6).unwrap());
        }
    }

    #[test]
    fn petersen_spoke_contraction_gives_k5() {
        // Independent table: contracting spoke i~i+5 merges outer neighbours
        // i±1 with inner neighbours i±2.
        let mut expected = [[false; 5]; 5];
        for i in 0..5usize {
            for d in [1, 2, 3, 4] {
                expected[i][(i + d) % 5] = true;
            }
        }
        let spokes: Vec<Edge> = (0..5).map(|i| e(i, i + 5)).collect();
        let q = Graph::petersen().contract_edges(&spokes).unwrap();
        assert_eq!(q.order(), 5);
        for (i, row) in expected.iter().enumerate() {
            for (j, &adj) in row.iter().enumerate() {
                assert_eq!(q.has_edge(i, j), adj);
            }
        }
        assert_eq!(q, Graph::complete(5).unwrap());
    }

    #[test]
    fn contract_rejects_cycles_and_non_edges() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            k4.contract_edges(&[e(0, 1), e(1, 2), e(0, 2)]),
            Err(GraphError::NotAForest)
        );
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.contract_edges(&[e(0, 2)]), Err(GraphError::NotAnEdge(0, 2)));
    }

    #[test]
    fn connectivity_basics() {
        assert!(Graph::complete(4).unwrap().vertex_connectivity_at_least(3));
        assert!(!Graph::complete(4).unwrap().vertex_connectivity_at_least(4));
        assert!(!Graph::path(3).unwrap().vertex_connectivity_at_least(2));
        assert!(Graph::path(3).unwrap().vertex_connectivity_at_least(1));
        assert!(Graph::cycle(6).unwrap().vertex_connectivity_at_least(2));
        assert!(!Graph::cycle(6).unwrap().vertex_connectivity_at_least(3));
        assert!(Graph::petersen().vertex_connectivity_at_least(3));
    }

    #[test]
    fn triangular_edges() {
        let k3 = Graph::complete(3).unwrap();
        assert!(k3.edges().all(|x| k3.is_triangular_edge(x).unwrap()));
        let c4 = Graph::cycle(4).unwrap();
        assert!(c4.edges().all(|x| !c4.is_triangular_edge(x).unwrap()));
        assert!(!c4.is_triangular());
        assert_eq!(c4.is_triangular_edge(e(0, 2)), Err(GraphError::NotAnEdge(0, 2)));
        assert_eq!(Graph::complete(5).unwrap().triangle_count(), 10);
    }

    #[test]
    fn cones() {
        assert_eq!(Graph::complete(5).unwrap().cone().unwrap(), Graph::complete(6).unwrap());
        let w4 = Graph::cycle(4).unwrap().cone().unwrap();
        assert_eq!(w4.edge_count(), 8);
        assert_eq!(w4.degree(4), 4);
        assert_eq!(Graph::empty(32).unwrap().cone(), Err(GraphError::CapacityExceeded(33)));
    }

    #[test]
    fn clique_sums() {
        let k3 = Graph::complete(3).unwrap();
        let s = Graph::clique_sum(&k3, &k3, &[0, 1], &[0, 1]).unwrap();
        assert_eq!(s.order(), 4);
        assert_eq!(s.edge_count(), 5);
        assert!(!s.has_edge(2, 3));

        let k4 = Graph::complete(4).unwrap();
        let bowtie = Graph::clique_sum(&k4, &k4, &[3], &[0]).unwrap();
        assert_eq!(bowtie.order(), 7);
        assert!(bowtie.is_connected());
        assert!(!bowtie.vertex_connectivity_at_least(2));

        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            Graph::clique_sum(&c4, &k3, &[0, 2], &[0, 1]),
            Err(GraphError::NotAClique(vec![0, 2]))
        );
    }

    #[test]
    fn degree_profiles() {
        let k6 = Graph::complete(6).unwrap().degree_profile();
        assert_eq!((k6.min, k6.max, k6.sequence), (5, 5, vec![5; 6]));
        let star = Graph::star(4).unwrap().degree_profile();
        assert_eq!((star.min, star.max, star.sequence), (1, 4, vec![1, 1, 1, 1, 4]));
    }

    #[test]
    fn named_constructions() {
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(p.triangle_count(), 0);
        let ico = Graph::icosahedron();
        assert_eq!(ico.edge_count(), 30);
        assert!((0..12).all(|v| ico.degree(v) == 5));
        assert_eq!(Graph::octahedron().edge_count(), 12);
    }

    #[test]
    fn from_adjacency_validates() {
        assert!(Graph::from_adjacency(&[0b10, 0b01]).is_ok());
        assert_eq!(Graph::from_adjacency(&[0b10, 0b00]), Err(GraphError::NotAnEdge(1, 0)));
        assert_eq!(Graph::from_adjacency(&[0b01]), Err(GraphError::Loop(0)));
        assert!(Graph::from_adjacency(&[0b100, 0b000]).is_err());
    }
}
