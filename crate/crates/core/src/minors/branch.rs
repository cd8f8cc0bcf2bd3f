//! General minor test by enumerating branch-set partitions.
//!
//! `H` (on `k` vertices) is a minor of `G` iff `V(G)` splits into a deleted
//! set and `k` disjoint connected blocks whose quotient graph contains `H`
//! as a spanning subgraph. A deleted vertex adjacent to a block can always
//! be absorbed into it, so each connected component of `G` is either
//! deleted whole or partitioned completely. Blocks are generated one at a
//! time as connected sets rooted at the lowest undecided vertex, so every
//! partition is visited once and connectivity never needs a separate check.
//! Partial partitions are cut when the quotient degrees can no longer
//! dominate the degree sequence of `H`.

use crate::graph::{bits, Graph, VertexSet};

/// One connected, pairwise disjoint vertex set of `G` per vertex of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchDecomposition {
    pub parts: Vec<VertexSet>,
}

impl BranchDecomposition {
    /// Checks disjointness, non-emptiness, connectivity and edge coverage.
    pub fn is_model_of(&self, g: &Graph, h: &Graph) -> bool {
        if self.parts.len() != h.order() {
            return false;
        }
        let mut used = 0u32;
        for &p in &self.parts {
            if p == 0 || p & used != 0 || p & !g.vertex_set() != 0 || !g.is_connected_within(p) {
                return false;
            }
            used |= p;
        }
        h.edges().all(|e| {
            let reach = bits(self.parts[e.u]).fold(0, |acc, v| acc | g.neighbors(v));
            reach & self.parts[e.v] != 0
        })
    }
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    k: usize,
    /// `H` degrees, descending.
    h_degrees: Vec<usize>,
    h_edges: usize,
    blocks: Vec<VertexSet>,
    /// Union of neighbourhoods of each block.
    reach: Vec<VertexSet>,
    /// Branch sets indexed by `H` vertex, once a model is found.
    found: Option<Vec<VertexSet>>,
    components: Vec<VertexSet>,
}

impl Search<'_> {
    fn component_of(&self, v: usize) -> VertexSet {
        *self
            .components
            .iter()
            .find(|c| *c >> v & 1 == 1)
            .expect("every vertex lies in a component")
    }

    /// Degree-domination cut on the blocks placed so far.
    fn feasible(&self, undecided: VertexSet) -> bool {
        let open = self.k - self.blocks.len();
        let mut potential: Vec<usize> = (0..self.blocks.len())
            .map(|i| {
                let fixed = (0..self.blocks.len())
                    .filter(|&j| j != i && self.reach[i] & self.blocks[j] != 0)
                    .count();
                // each later block adjacent to this one owns a distinct
                // undecided neighbour of it
                let frontier = (self.reach[i] & undecided).count_ones() as usize;
                fixed + open.min(frontier)
            })
            .collect();
        // every quotient edge is counted from both ends
        let degree_sum: usize = potential.iter().sum::<usize>() + open * (self.k - 1);
        if degree_sum < 2 * self.h_edges {
            return false;
        }
        potential.sort_unstable_by(|a, b| b.cmp(a));
        // a new block may be adjacent to everything, so only the placed
        // blocks are compared against the smallest H degrees they must cover
        let tail = &self.h_degrees[self.k - self.blocks.len()..];
        potential.iter().zip(tail).all(|(p, d)| p >= d)
    }

    #[allow(clippy::needless_range_loop)]
    fn check_quotient(&mut self) -> bool {
        let k = self.k;
        let mut q = vec![0u32; k];
        for i in 0..k {
            for j in 0..k {
                if i != j && self.reach[i] & self.blocks[j] != 0 {
                    q[i] |= 1 << j;
                }
            }
        }
        if q.iter().map(|r| r.count_ones() as usize).sum::<usize>() < 2 * self.h.edge_count() {
            return false;
        }
        let domains: Vec<u32> = (0..k)
            .map(|v| {
                let need = self.h.degree(v) as u32;
                (0..k)
                    .filter(|&c| q[c].count_ones() >= need)
                    .fold(0u32, |acc, c| acc | 1 << c)
            })
            .collect();
        let mut map = vec![usize::MAX; k];
        if embed(self.h, &q, domains, &mut map, 0) {
            self.found = Some(map.iter().map(|&b| self.blocks[b]).collect());
            true
        } else {
            false
        }
    }

    fn rec(&mut self, undecided: VertexSet) -> bool {
        let open = self.k - self.blocks.len();
        if undecided == 0 {
            return open == 0 && self.check_quotient();
        }
        if (undecided.count_ones() as usize) < open {
            return false;
        }
        let root = undecided.trailing_zeros() as usize;
        if open > 0 {
            let start = 1u32 << root;
            if self.grow(start, 0, undecided) {
                return true;
            }
        }
        // a deleted vertex next to a branch set could join it instead, so
        // components are either fully partitioned or deleted whole
        let comp = self.component_of(root);
        if comp & !undecided == 0 {
            let rest = undecided & !comp;
            if rest.count_ones() as usize >= open && self.feasible(rest) && self.rec(rest) {
                return true;
            }
        }
        false
    }

    /// Enumerates connected sets `S` containing the root inside `undecided`,
    /// each exactly once, and recurses with `S` as the next block.
    fn grow(&mut self, set: VertexSet, excluded: VertexSet, undecided: VertexSet) -> bool {
        let reach = bits(set).fold(0, |acc, v| acc | self.g.neighbors(v));
        let rest = undecided & !set;
        self.blocks.push(set);
        self.reach.push(reach);
        let hit = self.feasible(rest) && self.rec(rest);
        self.blocks.pop();
        self.reach.pop();
        if hit {
            return true;
        }
        // leave enough vertices for the blocks still to come
        let open_after = self.k - self.blocks.len() - 1;
        if (rest.count_ones() as usize) <= open_after {
            return false;
        }
        let candidates = reach & rest & !excluded;
        let mut ex = excluded;
        for w in bits(candidates) {
            if self.grow(set | 1 << w, ex, undecided) {
                return true;
            }
            ex |= 1 << w;
        }
        false
    }
}

/// Injective map of `h` into the quotient `q` preserving `h`-edges, by
/// forward checking with smallest-domain-first variable choice.
#[allow(clippy::needless_range_loop)]
fn embed(h: &Graph, q: &[u32], domains: Vec<u32>, map: &mut [usize], mapped: u32) -> bool {
    let k = h.order();
    if mapped.count_ones() as usize == k {
        return true;
    }
    let v = (0..k)
        .filter(|&v| mapped >> v & 1 == 0)
        .min_by_key(|&v| (domains[v].count_ones(), std::cmp::Reverse(h.degree(v))))
        .unwrap();
    for c in bits(domains[v]) {
        let mut next = domains.clone();
        let mut dead = false;
        for u in 0..k {
            if u == v || mapped >> u & 1 == 1 {
                continue;
            }
            next[u] &= !(1 << c);
            if h.has_edge(u, v) {
                next[u] &= q[c];
            }
            if next[u] == 0 {
                dead = true;
                break;
            }
        }
        if dead {
            continue;
        }
        map[v] = c;
        if embed(h, q, next, map, mapped | 1 << v) {
            return true;
        }
        map[v] = usize::MAX;
    }
    false
}

/// Breadth-first order from a maximum-degree vertex, per component.
fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.order());
    let mut seen = 0u32;
    while order.len() < g.order() {
        let start = (0..g.order())
            .filter(|&v| seen >> v & 1 == 0)
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        seen |= 1 << start;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let v = order[head];
            head += 1;
            let mut next: Vec<usize> = bits(g.neighbors(v) & !seen).collect();
            next.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
            for w in next {
                seen |= 1 << w;
                order.push(w);
            }
        }
    }
    order
}

/// Finds a branch decomposition witnessing `h` as a minor of `g`.
pub fn find_minor(g: &Graph, h: &Graph) -> Option<BranchDecomposition> {
    let k = h.order();
    if k > g.order() || h.edge_count() > g.edge_count() {
        return None;
    }
    // search on a relabeled copy where label i is the i-th vertex in BFS order
    let order = bfs_order(g);
    let mut relabel = vec![0; g.order()];
    for (i, &v) in order.iter().enumerate() {
        relabel[v] = i;
    }
    let work = g.permuted(&relabel);

    let mut h_degrees: Vec<usize> = (0..k).map(|v| h.degree(v)).collect();
    h_degrees.sort_unstable_by(|a, b| b.cmp(a));
    let mut s = Search {
        g: &work,
        h,
        k,
        h_degrees,
        h_edges: h.edge_count(),
        blocks: Vec::with_capacity(k),
        reach: Vec::with_capacity(k),
        found: None,
        components: work.components(),
    };
    if !s.rec(work.vertex_set()) {
        return None;
    }
    let parts = s
        .found?
        .into_iter()
        .map(|p| bits(p).fold(0u32, |acc, i| acc | 1 << order[i]))
        .collect();
    Some(BranchDecomposition { parts })
}

/// True iff `h` is a minor of `g`.
pub fn has_minor(g: &Graph, h: &Graph) -> bool {
    find_minor(g, h).is_some()
}
