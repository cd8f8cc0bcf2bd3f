//! Isomorphism for small graphs: joint colour refinement followed by
//! backtracking over the refined classes.

use std::collections::HashMap;

use crate::graph::{bits, Graph};

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv(mut h: u64, x: u64) -> u64 {
    for b in x.to_le_bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

/// One refinement round: new colour = rank of (old colour, sorted neighbour colours)
/// among all signatures present in `graphs`.
fn refine_round(graphs: &[&Graph], colors: &mut [Vec<u32>]) -> usize {
    let mut sigs: Vec<Vec<(u32, Vec<u32>)>> = Vec::with_capacity(graphs.len());
    for (g, col) in graphs.iter().zip(colors.iter()) {
        let s = (0..g.order())
            .map(|v| {
                let mut nb: Vec<u32> = bits(g.neighbors(v)).map(|w| col[w]).collect();
                nb.sort_unstable();
                (col[v], nb)
            })
            .collect();
        sigs.push(s);
    }
    let mut all: Vec<&(u32, Vec<u32>)> = sigs.iter().flatten().collect();
    all.sort();
    all.dedup();
    let rank: HashMap<&(u32, Vec<u32>), u32> = all.iter().enumerate().map(|(i, s)| (*s, i as u32)).collect();
    for (s, col) in sigs.iter().zip(colors.iter_mut()) {
        for (v, sig) in s.iter().enumerate() {
            col[v] = rank[sig];
        }
    }
    all.len()
}

fn degree_colors(g: &Graph) -> Vec<u32> {
    (0..g.order()).map(|v| g.degree(v) as u32).collect()
}

fn histogram(col: &[u32]) -> Vec<u32> {
    let mut h = col.to_vec();
    h.sort_unstable();
    h
}

/// Stable colour classes of one graph, canonical up to isomorphism.
pub fn refined_colors(g: &Graph) -> Vec<u32> {
    let mut colors = vec![degree_colors(g)];
    let mut classes = 0;
    loop {
        let c = refine_round(&[g], &mut colors);
        if c == classes {
            break;
        }
        classes = c;
    }
    colors.pop().unwrap()
}

/// Isomorphism-invariant summary used to shortlist candidates before an
/// exact [`is_isomorphic`] test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: usize,
    pub edges: usize,
    pub triangles: usize,
    pub refinement: u64,
}

impl Fingerprint {
    pub fn of(g: &Graph) -> Self {
        let mut colors = vec![degree_colors(g)];
        let mut h = FNV_OFFSET;
        for c in histogram(&colors[0]) {
            h = fnv(h, c as u64);
        }
        let mut classes = 0;
        loop {
            // fold each round's signature multiset into the hash so colour
            // indices stay meaningful across graphs
            let mut sigs: Vec<(u32, Vec<u32>)> = (0..g.order())
                .map(|v| {
                    let mut nb: Vec<u32> = bits(g.neighbors(v)).map(|w| colors[0][w]).collect();
                    nb.sort_unstable();
                    (colors[0][v], nb)
                })
                .collect();
            sigs.sort();
            for (c, nb) in &sigs {
                h = fnv(h, *c as u64);
                for x in nb {
                    h = fnv(h, *x as u64 | 1 << 40);
                }
            }
            let c = refine_round(&[g], &mut colors);
            if c == classes {
                break;
            }
            classes = c;
        }
        let mut per_vertex_triangles: Vec<u32> = (0..g.order())
            .map(|v| {
                bits(g.neighbors(v))
                    .map(|w| (g.neighbors(v) & g.neighbors(w)).count_ones())
                    .sum::<u32>()
                    / 2
            })
            .collect();
        per_vertex_triangles.sort_unstable();
        for t in per_vertex_triangles {
            h = fnv(h, t as u64 | 1 << 50);
        }
        Fingerprint {
            order: g.order(),
            edges: g.edge_count(),
            triangles: g.triangle_count(),
            refinement: h,
        }
    }
}

/// Returns a bijection `p` with `g1 ~ g2` under `v -> p[v]`, if one exists.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    let n = g1.order();
    if n != g2.order() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let mut colors = vec![degree_colors(g1), degree_colors(g2)];
    if histogram(&colors[0]) != histogram(&colors[1]) {
        return None;
    }
    let mut classes = 0;
    loop {
        let c = refine_round(&[g1, g2], &mut colors);
        if histogram(&colors[0]) != histogram(&colors[1]) {
            return None;
        }
        if c == classes {
            break;
        }
        classes = c;
    }
    let (c1, c2) = (&colors[0], &colors[1]);
    let class_size = |c: u32| c1.iter().filter(|&&x| x == c).count();

    // map rare classes first, then prefer vertices adjacent to mapped ones
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = 0u32;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| {
                let linked = (g1.neighbors(v) & placed).count_ones();
                (linked == 0 && placed != 0, class_size(c1[v]), v)
            })
            .unwrap();
        placed |= 1 << next;
        order.push(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = 0u32;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        depth: usize,
        order: &[usize],
        g1: &Graph,
        g2: &Graph,
        c1: &[u32],
        c2: &[u32],
        map: &mut [usize],
        used: &mut u32,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..g2.order() {
            if *used >> w & 1 == 1 || c2[w] != c1[v] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| g1.has_edge(u, v) == g2.has_edge(map[u], w));
            if !consistent {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            if rec(depth + 1, order, g1, g2, c1, c2, map, used) {
                return true;
            }
            *used &= !(1 << w);
        }
        map[v] = usize::MAX;
        false
    }
    if rec(0, &order, g1, g2, c1, c2, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// Set of graphs deduplicated up to isomorphism, preserving insertion order.
#[derive(Debug, Default, Clone)]
pub struct IsoSet {
    buckets: HashMap<Fingerprint, Vec<usize>>,
    graphs: Vec<Graph>,
}

impl IsoSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Index of a stored graph isomorphic to `g`.
    pub fn find(&self, g: &Graph) -> Option<usize> {
        self.find_with(g, &Fingerprint::of(g))
    }

    fn find_with(&self, g: &Graph, fp: &Fingerprint) -> Option<usize> {
        self.buckets
            .get(fp)?
            .iter()
            .copied()
            .find(|&i| is_isomorphic(&self.graphs[i], g))
    }

    /// Inserts `g` unless an isomorphic copy is present; returns true if inserted.
    pub fn insert(&mut self, g: Graph) -> bool {
        let fp = Fingerprint::of(&g);
        if self.find_with(&g, &fp).is_some() {
            return false;
        }
        self.buckets.entry(fp).or_default().push(self.graphs.len());
        self.graphs.push(g);
        true
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.find(g).is_some()
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.graphs
    }
}

impl FromIterator<Graph> for IsoSet {
    fn from_iter<I: IntoIterator<Item = Graph>>(iter: I) -> Self {
        let mut s = IsoSet::new();
        for g in iter {
            s.insert(g);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kneser_5_2() -> Graph {
        let pairs: Vec<u32> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (1u32 << a) | (1 << b)))
            .collect();
        let mut edges = Vec::new();
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                if pairs[i] & pairs[j] == 0 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn petersen_matches_kneser() {
        let map = find_isomorphism(&Graph::petersen(), &kneser_5_2()).unwrap();
        let p = Graph::petersen();
        assert_eq!(p.permuted(&map), kneser_5_2());
    }

    #[test]
    fn c6_is_not_two_triangles() {
        let c6 = Graph::cycle(6).unwrap();
        let c3 = Graph::cycle(3).unwrap();
        let two = c3.disjoint_union(&c3).unwrap();
        assert!(!is_isomorphic(&c6, &two));
        assert_eq!(Fingerprint::of(&c6).edges, Fingerprint::of(&two).edges);
    }

    #[test]
    fn iso_set_dedups() {
        let c5 = Graph::cycle(5).unwrap();
        let mut s = IsoSet::new();
        assert!(s.insert(c5));
        assert!(!s.insert(c5.permuted(&[2, 4, 1, 0, 3])));
        assert!(!s.insert(c5.complement()));
        assert!(s.insert(Graph::path(5).unwrap()));
        assert_eq!(s.len(), 2);
    }
}
