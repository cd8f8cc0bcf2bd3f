//! `K6` minor test by contraction enumeration.
//!
//! A connected graph on `n > 6` vertices has a `K6` minor iff some set of
//! `n - 6` edges contracts it to `K6`. Only forests reduce the vertex count
//! by exactly that much, so edge subsets are grown in index order with an
//! incremental cycle check and every subset containing a cycle is skipped
//! together with all of its supersets. A contracted 6-vertex graph is `K6`
//! iff it has 15 edges.
//!
//! Two cuts keep the enumeration small. Every further contraction loses at
//! least one quotient edge, so a partial forest whose quotient has fewer
//! than `15 + remaining` edges is abandoned. A vertex of degree below 5
//! cannot be a class on its own, so it must be covered by a chosen edge
//! before the enumeration runs past its last incident edge.

use std::time::Instant;

use super::MinorError;
use crate::graph::{bits, Edge, Graph, MAX_VERTICES};

/// Outcome and work counters of one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct K6Search {
    pub found: bool,
    /// Forests of `n - 6` edges whose contraction was checked.
    pub forests_checked: u64,
    /// Partial subsets abandoned because the newest edge closed a cycle.
    pub cycles_skipped: u64,
    /// Partial forests abandoned by the edge-count or low-degree cut.
    pub pruned: u64,
}

#[derive(Clone, Copy)]
struct Classes {
    class_of: [u8; MAX_VERTICES],
    members: [u32; MAX_VERTICES],
    /// Quotient adjacency between class roots.
    qadj: [u32; MAX_VERTICES],
    qedges: usize,
    /// Vertices in classes of size at least 2.
    covered: u32,
}

struct Ctx<'a> {
    g: &'a Graph,
    edges: Vec<Edge>,
    need: usize,
    /// Vertices of degree below 5.
    low: u32,
    /// `dead_before[i]`: vertices with no incident edge at index `i` or later.
    dead_before: Vec<u32>,
    stats: K6Search,
    deadline: Option<Instant>,
    timed_out: bool,
}

const DEADLINE_STRIDE: u64 = 1 << 12;

impl Ctx<'_> {
    fn is_k6(&self, c: &Classes) -> bool {
        let n = self.g.order();
        let mut roots = [0usize; 6];
        let mut k = 0;
        for v in 0..n {
            if c.class_of[v] as usize == v {
                roots[k] = v;
                k += 1;
            }
        }
        debug_assert_eq!(k, 6);
        let mut reach = [0u32; 6];
        for (i, &r) in roots.iter().enumerate() {
            for v in bits(c.members[r]) {
                reach[i] |= self.g.neighbors(v);
            }
        }
        for i in 0..6 {
            for &r in &roots[i + 1..] {
                if reach[i] & c.members[r] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn rec(&mut self, start: usize, depth: usize, c: &Classes) -> bool {
        if depth == self.need {
            self.stats.forests_checked += 1;
            if let Some(dl) = self.deadline {
                if self.stats.forests_checked.is_multiple_of(DEADLINE_STRIDE) && Instant::now() >= dl {
                    self.timed_out = true;
                    return true;
                }
            }
            debug_assert_eq!(c.qedges == 15, self.is_k6(c));
            return c.qedges == 15;
        }
        let remaining = self.need - depth;
        let uncovered = self.low & !c.covered;
        if c.qedges < 15 + remaining
            || uncovered.count_ones() as usize > 2 * remaining
            || uncovered & self.dead_before[start] != 0
        {
            self.stats.pruned += 1;
            return false;
        }
        for i in start..=self.edges.len() - remaining {
            let e = self.edges[i];
            let (a, b) = (c.class_of[e.u] as usize, c.class_of[e.v] as usize);
            if a == b {
                self.stats.cycles_skipped += 1;
                continue;
            }
            let (keep, gone) = if a < b { (a, b) } else { (b, a) };
            let mut next = *c;
            for v in bits(next.members[gone]) {
                next.class_of[v] = keep as u8;
            }
            next.members[keep] |= next.members[gone];
            next.members[gone] = 0;
            next.covered |= next.members[keep];
            let common = c.qadj[keep] & c.qadj[gone];
            next.qedges -= 1 + common.count_ones() as usize;
            for r in bits(c.qadj[gone]) {
                next.qadj[r] &= !(1 << gone);
                if r != keep {
                    next.qadj[r] |= 1 << keep;
                }
            }
            next.qadj[keep] = (c.qadj[keep] | c.qadj[gone]) & !(1 << keep | 1 << gone);
            next.qadj[gone] = 0;
            if self.rec(i + 1, depth + 1, &next) {
                return true;
            }
        }
        false
    }
}

/// Runs the enumeration, stopping at the first `K6` found.
///
/// With a deadline the search gives up after it passes and returns
/// [`MinorError::TimedOut`].
pub fn k6_minor_search(g: &Graph, deadline: Option<Instant>) -> Result<K6Search, MinorError> {
    if !g.is_connected() {
        return Err(MinorError::NotConnected);
    }
    let n = g.order();
    if n < 6 {
        return Ok(K6Search::default());
    }
    let need = n - 6;
    let edges: Vec<Edge> = g.edges().collect();
    // contracting `need` edges removes at least `need` edges and K6 needs 15
    if edges.len() < need + 15 {
        return Ok(K6Search::default());
    }
    let mut classes = Classes {
        class_of: [0; MAX_VERTICES],
        members: [0; MAX_VERTICES],
        qadj: [0; MAX_VERTICES],
        qedges: edges.len(),
        covered: 0,
    };
    for v in 0..n {
        classes.class_of[v] = v as u8;
        classes.members[v] = 1 << v;
        classes.qadj[v] = g.neighbors(v);
    }
    let low = (0..n).filter(|&v| g.degree(v) < 5).fold(0u32, |acc, v| acc | 1 << v);
    let mut last = vec![0usize; n];
    for (i, e) in edges.iter().enumerate() {
        last[e.u] = i;
        last[e.v] = i;
    }
    let dead_before = (0..=edges.len())
        .map(|i| (0..n).filter(|&v| last[v] < i).fold(0u32, |acc, v| acc | 1 << v))
        .collect();
    let mut ctx = Ctx {
        g,
        edges,
        need,
        low,
        dead_before,
        stats: K6Search::default(),
        deadline,
        timed_out: false,
    };
    let found = ctx.rec(0, 0, &classes);
    if ctx.timed_out {
        return Err(MinorError::TimedOut);
    }
    Ok(K6Search { found, ..ctx.stats })
}

/// True iff the connected graph `g` contracts to `K6`.
pub fn has_k6_minor(g: &Graph) -> Result<bool, MinorError> {
    k6_minor_search(g, None).map(|s| s.found)
}

/// [`has_k6_minor`] applied to each connected component.
pub fn has_k6_minor_any_component(g: &Graph) -> bool {
    has_k6_minor_any_component_by(g, None).expect("no deadline was set")
}

/// [`has_k6_minor_any_component`] under a deadline shared by all components.
pub fn has_k6_minor_any_component_by(g: &Graph, deadline: Option<Instant>) -> Result<bool, MinorError> {
    for c in g.components() {
        let part = g.induced(c).expect("component fits");
        if k6_minor_search(&part, deadline)?.found {
            return Ok(true);
        }
    }
    Ok(false)
}
