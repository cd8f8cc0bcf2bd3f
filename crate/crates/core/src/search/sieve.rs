use serde::{Deserialize, Serialize};

use super::SearchError;
use crate::graph::Graph;

/// Structural bounds a maxnIL candidate of order `n` must meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SieveSpec {
    pub n: usize,
    pub min_edges: usize,
    pub max_edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub min_connectivity: usize,
    pub require_k6_minor_free: bool,
}

pub const MIN_ORDER: usize = 3;
pub const MAX_ORDER: usize = 13;

/// Per-order bounds for maxnIL graphs.
///
/// A graph with `4n - 9` or more edges has a `K6` minor, so at most
/// `4n - 10` survive for `n >= 6`. Orders 7 through 11 force minimum degree
/// 3; orders 7 through 10 force at least `2n` edges and order 11 at least 22.
/// Every maxnIL graph is 2-connected.
pub fn default_sieve(n: usize) -> Result<SieveSpec, SearchError> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return Err(SearchError::UnsupportedOrder(n));
    }
    let min_edges = match n {
        7..=10 => 2 * n,
        11 => 22,
        _ => n,
    };
    let max_edges = if n >= 6 { 4 * n - 10 } else { n * (n - 1) / 2 };
    let min_degree = if (7..=11).contains(&n) { 3 } else { 2 };
    Ok(SieveSpec {
        n,
        min_edges,
        max_edges,
        min_degree,
        max_degree: n - 1,
        min_connectivity: 2,
        require_k6_minor_free: true,
    })
}

/// Bounds for the non-apex phase: apex maxnIL graphs come from
/// triangulations, so at order 11 the remaining graphs have no vertex of
/// degree 10 and, after the degree-3 extensions, none of degree 3 either.
pub fn non_apex_sieve(n: usize) -> Result<SieveSpec, SearchError> {
    let mut s = default_sieve(n)?;
    if n == 11 {
        s.min_degree = 4;
        s.max_degree = 9;
    }
    Ok(s)
}

impl SieveSpec {
    pub fn validate(&self) -> Result<(), SearchError> {
        let n = self.n;
        let ok = n >= 1
            && self.min_edges <= self.max_edges
            && self.max_edges <= n * (n - 1) / 2
            && self.min_degree <= self.max_degree
            && self.max_degree < n.max(1)
            && self.min_connectivity < n.max(2);
        if ok {
            Ok(())
        } else {
            Err(SearchError::InvalidSieve(*self))
        }
    }

    /// Order, edge, degree and connectivity bounds; the `K6` test is separate.
    pub fn admits(&self, g: &Graph) -> bool {
        g.order() == self.n
            && (self.min_edges..=self.max_edges).contains(&g.edge_count())
            && g.min_degree() >= self.min_degree
            && g.max_degree() <= self.max_degree
            && g.vertex_connectivity_at_least(self.min_connectivity)
    }
}
