//! Intrinsic linking decided by mod-2 linking numbers.
//!
//! Fix the book diagram of `G`. Changing a crossing between two disjoint
//! edges `e`, `f` flips the linking number of exactly those links that
//! carry `e` and `f` in different components, and such twists reach every
//! embedding. With one unknown `x_ef` per disjoint edge pair, `G` is
//! linklessly embeddable iff the system
//!
//! ```text
//! sum over e in C1, f in C2 of x_ef = lk2(C1, C2)    for all disjoint C1, C2
//! ```
//!
//! is solvable over GF(2).
//!
//! Both sides are bilinear in the edge sets of `C1` and `C2`, so the rows
//! with `C2` chordless and `C1` a fundamental cycle of `G - V(C2)` already
//! span every row: a chord splits `C2` into two shorter cycles on a subset
//! of its vertices, and any `C1` avoiding `V(C2)` is a sum of fundamental
//! cycles there. [`is_nil_linking`] builds that reduced system;
//! [`linking_report_exhaustive`] builds one row per disjoint cycle pair.

mod cycles;
mod diagram;
mod gf2;

use thiserror::Error;

use crate::graph::Graph;

pub use cycles::{
    enumerate_disjoint_cycle_pairs, induced_cycles, simple_cycles, simple_cycles_within, Cycle, CyclePair,
    DisjointCyclePairs,
};
pub use diagram::{interleaved, BookDiagram};
pub use gf2::{Gf2System, Insertion};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkingError {
    #[error("cycles share a vertex")]
    NotDisjoint,
    #[error("{0:?} is not a simple cycle")]
    NotACycle(Vec<usize>),
}

pub fn build_diagram(g: &Graph) -> BookDiagram {
    BookDiagram::new(g)
}

/// Mod-2 linking number of two disjoint cycles in `diagram`.
pub fn lk2(diagram: &BookDiagram, c1: &Cycle, c2: &Cycle) -> Result<u8, LinkingError> {
    diagram.lk2(c1, c2)
}

/// Size and verdict of one linking system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkingReport {
    pub nil: bool,
    /// Links turned into equations, duplicates included.
    pub equations: u64,
    pub duplicates: u64,
    pub rank: usize,
    /// Distinct disjoint edge pairs that received a column.
    pub columns: usize,
}

/// Equations over lazily numbered edge-pair columns.
struct LinkingSystem {
    diagram: BookDiagram,
    column_of: Vec<u32>,
    next_column: u32,
    system: Gf2System,
    scratch: Vec<usize>,
}

const NO_COLUMN: u32 = u32::MAX;

impl LinkingSystem {
    fn new(g: &Graph) -> Self {
        let diagram = BookDiagram::new(g);
        let m = diagram.edge_count();
        LinkingSystem {
            diagram,
            column_of: vec![NO_COLUMN; m * m],
            next_column: 0,
            system: Gf2System::new(),
            scratch: Vec::new(),
        }
    }

    fn column(&mut self, e: usize, f: usize) -> usize {
        let (a, b) = if e < f { (e, f) } else { (f, e) };
        let slot = &mut self.column_of[a * self.diagram.edge_count() + b];
        if *slot == NO_COLUMN {
            *slot = self.next_column;
            self.next_column += 1;
        }
        *slot as usize
    }

    /// Adds the equation of the link `(c1, c2)`, both given as edge indices.
    fn add_link(&mut self, c1: &[usize], c2: &[usize]) -> Insertion {
        let rhs = self.diagram.over_parity(c1, c2);
        let mut cols = std::mem::take(&mut self.scratch);
        cols.clear();
        for &e in c1 {
            for &f in c2 {
                cols.push(self.column(e, f));
            }
        }
        cols.sort_unstable();
        let outcome = self.system.insert(&cols, rhs);
        self.scratch = cols;
        outcome
    }

    fn report(&self) -> LinkingReport {
        LinkingReport {
            nil: self.system.is_consistent(),
            equations: self.system.equations_offered(),
            duplicates: self.system.duplicates(),
            rank: self.system.rank(),
            columns: self.next_column as usize,
        }
    }
}

/// Builds the reduced system, stopping at the first inconsistency.
pub fn linking_report(g: &Graph) -> LinkingReport {
    let mut sys = LinkingSystem::new(g);
    let mut chordless = induced_cycles(g);
    // short cycles leave the most room for a disjoint partner
    chordless.sort_by_key(|c| c.len());
    'outer: for c2 in &chordless {
        let rest = g.vertex_set() & !c2.mask();
        let partners = cycles::fundamental_cycles(g, &sys.diagram, rest);
        if partners.is_empty() {
            continue;
        }
        let c2_edges = sys.diagram.cycle_edges(c2);
        for c1 in &partners {
            if sys.add_link(c1, &c2_edges) == Insertion::Inconsistent {
                break 'outer;
            }
        }
    }
    sys.report()
}

/// Builds one equation per unordered pair of disjoint simple cycles,
/// stopping at the first inconsistency.
pub fn linking_report_exhaustive(g: &Graph) -> LinkingReport {
    let mut sys = LinkingSystem::new(g);
    let cycles = simple_cycles(g);
    let edges: Vec<Vec<usize>> = cycles.iter().map(|c| sys.diagram.cycle_edges(c)).collect();
    'outer: for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if cycles[i].mask() & cycles[j].mask() != 0 {
                continue;
            }
            if sys.add_link(&edges[i], &edges[j]) == Insertion::Inconsistent {
                break 'outer;
            }
        }
    }
    sys.report()
}

/// True iff `g` has a linkless embedding.
pub fn is_nil_linking(g: &Graph) -> bool {
    linking_report(g).nil
}

/// True iff `g` is linklessly embeddable and adding any missing edge makes
/// it intrinsically linked.
pub fn is_maxnil(g: &Graph) -> bool {
    is_nil_linking(g)
        && g.non_edges()
            .all(|e| !is_nil_linking(&g.with_edge(e.u, e.v).expect("non-edge endpoints are valid")))
}
