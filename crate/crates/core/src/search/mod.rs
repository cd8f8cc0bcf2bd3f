//! maxnIL enumeration: sieves, constructive streams and the census.

mod census;
mod sieve;
mod streams;

use thiserror::Error;

use crate::g6::{encode, G6Error};
use crate::graph::{Graph, GraphError};
use crate::planarity::PlanarityError;

pub use census::{
    census, census_sieve, classify, classify_by, filter_source, finish_census, thread_pool, CensusOptions,
    CensusOutput, CensusRow, Closure, Funnel, SourceManifest, SourcePass, Verdict,
};
pub use sieve::{default_sieve, non_apex_sieve, SieveSpec, MAX_ORDER, MIN_ORDER};
pub use streams::{
    apex_maxnil_from_triangulations, complement_verdict, complement_verdicts, degree3_extensions, is_maxnil_candidate,
    ComplementVerdict, Extensions,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {0} is outside the supported range {MIN_ORDER}..={MAX_ORDER}")]
    UnsupportedOrder(usize),
    #[error("inconsistent sieve bounds {0:?}")]
    InvalidSieve(SieveSpec),
    #[error("input {index} is not maximal planar")]
    NotMaximalPlanar { index: usize },
    #[error("source does not cover the search space: {0}")]
    IncompleteSource(String),
    #[error("bad manifest: {0}")]
    Manifest(String),
    #[error("line {line}: {source}")]
    G6 { line: u64, source: G6Error },
    #[error("i/o: {0}")]
    Io(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Planarity(#[from] PlanarityError),
}

/// Output order used everywhere: edge count, then graph6 bytes.
pub fn sort_for_output(graphs: &mut [Graph]) {
    graphs.sort_by_cached_key(|g| (g.edge_count(), encode(g)));
}
