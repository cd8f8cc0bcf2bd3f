//! Census of maxnIL graphs of one order from an externally generated source.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, BufReader, Read};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::sieve::{default_sieve, SieveSpec};
use super::streams::{apex_maxnil_from_triangulations, degree3_extensions, is_maxnil_candidate};
use super::{sort_for_output, SearchError};
use crate::g6::G6Reader;
use crate::graph::Graph;
use crate::linking::{is_maxnil, is_nil_linking};
use crate::minors::{has_k6_minor_any_component, has_k6_minor_any_component_by, IsoSet, MinorError};
use crate::planarity::{classify_maxnil_apex, PlanarityError};

/// What a graph6 source file claims to contain: every graph of `order`
/// within the stated bounds, `count` records in total.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceManifest {
    pub order: usize,
    pub min_edges: usize,
    pub max_edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub min_connectivity: usize,
    pub count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
}

impl SourceManifest {
    /// `foo.g6` is described by `foo.manifest.json`.
    pub fn sidecar_path(source: &Path) -> PathBuf {
        source.with_extension("manifest.json")
    }

    pub fn load(path: &Path) -> Result<Self, SearchError> {
        let text = fs::read_to_string(path).map_err(|e| SearchError::Io(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| SearchError::Manifest(format!("{}: {e}", path.display())))
    }

    /// Checks that the declared coverage includes everything the sieve admits.
    pub fn covers(&self, sieve: &SieveSpec) -> Result<(), SearchError> {
        let mut gaps = Vec::new();
        if self.order != sieve.n {
            gaps.push(format!("order {} instead of {}", self.order, sieve.n));
        }
        if self.min_edges > sieve.min_edges || self.max_edges < sieve.max_edges {
            gaps.push(format!(
                "edges {}..={} do not cover {}..={}",
                self.min_edges, self.max_edges, sieve.min_edges, sieve.max_edges
            ));
        }
        if self.min_degree > sieve.min_degree || self.max_degree < sieve.max_degree {
            gaps.push(format!(
                "degrees {}..={} do not cover {}..={}",
                self.min_degree, self.max_degree, sieve.min_degree, sieve.max_degree
            ));
        }
        if self.min_connectivity > sieve.min_connectivity {
            gaps.push(format!(
                "connectivity {} exceeds {}",
                self.min_connectivity, sieve.min_connectivity
            ));
        }
        if gaps.is_empty() {
            Ok(())
        } else {
            Err(SearchError::IncompleteSource(gaps.join("; ")))
        }
    }

    pub fn check_count(&self, records: u64) -> Result<(), SearchError> {
        if records == self.count {
            Ok(())
        } else {
            Err(SearchError::IncompleteSource(format!(
                "manifest declares {} records, source has {records}",
                self.count
            )))
        }
    }
}

/// Stage at which a graph left the census filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Outside the structural bounds.
    Sieved,
    K6Minor,
    /// Intrinsically linked.
    Linked,
    /// Linklessly embeddable but some added edge keeps it so.
    NotMaximal,
    Maxnil,
}

pub fn classify(g: &Graph, sieve: &SieveSpec) -> Verdict {
    if !sieve.admits(g) {
        Verdict::Sieved
    } else if sieve.require_k6_minor_free && has_k6_minor_any_component(g) {
        Verdict::K6Minor
    } else if !is_nil_linking(g) {
        Verdict::Linked
    } else if !is_maxnil(g) {
        Verdict::NotMaximal
    } else {
        Verdict::Maxnil
    }
}

/// How many source graphs stopped at each stage.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Funnel {
    pub read: u64,
    pub sieved: u64,
    pub k6_minor: u64,
    pub linked: u64,
    pub not_maximal: u64,
    pub maxnil: u64,
    /// Graphs whose `K6` search timed out and was rerun without a limit.
    #[serde(default)]
    pub reruns: u64,
}

impl Funnel {
    /// Adds another pass's counts.
    pub fn absorb(&mut self, other: &Funnel) {
        self.read += other.read;
        self.sieved += other.sieved;
        self.k6_minor += other.k6_minor;
        self.linked += other.linked;
        self.not_maximal += other.not_maximal;
        self.maxnil += other.maxnil;
        self.reruns += other.reruns;
    }

    pub fn record(&mut self, v: Verdict) {
        self.read += 1;
        match v {
            Verdict::Sieved => self.sieved += 1,
            Verdict::K6Minor => self.k6_minor += 1,
            Verdict::Linked => self.linked += 1,
            Verdict::NotMaximal => self.not_maximal += 1,
            Verdict::Maxnil => self.maxnil += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub total: usize,
    pub apex: usize,
    pub edge_histogram: BTreeMap<usize, usize>,
    pub runtime_seconds: f64,
    /// SHA-256 of the source bytes, hex.
    pub input_digest: String,
    pub funnel: Funnel,
}

/// How the constructive streams relate to the filtered source.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Closure {
    pub apex_stream: usize,
    /// Cones that failed the maxnIL test; nonzero means a bug.
    pub apex_rejected: usize,
    pub extension_raw: usize,
    pub extension_candidates: usize,
    pub extension_maxnil: usize,
    /// Stream graphs missing from the filtered source.
    pub merged_new: usize,
}

#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    /// Defaults to [`default_sieve`].
    pub sieve: Option<SieveSpec>,
    /// Maximal planar graphs of order `n - 1`, coned into apex candidates.
    pub triangulations: Vec<Graph>,
    /// maxnIL graphs of order `n - 1`, extended by a degree-3 vertex.
    pub previous_order: Vec<Graph>,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Cross-check the three apex criteria on every survivor.
    pub verify_apex: bool,
    /// Per-graph limit on the `K6` search before it is deferred.
    pub timeout: Option<Duration>,
}

#[derive(Debug, Clone)]
pub struct CensusOutput {
    pub row: CensusRow,
    /// Sorted by edge count, then graph6 bytes.
    pub survivors: Vec<Graph>,
    pub closure: Closure,
}

struct HashingReader<R> {
    inner: R,
    hasher: Sha256,
}

impl<R: Read> Read for HashingReader<R> {
    fn read(&mut self, buf: &mut [u8]) -> io::Result<usize> {
        let k = self.inner.read(buf)?;
        self.hasher.update(&buf[..k]);
        Ok(k)
    }
}

const BATCH: usize = 1 << 14;

/// A rayon pool with `jobs` workers; 0 picks the available parallelism.
pub fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool, SearchError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| SearchError::ThreadPool(e.to_string()))
}

/// What one pass over a source produced.
#[derive(Debug, Clone)]
pub struct SourcePass {
    pub funnel: Funnel,
    /// maxnIL graphs in source order.
    pub maxnil: Vec<Graph>,
    /// SHA-256 of the source bytes, hex.
    pub digest: String,
}

/// [`classify`] with a deadline on the `K6` stage.
pub fn classify_by(g: &Graph, sieve: &SieveSpec, deadline: Option<Instant>) -> Result<Verdict, MinorError> {
    if !sieve.admits(g) {
        return Ok(Verdict::Sieved);
    }
    if sieve.require_k6_minor_free && has_k6_minor_any_component_by(g, deadline)? {
        return Ok(Verdict::K6Minor);
    }
    Ok(if !is_nil_linking(g) {
        Verdict::Linked
    } else if !is_maxnil(g) {
        Verdict::NotMaximal
    } else {
        Verdict::Maxnil
    })
}

/// Classifies every record of `source`, in parallel batches.
///
/// Graphs whose `K6` search outlives `timeout` are set aside and rerun
/// without a limit once the pass is over, so the result never depends on
/// the timeout.
pub fn filter_source<R: Read>(
    n: usize,
    source: R,
    sieve: &SieveSpec,
    pool: &rayon::ThreadPool,
    timeout: Option<Duration>,
) -> Result<SourcePass, SearchError> {
    let mut hashing = HashingReader {
        inner: source,
        hasher: Sha256::new(),
    };
    let mut funnel = Funnel::default();
    // (sequence number, graph) so reruns land in source order
    let mut maxnil: Vec<(u64, Graph)> = Vec::new();
    let mut slow: Vec<(u64, Graph)> = Vec::new();
    {
        let mut reader = G6Reader::new(BufReader::new(&mut hashing));
        let mut batch: Vec<Graph> = Vec::with_capacity(BATCH);
        loop {
            batch.clear();
            for rec in reader.by_ref().take(BATCH) {
                let rec = rec.map_err(|e| SearchError::Io(e.to_string()))?;
                let g = rec.graph.map_err(|source| SearchError::G6 { line: rec.line, source })?;
                if g.order() != n {
                    return Err(SearchError::IncompleteSource(format!(
                        "line {} has order {} instead of {n}",
                        rec.line,
                        g.order()
                    )));
                }
                batch.push(g);
            }
            if batch.is_empty() {
                break;
            }
            let verdicts: Vec<Result<Verdict, MinorError>> = pool.install(|| {
                batch
                    .par_iter()
                    .map(|g| classify_by(g, sieve, timeout.map(|t| Instant::now() + t)))
                    .collect()
            });
            let base = funnel.read + slow.len() as u64;
            for (i, (g, v)) in batch.iter().zip(verdicts).enumerate() {
                let seq = base + i as u64;
                match v {
                    Ok(v) => {
                        funnel.record(v);
                        if v == Verdict::Maxnil {
                            maxnil.push((seq, *g));
                        }
                    }
                    Err(_) => slow.push((seq, *g)),
                }
            }
        }
    }
    funnel.reruns = slow.len() as u64;
    let verdicts: Vec<Verdict> = pool.install(|| slow.par_iter().map(|(_, g)| classify(g, sieve)).collect());
    for ((seq, g), v) in slow.into_iter().zip(verdicts) {
        funnel.record(v);
        if v == Verdict::Maxnil {
            maxnil.push((seq, g));
        }
    }
    maxnil.sort_by_key(|(seq, _)| *seq);
    Ok(SourcePass {
        funnel,
        maxnil: maxnil.into_iter().map(|(_, g)| g).collect(),
        digest: hex::encode(hashing.hasher.finalize()),
    })
}

/// The sieve a census of order `n` runs with.
pub fn census_sieve(n: usize, options: &CensusOptions) -> Result<SieveSpec, SearchError> {
    let sieve = match options.sieve {
        Some(s) => s,
        None => default_sieve(n)?,
    };
    sieve.validate()?;
    if sieve.n != n {
        return Err(SearchError::InvalidSieve(sieve));
    }
    Ok(sieve)
}

/// Filters `source` down to its maxnIL graphs and merges in the apex and
/// degree-3 streams.
///
/// The manifest must declare coverage of the sieve, and the record count
/// must match it, or the result would not be a census.
pub fn census<R: Read>(
    n: usize,
    source: R,
    manifest: &SourceManifest,
    options: &CensusOptions,
) -> Result<CensusOutput, SearchError> {
    let start = Instant::now();
    let sieve = census_sieve(n, options)?;
    manifest.covers(&sieve)?;
    let pool = thread_pool(options.jobs)?;
    let pass = filter_source(n, source, &sieve, &pool, options.timeout)?;
    manifest.check_count(pass.funnel.read)?;
    finish_census(n, pass.maxnil, pass.funnel, pass.digest, options, &pool, start)
}

/// Merges the constructive streams into the filtered graphs and tallies
/// the row.
pub fn finish_census(
    n: usize,
    filtered: Vec<Graph>,
    funnel: Funnel,
    input_digest: String,
    options: &CensusOptions,
    pool: &rayon::ThreadPool,
    start: Instant,
) -> Result<CensusOutput, SearchError> {
    let mut found = IsoSet::new();
    for g in filtered {
        found.insert(g);
    }
    let mut closure = Closure::default();
    if !options.triangulations.is_empty() {
        let cones = apex_maxnil_from_triangulations(options.triangulations.iter().copied())?;
        closure.apex_stream = cones.len();
        let verdicts: Vec<bool> = pool.install(|| cones.par_iter().map(is_maxnil_candidate).collect());
        for (g, ok) in cones.into_iter().zip(verdicts) {
            if !ok {
                closure.apex_rejected += 1;
            } else if found.insert(g) {
                closure.merged_new += 1;
            }
        }
    }
    if !options.previous_order.is_empty() {
        let ext = degree3_extensions(&options.previous_order)?;
        closure.extension_raw = ext.raw;
        closure.extension_candidates = ext.graphs.len();
        let verdicts: Vec<bool> = pool.install(|| ext.graphs.par_iter().map(is_maxnil_candidate).collect());
        for (g, ok) in ext.graphs.into_iter().zip(verdicts) {
            if ok {
                closure.extension_maxnil += 1;
                if found.insert(g) {
                    closure.merged_new += 1;
                }
            }
        }
    }

    let mut survivors = found.into_graphs();
    sort_for_output(&mut survivors);
    let apex_flags: Vec<Result<bool, PlanarityError>> = pool.install(|| {
        survivors
            .par_iter()
            .map(|g| classify_maxnil_apex(g, options.verify_apex))
            .collect()
    });
    let mut apex = 0;
    let mut edge_histogram = BTreeMap::new();
    for (g, flag) in survivors.iter().zip(apex_flags) {
        if flag? {
            apex += 1;
        }
        *edge_histogram.entry(g.edge_count()).or_insert(0) += 1;
    }
    Ok(CensusOutput {
        row: CensusRow {
            n,
            total: survivors.len(),
            apex,
            edge_histogram,
            runtime_seconds: start.elapsed().as_secs_f64(),
            input_digest,
            funnel,
        },
        survivors,
        closure,
    })
}
