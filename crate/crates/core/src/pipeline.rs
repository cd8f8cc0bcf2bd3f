//! File-level runs behind the CLI: filtering, sharding, resumable census
//! runs and single-graph queries. Every run leaves a JSON manifest next to
//! its outputs.

use std::fmt;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::g6::{self, encode, encode_string, G6Reader};
use crate::graph::{DegreeProfile, Graph};
use crate::linking::{is_maxnil, is_nil_linking};
use crate::minors::{has_k6_minor_any_component, has_k6_minor_any_component_by, petersen_family, petersen_minor};
use crate::planarity::{apex_report, is_maximal_planar, is_planar, two_apex, PlanarityError};
use crate::search::{
    census_sieve, filter_source, finish_census, thread_pool, CensusOptions, CensusRow, Closure, ComplementVerdict,
    Funnel, SearchError, SieveSpec, SourceManifest,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("incomplete source: {0}")]
    IncompleteSource(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl PipelineError {
    /// 1 usage, 2 I/O or bad data, 3 incomplete source, 4 invariant violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Usage(_) => 1,
            PipelineError::Io(_) => 2,
            PipelineError::IncompleteSource(_) => 3,
            PipelineError::Invariant(_) => 4,
        }
    }
}

impl From<SearchError> for PipelineError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::IncompleteSource(s) => PipelineError::IncompleteSource(s),
            SearchError::UnsupportedOrder(_) | SearchError::InvalidSieve(_) => PipelineError::Usage(e.to_string()),
            SearchError::Planarity(PlanarityError::ApexCriteriaDisagree { .. }) => {
                PipelineError::Invariant(e.to_string())
            }
            _ => PipelineError::Io(e.to_string()),
        }
    }
}

fn io_err(path: &Path, e: impl fmt::Display) -> PipelineError {
    PipelineError::Io(format!("{}: {e}", path.display()))
}

/// Size and SHA-256 of a file, plus its graph6 record count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
    pub bytes: u64,
    pub records: u64,
}

fn count_records(bytes: &[u8]) -> u64 {
    bytes
        .split(|&b| b == b'\n')
        .filter(|line| !g6::record_bytes(line).is_empty())
        .count() as u64
}

pub fn digest_bytes(path: &Path, bytes: &[u8]) -> FileDigest {
    FileDigest {
        path: path.display().to_string(),
        sha256: hex::encode(Sha256::digest(bytes)),
        bytes: bytes.len() as u64,
        records: count_records(bytes),
    }
}

pub fn digest_file(path: &Path) -> Result<FileDigest, PipelineError> {
    let bytes = fs::read(path).map_err(|e| io_err(path, e))?;
    Ok(digest_bytes(path, &bytes))
}

fn read_graphs(path: &Path) -> Result<Vec<Graph>, PipelineError> {
    let bytes = fs::read(path).map_err(|e| io_err(path, e))?;
    parse_graphs(path, &bytes)
}

fn parse_graphs(path: &Path, bytes: &[u8]) -> Result<Vec<Graph>, PipelineError> {
    G6Reader::new(bytes)
        .map(|rec| {
            let rec = rec.map_err(|e| io_err(path, e))?;
            rec.graph
                .map_err(|e| PipelineError::Io(format!("{}:{}: {e}", path.display(), rec.line)))
        })
        .collect()
}

fn write_graphs(path: &Path, graphs: &[Graph]) -> Result<FileDigest, PipelineError> {
    let mut bytes = Vec::with_capacity(graphs.len() * 16);
    for g in graphs {
        bytes.extend(encode(g));
        bytes.push(b'\n');
    }
    fs::write(path, &bytes).map_err(|e| io_err(path, e))?;
    Ok(digest_bytes(path, &bytes))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), PipelineError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| io_err(path, e))?;
    text.push('\n');
    fs::write(path, text).map_err(|e| io_err(path, e))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, PipelineError> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    serde_json::from_str(&text).map_err(|e| io_err(path, e))
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// `out.g6` is described by `out.g6.run.json`.
pub fn run_manifest_path(output: &Path) -> PathBuf {
    with_suffix(output, ".run.json")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageCount {
    pub stage: String,
    pub count: u64,
}

/// Persisted record of one pipeline run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: Vec<String>,
    pub tool_version: String,
    pub sieve: Option<SieveSpec>,
    pub predicate: Option<Predicate>,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
    /// Graphs alive after each stage, in chain order.
    pub stages: Vec<StageCount>,
    /// Graphs set aside because a minor search hit the per-graph limit.
    pub timed_out: u64,
    pub wall_seconds: f64,
    pub jobs: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure: Option<Closure>,
    /// Census sources whose completion marker was reused.
    #[serde(default)]
    pub resumed: usize,
}

impl RunManifest {
    pub fn stages_monotone(&self) -> bool {
        self.stages.windows(2).all(|w| w[0].count >= w[1].count)
    }

    /// Recomputes every output digest from disk.
    pub fn outputs_match_disk(&self) -> Result<bool, PipelineError> {
        for out in &self.outputs {
            if digest_file(Path::new(&out.path))?.sha256 != out.sha256 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn load(path: &Path) -> Result<Self, PipelineError> {
        read_json(path)
    }
}

/// Property a graph must have to survive [`filter_file`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    K6MinorFree,
    Nil,
    Maxnil,
    NonApex,
}

impl Predicate {
    pub const ALL: [Predicate; 4] = [
        Predicate::K6MinorFree,
        Predicate::Nil,
        Predicate::Maxnil,
        Predicate::NonApex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::K6MinorFree => "k6-minor-free",
            Predicate::Nil => "nil",
            Predicate::Maxnil => "maxnil",
            Predicate::NonApex => "non-apex",
        }
    }

    /// Stages run after the structural sieve, cheapest first.
    pub fn chain(self) -> &'static [&'static str] {
        match self {
            Predicate::K6MinorFree => &["k6-minor-free"],
            Predicate::Nil => &["k6-minor-free", "nil"],
            Predicate::Maxnil => &["k6-minor-free", "nil", "maxnil"],
            Predicate::NonApex => &["non-apex"],
        }
    }

    /// Number of chain stages `g` passes, stopping at the first failure.
    fn passes(self, g: &Graph, deadline: Option<Instant>) -> Result<usize, ()> {
        if self == Predicate::NonApex {
            return Ok(usize::from(!apex_report(g).is_apex));
        }
        if has_k6_minor_any_component_by(g, deadline).map_err(|_| ())? {
            return Ok(0);
        }
        if self == Predicate::K6MinorFree {
            return Ok(1);
        }
        if !is_nil_linking(g) {
            return Ok(1);
        }
        if self == Predicate::Nil {
            return Ok(2);
        }
        Ok(if is_maxnil(g) { 3 } else { 2 })
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = PipelineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| PipelineError::Usage(format!("unknown predicate {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct FilterOptions {
    pub input: PathBuf,
    pub output: PathBuf,
    pub sieve: Option<SieveSpec>,
    pub predicate: Predicate,
    /// 0 lets rayon decide.
    pub jobs: usize,
    pub timeout: Option<Duration>,
    pub command: Vec<String>,
}

/// Timed-out graphs of `out.g6` go to `out.g6.timeouts.g6`.
pub fn timeouts_path(output: &Path) -> PathBuf {
    with_suffix(output, ".timeouts.g6")
}

const BATCH: usize = 1 << 14;

/// Streams `input` through the sieve and predicate chain, writing
/// survivors in input order and a run manifest beside the output.
///
/// When the input has a source manifest sidecar and a sieve is given, the
/// sidecar must cover the sieve and match the record count.
pub fn filter_file(opts: &FilterOptions) -> Result<RunManifest, PipelineError> {
    let start = Instant::now();
    if let Some(s) = &opts.sieve {
        s.validate()?;
    }
    let bytes = fs::read(&opts.input).map_err(|e| io_err(&opts.input, e))?;
    let input_digest = digest_bytes(&opts.input, &bytes);
    let sidecar = SourceManifest::sidecar_path(&opts.input);
    if let (Some(sieve), true) = (&opts.sieve, sidecar.exists()) {
        let m = SourceManifest::load(&sidecar)?;
        m.covers(sieve)?;
        m.check_count(input_digest.records)?;
    }
    let pool = thread_pool(opts.jobs)?;
    let chain = opts.predicate.chain();
    // read, sieve, then the chain
    let mut counts = vec![0u64; 2 + chain.len()];
    let mut survivors = Vec::new();
    let mut timed_out = Vec::new();
    let mut reader = G6Reader::new(&bytes[..]);
    let mut batch = Vec::with_capacity(BATCH);
    loop {
        batch.clear();
        for rec in reader.by_ref().take(BATCH) {
            let rec = rec.map_err(|e| io_err(&opts.input, e))?;
            let g = rec
                .graph
                .map_err(|e| PipelineError::Io(format!("{}:{}: {e}", opts.input.display(), rec.line)))?;
            batch.push(g);
        }
        if batch.is_empty() {
            break;
        }
        let results: Vec<Option<Result<usize, ()>>> = pool.install(|| {
            batch
                .par_iter()
                .map(|g| {
                    if opts.sieve.is_some_and(|s| !s.admits(g)) {
                        return None;
                    }
                    let deadline = opts.timeout.map(|t| Instant::now() + t);
                    Some(opts.predicate.passes(g, deadline))
                })
                .collect()
        });
        for (g, r) in batch.iter().zip(results) {
            counts[0] += 1;
            match r {
                None => {}
                Some(Err(())) => {
                    counts[1] += 1;
                    timed_out.push(*g);
                }
                Some(Ok(k)) => {
                    for c in &mut counts[1..2 + k] {
                        *c += 1;
                    }
                    if k == chain.len() {
                        survivors.push(*g);
                    }
                }
            }
        }
    }
    let mut outputs = vec![write_graphs(&opts.output, &survivors)?];
    let tpath = timeouts_path(&opts.output);
    if !timed_out.is_empty() {
        outputs.push(write_graphs(&tpath, &timed_out)?);
    } else if tpath.exists() {
        fs::remove_file(&tpath).map_err(|e| io_err(&tpath, e))?;
    }
    let mut names = vec!["read".to_string(), "sieve".to_string()];
    names.extend(chain.iter().map(|s| s.to_string()));
    let manifest = RunManifest {
        command: opts.command.clone(),
        tool_version: TOOL_VERSION.to_string(),
        sieve: opts.sieve,
        predicate: Some(opts.predicate),
        inputs: vec![input_digest],
        outputs,
        stages: names
            .into_iter()
            .zip(counts)
            .map(|(stage, count)| StageCount { stage, count })
            .collect(),
        timed_out: timed_out.len() as u64,
        wall_seconds: start.elapsed().as_secs_f64(),
        jobs: pool.current_num_threads(),
        closure: None,
        resumed: 0,
    };
    write_json(&run_manifest_path(&opts.output), &manifest)?;
    Ok(manifest)
}

/// Record of a [`shard_file`] split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShardManifest {
    pub command: Vec<String>,
    pub tool_version: String,
    pub input: FileDigest,
    pub shard_size: u64,
    pub shards: Vec<FileDigest>,
}

/// Path of shard `index` of `input` inside `dir`.
pub fn shard_path(dir: &Path, input: &Path, index: usize) -> PathBuf {
    let stem = input.file_stem().unwrap_or_default().to_string_lossy();
    dir.join(format!("{stem}.part{index:04}.g6"))
}

/// Splits `input` into files of at most `shard_size` records each. Lines
/// are copied verbatim, so the shards concatenate back to the input.
pub fn shard_file(
    input: &Path,
    dir: &Path,
    shard_size: u64,
    command: Vec<String>,
) -> Result<ShardManifest, PipelineError> {
    if shard_size == 0 {
        return Err(PipelineError::Usage("shard size must be at least 1".into()));
    }
    let bytes = fs::read(input).map_err(|e| io_err(input, e))?;
    fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    let mut shards = Vec::new();
    let mut current: Vec<u8> = Vec::new();
    let mut in_current = 0u64;
    let flush = |buf: &mut Vec<u8>, shards: &mut Vec<FileDigest>| -> Result<(), PipelineError> {
        let path = shard_path(dir, input, shards.len());
        fs::write(&path, &buf).map_err(|e| io_err(&path, e))?;
        shards.push(digest_bytes(&path, buf));
        buf.clear();
        Ok(())
    };
    for line in bytes.split_inclusive(|&b| b == b'\n') {
        let is_record = !g6::record_bytes(line).is_empty();
        if is_record && in_current == shard_size {
            flush(&mut current, &mut shards)?;
            in_current = 0;
        }
        current.extend_from_slice(line);
        if is_record {
            in_current += 1;
        }
    }
    if !current.is_empty() {
        flush(&mut current, &mut shards)?;
    }
    let stem = input.file_stem().unwrap_or_default().to_string_lossy();
    let manifest = ShardManifest {
        command,
        tool_version: TOOL_VERSION.to_string(),
        input: digest_bytes(input, &bytes),
        shard_size,
        shards,
    };
    write_json(&dir.join(format!("{stem}.shards.json")), &manifest)?;
    Ok(manifest)
}

#[derive(Debug, Clone)]
pub struct CensusRunOptions {
    pub n: usize,
    /// Source files, in order; together they form one source.
    pub inputs: Vec<PathBuf>,
    /// Coverage declaration for the concatenated inputs.
    pub manifest: SourceManifest,
    pub out_dir: PathBuf,
    pub census: CensusOptions,
    pub command: Vec<String>,
}

/// Completion marker for one census source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShardMarker {
    pub source_sha256: String,
    pub output: FileDigest,
    pub funnel: Funnel,
}

#[derive(Debug, Clone)]
pub struct CensusRun {
    pub row: CensusRow,
    pub closure: Closure,
    pub survivors: Vec<Graph>,
    pub manifest: RunManifest,
}

fn marker_path(out_dir: &Path, input: &Path) -> PathBuf {
    let stem = input.file_stem().unwrap_or_default().to_string_lossy();
    out_dir.join(format!("{stem}.done.json"))
}

fn shard_output_path(out_dir: &Path, input: &Path) -> PathBuf {
    let stem = input.file_stem().unwrap_or_default().to_string_lossy();
    out_dir.join(format!("{stem}.maxnil.g6"))
}

/// Reuses a marker only if both the source and the recorded output still
/// hash to what it says.
fn reusable_marker(out_dir: &Path, input: &Path, source_sha: &str) -> Option<(ShardMarker, Vec<Graph>)> {
    let marker: ShardMarker = read_json(&marker_path(out_dir, input)).ok()?;
    if marker.source_sha256 != source_sha {
        return None;
    }
    let out = shard_output_path(out_dir, input);
    let bytes = fs::read(&out).ok()?;
    if hex::encode(Sha256::digest(&bytes)) != marker.output.sha256 {
        return None;
    }
    let graphs = parse_graphs(&out, &bytes).ok()?;
    Some((marker, graphs))
}

/// Runs a census over one or more source files with per-source completion
/// markers in `out_dir`, so an interrupted run resumes where it stopped.
///
/// Writes `maxnil_n{n}.g6` (sorted survivors), `census_n{n}.json` (the row)
/// and `census_n{n}.run.json`.
pub fn run_census(opts: &CensusRunOptions) -> Result<CensusRun, PipelineError> {
    let start = Instant::now();
    let n = opts.n;
    let sieve = census_sieve(n, &opts.census)?;
    opts.manifest.covers(&sieve)?;
    let pool = thread_pool(opts.census.jobs)?;
    fs::create_dir_all(&opts.out_dir).map_err(|e| io_err(&opts.out_dir, e))?;

    let mut whole = Sha256::new();
    let mut funnel = Funnel::default();
    let mut filtered = Vec::new();
    let mut inputs = Vec::new();
    let mut resumed = 0;
    for input in &opts.inputs {
        let bytes = fs::read(input).map_err(|e| io_err(input, e))?;
        whole.update(&bytes);
        let digest = digest_bytes(input, &bytes);
        let (marker, graphs) = match reusable_marker(&opts.out_dir, input, &digest.sha256) {
            Some(found) => {
                resumed += 1;
                found
            }
            None => {
                let pass = filter_source(n, &bytes[..], &sieve, &pool, opts.census.timeout)?;
                let output = write_graphs(&shard_output_path(&opts.out_dir, input), &pass.maxnil)?;
                let marker = ShardMarker {
                    source_sha256: digest.sha256.clone(),
                    output,
                    funnel: pass.funnel,
                };
                write_json(&marker_path(&opts.out_dir, input), &marker)?;
                (marker, pass.maxnil)
            }
        };
        funnel.absorb(&marker.funnel);
        filtered.extend(graphs);
        inputs.push(digest);
    }
    opts.manifest.check_count(funnel.read)?;
    let digest = hex::encode(whole.finalize());
    let out = finish_census(n, filtered, funnel, digest, &opts.census, &pool, start)?;
    if out.closure.apex_rejected > 0 {
        return Err(PipelineError::Invariant(format!(
            "{} cones over triangulations failed the maxnIL test",
            out.closure.apex_rejected
        )));
    }

    let survivors_path = opts.out_dir.join(format!("maxnil_n{n}.g6"));
    let row_path = opts.out_dir.join(format!("census_n{n}.json"));
    let survivors_digest = write_graphs(&survivors_path, &out.survivors)?;
    write_json(&row_path, &out.row)?;
    let f = &out.row.funnel;
    let after_sieve = f.read - f.sieved;
    let after_k6 = after_sieve - f.k6_minor;
    let after_nil = after_k6 - f.linked;
    let stages = [
        ("read", f.read),
        ("sieve", after_sieve),
        ("k6-minor-free", after_k6),
        ("nil", after_nil),
        ("maxnil", after_nil - f.not_maximal),
    ];
    let manifest = RunManifest {
        command: opts.command.clone(),
        tool_version: TOOL_VERSION.to_string(),
        sieve: Some(sieve),
        predicate: Some(Predicate::Maxnil),
        inputs,
        outputs: vec![survivors_digest, digest_file(&row_path)?],
        stages: stages
            .iter()
            .map(|(s, c)| StageCount {
                stage: s.to_string(),
                count: *c,
            })
            .collect(),
        timed_out: f.reruns,
        wall_seconds: start.elapsed().as_secs_f64(),
        jobs: pool.current_num_threads(),
        closure: Some(out.closure),
        resumed,
    };
    write_json(&opts.out_dir.join(format!("census_n{n}.run.json")), &manifest)?;
    Ok(CensusRun {
        row: out.row,
        closure: out.closure,
        survivors: out.survivors,
        manifest,
    })
}

/// Which properties [`query`] computes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QueryChecks {
    pub planar: bool,
    pub maximal_planar: bool,
    pub apex: bool,
    pub two_apex: bool,
    pub k6_minor: bool,
    pub petersen_minor: bool,
    pub il: bool,
    pub maxnil: bool,
    pub triangular: bool,
    pub connectivity: bool,
    pub degrees: bool,
    pub complement: bool,
}

impl QueryChecks {
    pub fn all() -> Self {
        QueryChecks {
            planar: true,
            maximal_planar: true,
            apex: true,
            two_apex: true,
            k6_minor: true,
            petersen_minor: true,
            il: true,
            maxnil: true,
            triangular: true,
            connectivity: true,
            degrees: true,
            complement: true,
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == QueryChecks::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApexAnswer {
    pub is_apex: bool,
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoApexAnswer {
    pub is_two_apex: bool,
    pub witness: Option<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PetersenAnswer {
    pub found: bool,
    /// First family member, in family order, that is a minor.
    pub member: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IlAnswer {
    pub il: bool,
    pub by_minors: bool,
    pub by_linking: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangularAnswer {
    pub triangular: bool,
    pub non_triangular_edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QueryReport {
    pub graph6: String,
    pub order: usize,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub planar: Option<bool>,
    /// `None` in the report also when the graph has fewer than 3 vertices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal_planar: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub apex: Option<ApexAnswer>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_apex: Option<TwoApexAnswer>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k6_minor: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub petersen_minor: Option<PetersenAnswer>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub il: Option<IlAnswer>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maxnil: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangular: Option<TriangularAnswer>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connectivity: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<DegreeProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement: Option<ComplementVerdict>,
}

/// Largest `k` such that `g` is `k`-connected.
pub fn connectivity(g: &Graph) -> usize {
    let mut k = 0;
    while k + 1 < g.order() && g.vertex_connectivity_at_least(k + 1) {
        k += 1;
    }
    if g.order() > 1 && k == g.order() - 2 && g.edge_count() == g.order() * (g.order() - 1) / 2 {
        // complete graphs are (n-1)-connected by convention
        k += 1;
    }
    k
}

/// Evaluates the requested properties of `g`. The two intrinsic-linking
/// deciders must agree; a disagreement is reported as an invariant error.
pub fn query(g: &Graph, checks: &QueryChecks) -> Result<QueryReport, PipelineError> {
    let mut r = QueryReport {
        graph6: encode_string(g),
        order: g.order(),
        edges: g.edge_count(),
        planar: None,
        maximal_planar: None,
        apex: None,
        two_apex: None,
        k6_minor: None,
        petersen_minor: None,
        il: None,
        maxnil: None,
        triangular: None,
        connectivity: None,
        degrees: None,
        complement: None,
    };
    if checks.planar {
        r.planar = Some(is_planar(g));
    }
    if checks.maximal_planar {
        r.maximal_planar = is_maximal_planar(g).ok();
    }
    if checks.apex {
        let a = apex_report(g);
        r.apex = Some(ApexAnswer {
            is_apex: a.is_apex,
            witness: a.witness,
        });
    }
    if checks.two_apex {
        let w = two_apex(g);
        r.two_apex = Some(TwoApexAnswer {
            is_two_apex: w.is_some(),
            witness: w.map(|(u, v)| [u, v]),
        });
    }
    if checks.k6_minor {
        r.k6_minor = Some(has_k6_minor_any_component(g));
    }
    let minor_member = (checks.petersen_minor || checks.il).then(|| petersen_minor(g));
    if checks.petersen_minor {
        let m = minor_member.flatten();
        r.petersen_minor = Some(PetersenAnswer {
            found: m.is_some(),
            member: m.map(|i| petersen_family().name(i).to_string()),
        });
    }
    if checks.il || checks.maxnil {
        let by_linking = !is_nil_linking(g);
        if checks.il {
            let by_minors = minor_member.flatten().is_some();
            if by_minors != by_linking {
                return Err(PipelineError::Invariant(format!(
                    "deciders disagree on {}: minors say {by_minors}, linking says {by_linking}",
                    r.graph6
                )));
            }
            r.il = Some(IlAnswer {
                il: by_linking,
                by_minors,
                by_linking,
            });
        }
        if checks.maxnil {
            r.maxnil = Some(!by_linking && is_maxnil(g));
        }
    }
    if checks.triangular {
        let non: Vec<[usize; 2]> = g.non_triangular_edges().into_iter().map(|e| [e.u, e.v]).collect();
        r.triangular = Some(TriangularAnswer {
            triangular: non.is_empty(),
            non_triangular_edges: non,
        });
    }
    if checks.connectivity {
        r.connectivity = Some(connectivity(g));
    }
    if checks.degrees {
        r.degrees = Some(g.degree_profile());
    }
    if checks.complement {
        let v = crate::search::complement_verdict(g);
        if v.il_by_minors != v.il_by_linking {
            return Err(PipelineError::Invariant(format!(
                "deciders disagree on the complement of {}",
                r.graph6
            )));
        }
        r.complement = Some(v);
    }
    Ok(r)
}

/// Complement verdicts for every graph of a file, in file order.
pub fn complement_check(input: &Path, jobs: usize) -> Result<Vec<(Graph, ComplementVerdict)>, PipelineError> {
    let graphs = read_graphs(input)?;
    let pool = thread_pool(jobs)?;
    let verdicts: Vec<ComplementVerdict> =
        pool.install(|| graphs.par_iter().map(crate::search::complement_verdict).collect());
    for (g, v) in graphs.iter().zip(&verdicts) {
        if v.il_by_minors != v.il_by_linking {
            return Err(PipelineError::Invariant(format!(
                "deciders disagree on the complement of {}",
                encode_string(g)
            )));
        }
    }
    Ok(graphs.into_iter().zip(verdicts).collect())
}

/// Loads a graph6 file; exposed for the CLI's auxiliary inputs.
pub fn load_graphs(path: &Path) -> Result<Vec<Graph>, PipelineError> {
    read_graphs(path)
}

/// Writes graphs one per line; used for auxiliary outputs.
pub fn save_graphs(path: &Path, graphs: &[Graph]) -> Result<FileDigest, PipelineError> {
    let mut w = BufWriter::new(fs::File::create(path).map_err(|e| io_err(path, e))?);
    for g in graphs {
        w.write_all(&encode(g)).map_err(|e| io_err(path, e))?;
        w.write_all(b"\n").map_err(|e| io_err(path, e))?;
    }
    w.flush().map_err(|e| io_err(path, e))?;
    drop(w);
    digest_file(path)
}
