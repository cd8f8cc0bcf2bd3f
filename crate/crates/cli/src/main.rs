use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use linkless::g6;
use linkless::minors::petersen_family;
use linkless::pipeline::{
    complement_check, filter_file, load_graphs, query, run_census, shard_file, CensusRunOptions, FilterOptions,
    PipelineError, Predicate, QueryChecks, QueryReport,
};
use linkless::search::{default_sieve, CensusOptions, SieveSpec, SourceManifest};
use serde_json::json;

#[derive(Parser)]
#[command(name = "linkless", version, about = "Intrinsic linking and maxnIL graph tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report properties of one graph given in graph6.
    Query(QueryArgs),
    /// Stream a graph6 file through a sieve and predicate.
    Filter(FilterArgs),
    /// Split a graph6 file into numbered pieces.
    Shard(ShardArgs),
    /// Enumerate maxnIL graphs of one order from source files.
    Census(CensusArgs),
    /// Print the Petersen family in graph6.
    Family(FamilyArgs),
    /// Decide intrinsic linking of the complement of every graph in a file.
    ComplementCheck(ComplementArgs),
}

#[derive(Args)]
struct QueryArgs {
    /// Graph in graph6.
    graph: String,
    #[arg(long)]
    planar: bool,
    #[arg(long)]
    maximal_planar: bool,
    #[arg(long)]
    apex: bool,
    #[arg(long = "2-apex")]
    two_apex: bool,
    #[arg(long)]
    k6_minor: bool,
    #[arg(long)]
    petersen_minor: bool,
    /// Intrinsic linking by both deciders.
    #[arg(long)]
    il: bool,
    #[arg(long)]
    maxnil: bool,
    #[arg(long)]
    triangular: bool,
    #[arg(long)]
    connectivity: bool,
    #[arg(long)]
    degrees: bool,
    #[arg(long)]
    complement: bool,
    /// Every check above; the default when none is given.
    #[arg(long)]
    all: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SieveArgs {
    /// Start from the default sieve for this order.
    #[arg(long)]
    sieve_n: Option<usize>,
    #[arg(long, requires = "sieve_n")]
    min_edges: Option<usize>,
    #[arg(long, requires = "sieve_n")]
    max_edges: Option<usize>,
    #[arg(long, requires = "sieve_n")]
    min_degree: Option<usize>,
    #[arg(long, requires = "sieve_n")]
    max_degree: Option<usize>,
}

impl SieveArgs {
    fn spec(&self) -> Result<Option<SieveSpec>, PipelineError> {
        let Some(n) = self.sieve_n else { return Ok(None) };
        let mut s = default_sieve(n)?;
        if let Some(v) = self.min_edges {
            s.min_edges = v;
        }
        if let Some(v) = self.max_edges {
            s.max_edges = v;
        }
        if let Some(v) = self.min_degree {
            s.min_degree = v;
        }
        if let Some(v) = self.max_degree {
            s.max_degree = v;
        }
        s.validate()?;
        Ok(Some(s))
    }
}

#[derive(Args)]
struct FilterArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: PathBuf,
    /// k6-minor-free, nil, maxnil or non-apex.
    #[arg(long)]
    predicate: Predicate,
    #[command(flatten)]
    sieve: SieveArgs,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Seconds allowed per K6 minor search before the graph is set aside.
    #[arg(long)]
    timeout_per_graph: Option<f64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ShardArgs {
    #[arg(long)]
    input: PathBuf,
    /// Directory for the pieces.
    #[arg(long)]
    output: PathBuf,
    #[arg(long, default_value_t = 1_000_000)]
    shard_size: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CensusArgs {
    /// Source graph6 files, read in the order given.
    #[arg(long, required = true, num_args = 1..)]
    input: Vec<PathBuf>,
    /// Directory for survivors, the census row and markers.
    #[arg(long)]
    output: PathBuf,
    /// Coverage declaration; defaults to the sidecar of a single input.
    #[arg(long)]
    source_manifest: Option<PathBuf>,
    /// Maximal planar graphs of order n-1 to cone.
    #[arg(long)]
    triangulations: Option<PathBuf>,
    /// maxnIL graphs of order n-1 to extend by a degree-3 vertex.
    #[arg(long)]
    previous: Option<PathBuf>,
    #[command(flatten)]
    sieve: SieveArgs,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long)]
    timeout_per_graph: Option<f64>,
    /// Check all three apex criteria on every survivor.
    #[arg(long)]
    verify_apex: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ComplementArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long)]
    json: bool,
}

fn timeout(secs: Option<f64>) -> Result<Option<Duration>, PipelineError> {
    secs.map(|s| Duration::try_from_secs_f64(s).map_err(|e| PipelineError::Usage(format!("--timeout-per-graph: {e}"))))
        .transpose()
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn print_report(r: &QueryReport) {
    println!("graph6: {}", r.graph6);
    println!("order: {}  edges: {}", r.order, r.edges);
    if let Some(p) = r.planar {
        println!("planar: {}", yes_no(p));
    }
    if let Some(p) = r.maximal_planar {
        println!("maximal-planar: {}", yes_no(p));
    }
    if let Some(a) = &r.apex {
        match a.witness {
            Some(v) => println!("apex: true (vertex {v})"),
            None => println!("apex: false"),
        }
    }
    if let Some(a) = &r.two_apex {
        match a.witness {
            Some([u, v]) => println!("2-apex: true (vertices {u}, {v})"),
            None => println!("2-apex: false"),
        }
    }
    if let Some(k) = r.k6_minor {
        println!("k6-minor: {}", yes_no(k));
    }
    if let Some(p) = &r.petersen_minor {
        match &p.member {
            Some(name) => println!("petersen-minor: true ({name})"),
            None => println!("petersen-minor: false"),
        }
    }
    if let Some(il) = &r.il {
        println!("IL: {} (both deciders)", yes_no(il.il));
    }
    if let Some(m) = r.maxnil {
        println!("maxnil: {}", yes_no(m));
    }
    if let Some(t) = &r.triangular {
        println!("triangular: {}", yes_no(t.triangular));
        for [u, v] in &t.non_triangular_edges {
            println!("  non-triangular edge {u}-{v}");
        }
    }
    if let Some(k) = r.connectivity {
        println!("connectivity: {k}");
    }
    if let Some(d) = &r.degrees {
        println!("degrees: min {} max {} sequence {:?}", d.min, d.max, d.sequence);
    }
    if let Some(c) = &r.complement {
        println!(
            "complement: IL {} (both deciders), k6-minor-free {}",
            yes_no(c.il_by_linking),
            yes_no(c.k6_minor_free)
        );
    }
}

fn cmd_query(a: &QueryArgs) -> Result<(), PipelineError> {
    let g = g6::decode(a.graph.trim().as_bytes()).map_err(|e| PipelineError::Usage(format!("bad graph6: {e}")))?;
    let mut checks = QueryChecks {
        planar: a.planar,
        maximal_planar: a.maximal_planar,
        apex: a.apex,
        two_apex: a.two_apex,
        k6_minor: a.k6_minor,
        petersen_minor: a.petersen_minor,
        il: a.il,
        maxnil: a.maxnil,
        triangular: a.triangular,
        connectivity: a.connectivity,
        degrees: a.degrees,
        complement: a.complement,
    };
    if a.all || checks.is_empty() {
        checks = QueryChecks::all();
    }
    let report = query(&g, &checks)?;
    if a.json {
        print_json(&report);
    } else {
        print_report(&report);
    }
    Ok(())
}

fn cmd_filter(a: &FilterArgs, command: Vec<String>) -> Result<(), PipelineError> {
    let m = filter_file(&FilterOptions {
        input: a.input.clone(),
        output: a.output.clone(),
        sieve: a.sieve.spec()?,
        predicate: a.predicate,
        jobs: a.jobs,
        timeout: timeout(a.timeout_per_graph)?,
        command,
    })?;
    if a.json {
        print_json(&m);
    } else {
        for s in &m.stages {
            println!("{:>14}  {}", s.stage, s.count);
        }
        if m.timed_out > 0 {
            println!("{} graphs timed out and were written aside", m.timed_out);
        }
    }
    Ok(())
}

fn cmd_shard(a: &ShardArgs, command: Vec<String>) -> Result<(), PipelineError> {
    let m = shard_file(&a.input, &a.output, a.shard_size, command)?;
    if a.json {
        print_json(&m);
    } else {
        for s in &m.shards {
            println!("{}  {}", s.path, s.records);
        }
    }
    Ok(())
}

fn load_optional(path: &Option<PathBuf>) -> Result<Vec<linkless::Graph>, PipelineError> {
    path.as_deref()
        .map(load_graphs)
        .transpose()
        .map(Option::unwrap_or_default)
}

fn cmd_census(a: &CensusArgs, command: Vec<String>) -> Result<(), PipelineError> {
    let sieve = a.sieve.spec()?;
    let n = match (sieve, a.sieve.sieve_n) {
        (Some(s), _) => s.n,
        _ => return Err(PipelineError::Usage("census needs --sieve-n".into())),
    };
    let manifest_path = match (&a.source_manifest, a.input.as_slice()) {
        (Some(p), _) => p.clone(),
        (None, [single]) => SourceManifest::sidecar_path(single),
        (None, _) => {
            return Err(PipelineError::Usage(
                "several inputs need an explicit --source-manifest".into(),
            ))
        }
    };
    if !manifest_path.exists() {
        return Err(PipelineError::IncompleteSource(format!(
            "no source manifest at {}",
            manifest_path.display()
        )));
    }
    let manifest = SourceManifest::load(&manifest_path)?;
    let run = run_census(&CensusRunOptions {
        n,
        inputs: a.input.clone(),
        manifest,
        out_dir: a.output.clone(),
        census: CensusOptions {
            sieve,
            triangulations: load_optional(&a.triangulations)?,
            previous_order: load_optional(&a.previous)?,
            jobs: a.jobs,
            verify_apex: a.verify_apex,
            timeout: timeout(a.timeout_per_graph)?,
        },
        command,
    })?;
    if a.json {
        print_json(&json!({ "row": run.row, "closure": run.closure, "resumed": run.manifest.resumed }));
    } else {
        let r = &run.row;
        println!(
            "n={}  total={}  apex={}  non-apex={}",
            r.n,
            r.total,
            r.apex,
            r.total - r.apex
        );
        let hist: Vec<String> = r.edge_histogram.iter().map(|(m, c)| format!("{m}:{c}")).collect();
        println!("edges {}", hist.join(" "));
        println!(
            "runtime {:.1}s  resumed sources {}",
            r.runtime_seconds, run.manifest.resumed
        );
    }
    Ok(())
}

fn cmd_family(a: &FamilyArgs) {
    let fam = petersen_family();
    if a.json {
        let rows: Vec<_> = fam
            .iter()
            .map(|(name, g)| json!({"name": name, "graph6": g6::encode_string(g), "order": g.order(), "edges": g.edge_count()}))
            .collect();
        print_json(&rows);
    } else {
        for (_, g) in fam.iter() {
            println!("{}", g6::encode_string(g));
        }
    }
}

fn cmd_complement(a: &ComplementArgs) -> Result<(), PipelineError> {
    let rows = complement_check(&a.input, a.jobs)?;
    if a.json {
        let out: Vec<_> = rows
            .iter()
            .map(|(g, v)| json!({"graph6": g6::encode_string(g), "complement": v}))
            .collect();
        print_json(&out);
    } else {
        let il = rows.iter().filter(|(_, v)| v.il_by_linking).count();
        for (g, v) in &rows {
            println!("{}  complement IL {}", g6::encode_string(g), yes_no(v.il_by_linking));
        }
        println!("{il} of {} complements are IL", rows.len());
    }
    Ok(())
}

fn run(cli: Cli, command: Vec<String>) -> Result<(), PipelineError> {
    match &cli.command {
        Command::Query(a) => cmd_query(a),
        Command::Filter(a) => cmd_filter(a, command),
        Command::Shard(a) => cmd_shard(a, command),
        Command::Census(a) => cmd_census(a, command),
        Command::Family(a) => {
            cmd_family(a);
            Ok(())
        }
        Command::ComplementCheck(a) => cmd_complement(a),
    }
}

fn main() -> ExitCode {
    let command: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli, command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("linkless: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
