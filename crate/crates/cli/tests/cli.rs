use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use linkless::g6::encode_string;
use linkless::Graph;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_linkless"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn query_examples() {
    let o = run(&["query", "E~~w", "--il"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("IL: true (both deciders)"));

    let k6e = encode_string(&Graph::complete(6).unwrap().without_edge(0, 1).unwrap());
    let o = run(&["query", &k6e, "--maxnil"]);
    assert!(stdout(&o).contains("maxnil: true"));

    let c5 = encode_string(&Graph::cycle(5).unwrap());
    let o = run(&["query", &c5, "--planar", "--il", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["planar"], true);
    assert_eq!(v["il"]["il"], false);
    assert!(v.get("apex").is_none());
}

#[test]
fn query_petersen_names_member() {
    let o = run(&[
        "query",
        &encode_string(&Graph::petersen()),
        "--petersen-minor",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["petersen_minor"]["member"], "Petersen");
}

#[test]
fn family_prints_seven_graphs() {
    let o = run(&["family"]);
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0], "E~~w");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["query", "!!"]).status.code(), Some(1));
    assert_eq!(
        run(&[
            "filter",
            "--input",
            "/nonexistent.g6",
            "--output",
            "/tmp/x.g6",
            "--predicate",
            "nil"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&["filter", "--input", "x", "--output", "y", "--predicate", "planar"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&[
            "filter",
            "--input",
            "x",
            "--output",
            "y",
            "--predicate",
            "nil",
            "--min-edges",
            "3"
        ])
        .status
        .code(),
        Some(1)
    );
}

#[test]
fn filter_order7_maxnil() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("max7.g6");
    let source = data("census_source_n7.g6");
    let args = [
        "filter",
        "--input",
        p(&source),
        "--output",
        p(&out),
        "--sieve-n",
        "7",
        "--predicate",
        "maxnil",
        "--jobs",
        "1",
    ];
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let first = fs::read(&out).unwrap();
    assert_eq!(first.split(|&b| b == b'\n').filter(|l| !l.is_empty()).count(), 2);

    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("max7.g6.run.json")).unwrap()).unwrap();
    let counts: Vec<u64> = manifest["stages"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["count"].as_u64().unwrap())
        .collect();
    assert_eq!(counts[0], 94);
    assert!(counts.windows(2).all(|w| w[0] >= w[1]));
    assert_eq!(*counts.last().unwrap(), 2);

    assert!(run(&args).status.success());
    assert_eq!(fs::read(&out).unwrap(), first);
}

#[test]
fn filter_empty_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("empty.g6");
    fs::write(&input, "").unwrap();
    let out = dir.path().join("out.g6");
    let o = run(&[
        "filter",
        "--input",
        p(&input),
        "--output",
        p(&out),
        "--predicate",
        "nil",
        "--json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["stages"].as_array().unwrap().iter().all(|s| s["count"] == 0));
    assert!(fs::read(&out).unwrap().is_empty());
}

#[test]
fn filter_rejects_short_source() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("src.g6");
    fs::copy(data("census_source_n7.g6"), &input).unwrap();
    let mut manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(data("census_source_n7.manifest.json")).unwrap()).unwrap();
    manifest["count"] = serde_json::json!(95);
    fs::write(dir.path().join("src.manifest.json"), manifest.to_string()).unwrap();
    let out = dir.path().join("out.g6");
    let o = run(&[
        "filter",
        "--input",
        p(&input),
        "--output",
        p(&out),
        "--sieve-n",
        "7",
        "--predicate",
        "nil",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn shard_sizes_and_reassembly() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("lines.g6");
    let lines: String = (3..28)
        .map(|n| format!("{}\n", encode_string(&Graph::cycle(n).unwrap())))
        .collect();
    fs::write(&input, &lines).unwrap();
    let o = run(&[
        "shard",
        "--input",
        p(&input),
        "--output",
        p(&dir.path().join("s")),
        "--shard-size",
        "10",
        "--json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let shards = v["shards"].as_array().unwrap();
    let sizes: Vec<u64> = shards.iter().map(|s| s["records"].as_u64().unwrap()).collect();
    assert_eq!(sizes, vec![10, 10, 5]);
    let joined: Vec<u8> = shards
        .iter()
        .flat_map(|s| fs::read(s["path"].as_str().unwrap()).unwrap())
        .collect();
    assert_eq!(joined, lines.as_bytes());

    let one = dir.path().join("one.g6");
    fs::write(&one, "E~~w\n").unwrap();
    let o = run(&[
        "shard",
        "--input",
        p(&one),
        "--output",
        p(&dir.path().join("t")),
        "--shard-size",
        "10",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["shards"].as_array().unwrap().len(), 1);
    assert_eq!(
        run(&["shard", "--input", p(&one), "--output", "t", "--shard-size", "0"])
            .status
            .code(),
        Some(1)
    );
}

fn census_row(dir: &Path, inputs: &[&Path], jobs: &str) -> (serde_json::Value, Vec<u8>) {
    let mut args = vec!["census".to_string(), "--sieve-n".into(), "8".into(), "--input".into()];
    args.extend(inputs.iter().map(|i| p(i).to_string()));
    args.extend([
        "--source-manifest".into(),
        p(&data("census_source_n8.manifest.json")).into(),
        "--triangulations".into(),
        p(&data("triangulations_n7.g6")).into(),
        "--output".into(),
        p(dir).into(),
        "--jobs".into(),
        jobs.into(),
        "--json".into(),
    ]);
    let o = bin().args(&args).output().unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    (v, fs::read(dir.join("maxnil_n8.g6")).unwrap())
}

#[test]
fn census_order8_is_deterministic_and_resumable() {
    let dir = tempfile::tempdir().unwrap();
    let source = data("census_source_n8.g6");
    let (a, a_graphs) = census_row(&dir.path().join("a"), &[&source], "1");
    assert_eq!(a["row"]["total"], 6);
    assert_eq!(a["row"]["apex"], 5);

    let (b, b_graphs) = census_row(&dir.path().join("b"), &[&source], "2");
    assert_eq!(a_graphs, b_graphs);
    assert_eq!(a["row"]["funnel"], b["row"]["funnel"]);

    let shard_dir = dir.path().join("shards");
    assert!(run(&[
        "shard",
        "--input",
        p(&source),
        "--output",
        p(&shard_dir),
        "--shard-size",
        "700"
    ])
    .status
    .success());
    let mut shards: Vec<PathBuf> = fs::read_dir(&shard_dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "g6"))
        .collect();
    shards.sort();
    let refs: Vec<&Path> = shards.iter().map(PathBuf::as_path).collect();
    let out = dir.path().join("c");
    let (c, c_graphs) = census_row(&out, &refs, "1");
    assert_eq!(c["resumed"], 0);
    assert_eq!(c_graphs, a_graphs);
    assert_eq!(c["row"]["input_digest"], a["row"]["input_digest"]);

    // drop one marker to simulate an interrupted run
    fs::remove_file(out.join("census_source_n8.part0001.done.json")).unwrap();
    let (d, d_graphs) = census_row(&out, &refs, "1");
    assert_eq!(d["resumed"], 2);
    assert_eq!(d_graphs, a_graphs);
    assert_eq!(d["row"]["funnel"], a["row"]["funnel"]);
}

#[test]
fn complement_check_reports_each_graph() {
    let o = run(&[
        "complement-check",
        "--input",
        p(&data("triangulations_n7.g6")),
        "--json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
}
