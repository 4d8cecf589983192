use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn bbk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bbk")).args(args).output().unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = bbk(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn sample_graph_count() {
    let input = data("sample.txt");
    assert_eq!(stdout_of(&["--input", input.to_str().unwrap(), "--engine", "bbk", "--output-mode", "count"]), "5\n");
}

#[test]
fn sorted_output_matches_golden_for_every_engine_and_side() {
    let input = data("sample.txt");
    let golden = std::fs::read_to_string(data("sample.sorted.tsv")).unwrap();
    for engine in ["bbk", "extended", "brute"] {
        for side in ["left", "right", "smaller", "mean-bidegen"] {
            let got =
                stdout_of(&["--input", input.to_str().unwrap(), "--engine", engine, "--side", side, "--sort-output"]);
            assert_eq!(got, golden, "engine {engine}, side {side}");
        }
    }
}

#[test]
fn output_file_equals_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let input = data("sample.txt");
    let target = dir.path().join("out.tsv");
    let out = bbk(&["--input", input.to_str().unwrap(), "--output", target.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let stdout = stdout_of(&["--input", input.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(target).unwrap(), stdout);
}

#[test]
fn no_trivial_drops_the_one_sided_biclique() {
    let input = data("sample.txt");
    for engine in ["bbk", "extended", "brute"] {
        let got = stdout_of(&["--input", input.to_str().unwrap(), "--engine", engine, "--no-trivial", "--sort-output"]);
        assert_eq!(got.lines().count(), 4, "engine {engine}");
        assert!(got.lines().all(|l| !l.starts_with('\t') && !l.ends_with('\t')));
    }
}

#[test]
fn stats_document() {
    let dir = tempfile::tempdir().unwrap();
    let input = data("sample.txt");
    let stats = dir.path().join("stats.json");
    stdout_of(&["--input", input.to_str().unwrap(), "--output-mode", "count", "--stats", stats.to_str().unwrap()]);
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(stats).unwrap()).unwrap();
    for key in [
        "biclique_count",
        "leaf_count",
        "internal_count",
        "ratio_r",
        "q_observed",
        "b_max",
        "b_mean",
        "d_U",
        "d_V",
        "d2_U",
        "d2_V",
        "elapsed_ms",
        "side_used",
        "engine",
        "include_trivial",
    ] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    assert_eq!(doc["biclique_count"], 5);
    assert_eq!(doc["q_observed"], 5);
    assert_eq!(doc["side_used"], "left");
    assert_eq!(doc["b_max"], 4);
}

#[test]
fn edgeless_graph_stats() {
    let dir = tempfile::tempdir().unwrap();
    let stats = dir.path().join("stats.json");
    // Isolated vertices have no edge-list form, so the graph is built directly.
    let g = bbk::BipartiteGraph::from_edges(3, 4, []).unwrap();
    let loaded = bbk::LoadedGraph { graph: g, duplicate_edges: 0, comment_lines: 0 };
    let mut config = bbk_cli::RunConfig::new("unused");
    config.output_mode = bbk_cli::OutputMode::Count;
    let mut out = Vec::new();
    let report = bbk_cli::run_on_graph(&loaded, &config, &mut out).unwrap();
    std::fs::write(&stats, bbk_cli::stats_json(&report)).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(stats).unwrap()).unwrap();
    assert_eq!(doc["biclique_count"], 2);
    assert_eq!(doc["leaf_count"], 0);
    assert!(doc["ratio_r"].is_null());
}

#[test]
fn deterministic_output() {
    let input = data("sample.txt");
    let a = stdout_of(&["--input", input.to_str().unwrap(), "--side", "right"]);
    let b = stdout_of(&["--input", input.to_str().unwrap(), "--side", "right"]);
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    let input = data("sample.txt");
    let input = input.to_str().unwrap();
    assert_eq!(bbk(&["--input", input, "--output-mode", "count", "--sort-output"]).status.code(), Some(1));
    assert_eq!(bbk(&["--input", "/definitely/missing"]).status.code(), Some(1));
    assert_eq!(bbk(&["--input", input, "--engine", "fast"]).status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let wide = dir.path().join("wide.txt");
    let text: String = (0..21).map(|i| format!("u{i} v{i}\n")).collect();
    std::fs::write(&wide, text).unwrap();
    let out = bbk(&["--input", wide.to_str().unwrap(), "--engine", "brute"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "1 2\n3\n").unwrap();
    let out = bbk(&["--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}
