//! End-to-end tests running the compiled binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use qwrank_core::classical::{bek_scores, pagerank_result, IterationConfig};
use qwrank_core::generators::{scale_free, ScaleFreeParams};
use qwrank_core::walk::cqau_scores;
use qwrank_core::WalkConfig;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qwrank"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn tmp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("qwrank-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn rank_path4_table_shows_reference_values() {
    let output = run(&["rank", "--generate", "path:4", "--methods", "cqau,hits"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert_eq!(text.matches("0.13413").count(), 6); // hub and authority sides
    assert!(text.contains("0.09760"));
    assert!(text.contains("0.57735"));
    assert!(text.contains("hub scores"));
    assert!(text.contains("authority scores"));
    assert!(text.contains("n: 4"));
}

#[test]
fn rank_json_contract() {
    let output = run(&[
        "rank",
        "--generate",
        "example5",
        "--methods",
        "bek",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid json");
    assert_eq!(value["graph"]["n"], 4);
    assert_eq!(value["graph"]["edges"], 5);
    let result = &value["results"][0];
    assert_eq!(result["method"], "bek");
    assert_eq!(result["normalization"], "none (raw diagonal)");
    assert_eq!(result["hub"].as_array().unwrap().len(), 4);
    assert_eq!(result["authority"].as_array().unwrap().len(), 4);
}

#[test]
fn rank_csv_contract() {
    let output = run(&[
        "rank",
        "--generate",
        "star:4",
        "--methods",
        "hits,pagerank",
        "--format",
        "csv",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("node,method,hub,authority"));
    assert_eq!(text.lines().count(), 1 + 4 * 2);
    assert!(text.contains("1,hits,1,"));
}

#[test]
fn unknown_method_is_usage_error() {
    let output = run(&["rank", "--generate", "path:4", "--methods", "cqau,bogus"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn missing_methods_is_usage_error() {
    let output = run(&["compare", "--generate", "path:4"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn single_method_compare_is_usage_error() {
    let output = run(&["compare", "--generate", "path:4", "--methods", "hits"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn undersized_generator_is_usage_error() {
    let output = run(&["generate", "path:1", "-o", "/dev/null"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn missing_input_file_is_compute_error() {
    let output = run(&[
        "rank",
        "--input",
        "/nonexistent/graph.txt",
        "--methods",
        "hits",
    ]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn compare_star_hits_bek() {
    let output = run(&[
        "compare",
        "--generate",
        "star:4",
        "--methods",
        "hits,bek",
        "--k",
        "3",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid json");
    let hub = &value["comparisons"]["hub"];
    assert_eq!(hub["tau"][0][1], 1.0);
    assert_eq!(hub["topk_overlap"][0][1], 3);
    assert_eq!(hub["k"], 3);
}

#[test]
fn generate_example5_writes_edge_list() {
    let path = tmp_path("ex5.txt");
    let output = run(&["generate", "example5", "-o", path.to_str().unwrap()]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("n=4 edges=5"));
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.starts_with("n=4\n"));
    assert_eq!(content.lines().count(), 6);
    std::fs::remove_file(&path).ok();
}

#[test]
fn generate_is_deterministic_per_seed() {
    let a = tmp_path("sf-a.txt");
    let b = tmp_path("sf-b.txt");
    for path in [&a, &b] {
        let output = run(&[
            "generate",
            "scalefree:64,0.4,0.55,0.05",
            "--seed",
            "7",
            "-o",
            path.to_str().unwrap(),
        ]);
        assert!(output.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    std::fs::remove_file(&a).ok();
    std::fs::remove_file(&b).ok();
}

#[test]
fn generated_file_ranks_identically_to_in_memory_pipeline() {
    // generate-to-file-then-rank must agree with rank --generate bit for
    // bit: both paths run in the same binary, so the file round trip is
    // the only difference
    let path = tmp_path("roundtrip.txt");
    let output = run(&[
        "generate",
        "scalefree:24,0.4,0.55,0.05",
        "--seed",
        "3",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(output.status.success());

    let methods = "cqau,bek,pagerank";
    let from_file = run(&[
        "rank",
        "--input",
        path.to_str().unwrap(),
        "--methods",
        methods,
        "--format",
        "json",
    ]);
    assert!(from_file.status.success());
    let in_memory = run(&[
        "rank",
        "--generate",
        "scalefree:24,0.4,0.55,0.05",
        "--seed",
        "3",
        "--methods",
        methods,
        "--format",
        "json",
    ]);
    assert!(in_memory.status.success());
    let file_value: serde_json::Value = serde_json::from_str(&stdout(&from_file)).unwrap();
    let memory_value: serde_json::Value = serde_json::from_str(&stdout(&in_memory)).unwrap();
    assert_eq!(file_value, memory_value);

    // and the library computes the same scores up to rounding noise
    // (separately compiled binaries may differ by an ulp on tied values)
    let params = ScaleFreeParams::new(0.4, 0.55, 0.05, 3).unwrap();
    let graph = scale_free(24, &params).unwrap();
    let expected = [
        cqau_scores(&graph, &WalkConfig::default()).unwrap(),
        bek_scores(&graph).unwrap(),
        pagerank_result(&graph, &IterationConfig::default()).unwrap(),
    ];
    for (idx, want) in expected.iter().enumerate() {
        let result = &file_value["results"][idx];
        for (field, scores) in [("hub", &want.hub), ("authority", &want.authority)] {
            let got: Vec<f64> = result[field]
                .as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_f64().unwrap())
                .collect();
            assert_eq!(got.len(), scores.len());
            for (g, w) in got.iter().zip(scores.iter()) {
                assert!((g - w).abs() <= 1e-12, "method {idx} {field}: {g} vs {w}");
            }
        }
    }
    std::fs::remove_file(&path).ok();
}

#[test]
fn matrix_market_input_is_detected_by_extension() {
    let path = tmp_path("g.mtx");
    std::fs::write(
        &path,
        "%%MatrixMarket matrix coordinate real general\n3 3 3\n1 2 1.5\n2 3 2.5\n3 1 0.5\n",
    )
    .unwrap();
    let output = run(&[
        "rank",
        "--input",
        path.to_str().unwrap(),
        "--methods",
        "pagerank",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("n: 3"));
    assert!(text.contains("0.33333")); // 3-cycle PageRank is uniform
    std::fs::remove_file(&path).ok();
}

#[test]
fn alpha_env_var_overrides_default() {
    let base = run(&[
        "rank",
        "--generate",
        "path:4",
        "--methods",
        "pagerank",
        "--format",
        "csv",
    ]);
    let tweaked = bin()
        .args([
            "rank",
            "--generate",
            "path:4",
            "--methods",
            "pagerank",
            "--format",
            "csv",
        ])
        .env("QWRANK_ALPHA", "0.5")
        .output()
        .expect("binary runs");
    assert!(base.status.success() && tweaked.status.success());
    assert_ne!(stdout(&base), stdout(&tweaked));
    // and the flag beats the environment
    let flagged = bin()
        .args([
            "rank",
            "--generate",
            "path:4",
            "--methods",
            "pagerank",
            "--format",
            "csv",
            "--alpha",
            "0.85",
        ])
        .env("QWRANK_ALPHA", "0.5")
        .output()
        .expect("binary runs");
    assert_eq!(stdout(&base), stdout(&flagged));
}

#[test]
fn self_loop_warning_on_stderr() {
    let path = tmp_path("loops.txt");
    std::fs::write(&path, "1 2\n2 2\n2 3\n").unwrap();
    let output = run(&[
        "rank",
        "--input",
        path.to_str().unwrap(),
        "--methods",
        "bek",
    ]);
    assert!(output.status.success());
    let err = String::from_utf8(output.stderr.clone()).unwrap();
    assert!(err.contains("dropped 1 self-loop"));
    std::fs::remove_file(&path).ok();
}
