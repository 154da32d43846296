//! End-to-end tests of the `simplex-graphs` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_simplex-graphs"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn enumerate_q4_json_counts() {
    let out = run(&["enumerate", "--q", "4", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["simplex_point_count"], 135);
    assert_eq!(v["simplex_line_count"], 162);
    assert_eq!(v["lines"].as_array().unwrap().len(), 162);
}

#[test]
fn enumerate_q3_text() {
    let out = run(&["enumerate", "--q", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("16 simplex points, 8 simplex lines"));
}

#[test]
fn enumerate_unsupported_order_fails() {
    let out = run(&["enumerate", "--q", "7"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("unsupported order"));
}

#[test]
fn unknown_flag_rejected() {
    let out = run(&["enumerate", "--q", "4", "--frobnicate"]);
    assert!(!out.status.success());
}

#[test]
fn verify_theorem1_passes() {
    let out = run(&["verify", "--suite", "theorem1", "--format", "json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["suite"], "theorem1");
    // timings are suppressed by default for reproducible bytes
    assert!(v["checks"][0].get("runtime_ms").is_none());
}

#[test]
fn verify_theorem2_text_shows_orbit_sizes() {
    let out = run(&["verify", "--suite", "theorem2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS t2_05_orbit_sizes"));
    assert!(text.contains("1, 6, 10, 15, 20, 20, 30, 60"));
}

#[test]
fn verify_output_is_deterministic() {
    let a = run(&["verify", "--suite", "appendix", "--format", "json"]);
    let b = run(&["verify", "--suite", "appendix", "--format", "json"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    // and independent of the thread count
    let c = run(&["verify", "--suite", "appendix", "--format", "json", "--threads", "1"]);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn verify_with_explicit_data_file() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/q4_tables.txt");
    let out = run(&["verify", "--suite", "appendix", "--data", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
}

#[test]
fn verify_missing_data_file_is_reported_with_path() {
    let out = run(&["verify", "--suite", "appendix", "--data", "/nonexistent/tables.txt"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("/nonexistent/tables.txt"));
}

#[test]
fn verify_corrupted_data_file_gives_parse_diagnostics() {
    let dir = std::env::temp_dir().join("simplex_graphs_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corrupt_tables.txt");
    let mut text = simplex_graphs::appendix::EMBEDDED_TABLES.to_string();
    text = text.replace("L_136: 011aa|101b1|1101b|1ab0a|1baa0; bold=4,5",
                        "L_136: 011ax|101b1|1101b|1ab0a|1baa0; bold=4,5");
    std::fs::write(&path, text).unwrap();
    let out = run(&["verify", "--suite", "appendix", "--data", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("line"), "diagnostics: {err}");
}

#[test]
fn verify_wrong_content_fails_checks_not_parsing() {
    // Swap two bold marks: parses fine, the cross-check must catch it.
    let dir = std::env::temp_dir().join("simplex_graphs_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wrong_tables.txt");
    let text = simplex_graphs::appendix::EMBEDDED_TABLES.replace(
        "L_136: 011aa|101b1|1101b|1ab0a|1baa0; bold=4,5",
        "L_136: 011aa|101b1|1101b|1ab0a|1baa0; bold=1,2",
    );
    std::fs::write(&path, text).unwrap();
    let out = run(&["verify", "--suite", "appendix", "--data", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL a_05_bold_rows"));
}

#[test]
fn verify_env_var_data_dir() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    let out = bin()
        .args(["verify", "--suite", "appendix"])
        .env("SIMPLEX_GRAPHS_DATA", &dir)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
}

#[test]
fn verify_rejects_non_q4_for_named_suites() {
    let out = run(&["verify", "--q", "5", "--suite", "theorem1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_smallq_spans_both_orders() {
    let out = run(&["verify", "--q", "3", "--suite", "smallq", "--format", "json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
    let ids: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert!(ids.iter().any(|id| id.starts_with("s3_")));
    assert!(ids.iter().any(|id| id.starts_with("s5_")));
}

#[test]
fn export_dot_q4() {
    let out = run(&["export", "--q", "4", "--format", "dot"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert_eq!(dot.matches(" -- ").count(), 2025);
}

#[test]
fn export_colored_strata() {
    let out = run(&["export", "--q", "4", "--format", "dot", "--base", "0", "--color-strata"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    for class in ["base", "adjacent", "x3", "x1", "x0", "six"] {
        assert!(dot.contains(&format!("class=\"{class}\"")), "{class}");
    }
}

#[test]
fn export_rejects_bad_base() {
    let out = run(&["export", "--q", "4", "--format", "dot", "--base", "900", "--color-strata"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_q3_graphml() {
    let out = run(&["export", "--q", "3", "--format", "graphml"]);
    assert!(out.status.success());
    let xml = stdout(&out);
    assert_eq!(xml.matches("<node").count(), 8);
    assert_eq!(xml.matches("<edge").count(), 16);
}

#[test]
fn export_rejects_q5() {
    let out = run(&["export", "--q", "5"]);
    assert_eq!(out.status.code(), Some(2));
}
