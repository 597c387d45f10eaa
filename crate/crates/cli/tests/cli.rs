//! End-to-end tests of the `rankin` binary: exit codes, determinism, and a
//! few frozen reports.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rankin"))
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn analyze_weight_hilbert_12() {
    let out = run(&["analyze-weight", "--weight", &fixture("hilbert12.json")]);
    let v = stdout_json(&out);
    assert_eq!(v["standard"], serde_json::json!([[-1, -11]]));
    assert_eq!(v["pure"], true);
    assert_eq!(v["cuspidal"]["motivic_weight"], 11);
    assert_eq!(v["critical_set_motivic"]["cardinality"], 11);
    assert_eq!(v["critical_set_motivic"]["points"][0], "1");
}

#[test]
fn output_is_deterministic() {
    let args = ["critical", "--mu", &fixture("mu21.json"), "--mup", &fixture("gl1.json"),
        "--with-oracle"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn oracle_flags_report_agreement() {
    let out = run(&["kostant", "--rank", "5", "--block", "2", "--with-oracle"]);
    let v = stdout_json(&out);
    assert_eq!(v["count"], 10);
    assert_eq!(v["oracle"]["brute_force_agrees"], true);
    assert_eq!(v["oracle"]["generating_function_matches"], true);

    let out = run(&["balanced", "--mu", &fixture("mu21.json"), "--mup", &fixture("gl1.json"),
        "--with-oracle"]);
    let v = stdout_json(&out);
    assert_eq!(v["status"], "balanced");
    assert_eq!(v["oracle"]["lengths_agree"], true);
    assert_eq!(v["oracle"]["representative_agrees"], true);
}

#[test]
fn text_format_renders_outline() {
    let out = run(&["--format", "text", "balanced", "--mu", &fixture("mu21.json"), "--mup",
        &fixture("gl1.json")]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("status: balanced"));
    assert!(text.contains("lengths: [1]"));
    assert!(!text.contains('{'));
}

#[test]
fn odd_odd_report_round_trip() {
    let out = run(&["oddodd", "--mu", &fixture("odd3a.json"), "--mup", &fixture("odd3b.json"),
        "--with-oracle"]);
    let v = stdout_json(&out);
    assert_eq!(v["width_plus"], 4);
    assert_eq!(v["balance_status"], "collision");
    assert_eq!(v["collision"]["positions"], serde_json::json!([2, 5]));
    assert_eq!(v["central_pair_critical"], serde_json::json!([false, true]));
    assert_eq!(v["oracle"]["pole_scan_agrees"], true);
}

#[test]
fn hilbert_frozen_example() {
    let out = run(&["hilbert", "--k", "12", "--m", "0", "--with-oracle"]);
    let v = stdout_json(&out);
    assert_eq!(v["weight"]["standard"], serde_json::json!([[-1, -11]]));
    assert_eq!(v["cuspidal"]["motivic_weight"], 11);
    assert_eq!(v["width"], 11);
    assert_eq!(v["interval_satisfiable"], true);
    let pts: Vec<String> = (1..=11).map(|m| m.to_string()).collect();
    assert_eq!(v["critical_set_motivic"]["points"], serde_json::json!(pts));
    assert_eq!(v["oracle"]["pole_scan_agrees"], true);
}

#[test]
fn exit_code_one_on_malformed_input() {
    let out = run(&["analyze-weight", "--weight", &fixture("bad.json")]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["analyze-weight", "--weight", &fixture("does-not-exist.json")]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_code_two_on_domain_errors() {
    // odd-by-odd pair without the required sign
    let out = run(&["critical", "--mu", &fixture("odd3a.json"), "--mup", &fixture("odd3b.json")]);
    assert_eq!(out.status.code(), Some(2));

    // rank-one factor has no restricted width
    let out = run(&["oddodd", "--mu", &fixture("odd3a.json"), "--mup", &fixture("gl1.json")]);
    assert_eq!(out.status.code(), Some(2));

    // non-pure weight has no cuspidal parameters
    let out = run(&["critical", "--mu", &fixture("nonpure.json"), "--mup", &fixture("gl1.json")]);
    assert_eq!(out.status.code(), Some(2));

    // sub-cohomological Hilbert weight
    let out = run(&["hilbert", "--k", "1", "--m", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
