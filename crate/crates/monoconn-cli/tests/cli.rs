//! End-to-end runs of the `monoconn` binary: file round-trips, the
//! documented exit-code contract, and report determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use monoconn::{BipartiteColouring, ColouredCompleteGraph};
use monoconn_cli::format::{parse_any, parse_complete_file, AnyFile, BipartiteFile, ColouringFile};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_monoconn"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn assert_exit(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout: {}\nstderr: {}",
        stdout(out),
        stderr(out)
    );
}

/// The `key value` line's value, from a flat report.
fn field(report: &str, key: &str) -> String {
    report
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key} ")))
        .unwrap_or_else(|| panic!("field {key} missing from:\n{report}"))
        .to_string()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("monoconn-cli-test-{}-{name}", std::process::id()));
    p
}

fn write_file(path: &Path, text: &str) {
    std::fs::write(path, text).expect("write test file");
}

#[test]
fn construct_bg_emits_a_canonical_round_tripping_file() {
    let out = run(&["construct", "bg", "--n", "13", "--k", "2"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    let file = parse_complete_file(&text).unwrap();
    assert_eq!(file.serialise(), text);
    assert_eq!(file.colouring.order(), 13);
    assert_eq!(file.colouring.colour_count(), 2);
    assert_eq!(file.metadata("construction"), Some("bg"));
    assert_eq!(file.metadata("claimedBound"), Some("11"));
}

#[test]
fn construct_affine_records_its_claimed_bound() {
    let out = run(&["construct", "affine", "--n", "16", "--r", "3", "--k", "1"]);
    assert_exit(&out, 0);
    let file = parse_complete_file(&stdout(&out)).unwrap();
    assert_eq!(file.metadata("claimedBound"), Some("8"));
}

#[test]
fn construct_affine_rejects_a_non_prime_power() {
    let out = run(&["construct", "affine", "--n", "16", "--r", "7", "--k", "1"]);
    assert_exit(&out, 1);
    assert!(stderr(&out).contains("prime power"));
}

#[test]
fn every_construction_round_trips_through_its_file() {
    let complete: &[&[&str]] = &[
        &["construct", "bg", "--n", "12", "--k", "3"],
        &["construct", "bg", "--n", "8", "--k", "3"],
        &["construct", "affine", "--n", "14", "--r", "4", "--k", "2"],
        &["construct", "hamzero", "--n", "12", "--r", "3", "--k", "3"],
    ];
    for args in complete {
        let out = run(args);
        assert_exit(&out, 0);
        let text = stdout(&out);
        match parse_any(&text).unwrap() {
            AnyFile::Complete(f) => assert_eq!(f.serialise(), text, "{args:?}"),
            AnyFile::Bipartite(_) => panic!("{args:?} should emit a complete file"),
        }
    }
    let out = run(&["construct", "bipmod", "--m", "6", "--n", "9", "--r", "3"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    match parse_any(&text).unwrap() {
        AnyFile::Bipartite(f) => {
            assert_eq!(f.serialise(), text);
            assert_eq!(f.colouring.left_order(), 6);
            assert_eq!(f.colouring.right_order(), 9);
        }
        AnyFile::Complete(_) => panic!("bipmod should emit a bipartite file"),
    }
}

#[test]
fn extract_thm21k_verifies_on_the_block_construction() {
    let path = tmp("bg40.ecg");
    let out = run(&[
        "construct", "bg", "--n", "40", "--k", "4",
        "--out", path.to_str().unwrap(),
    ]);
    assert_exit(&out, 0);
    let out = run(&["extract", "thm21k", "--file", path.to_str().unwrap(), "--k", "4"]);
    assert_exit(&out, 0);
    let report = stdout(&out);
    assert_eq!(field(&report, "guarantee"), "34");
    assert_eq!(field(&report, "verified"), "true");
    let order: usize = field(&report, "order").parse().unwrap();
    assert!(order >= 34);
}

#[test]
fn extract_exit_codes_follow_the_contract() {
    // Hypothesis failure: thm31k needs n >= 480k.
    let mut f = ColouringFile::new(
        ColouredCompleteGraph::new_with(479, 3, |u, v| 1 + (u + v) % 3).unwrap(),
    );
    f.push_metadata("construction", "test");
    let path = tmp("n479.ecg");
    write_file(&path, &f.serialise());
    let out = run(&["extract", "thm31k", "--file", path.to_str().unwrap(), "--k", "1"]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("480"));

    // Hypothesis failure naming the offending vertex: degs needs colour-1
    // minimum degree 2k-2, and this file is entirely colour 2.
    let all_blue = ColouringFile::new(
        ColouredCompleteGraph::new_with(6, 2, |_, _| 2).unwrap(),
    );
    let path = tmp("blue.ecg");
    write_file(&path, &all_blue.serialise());
    let out = run(&["extract", "degs", "--file", path.to_str().unwrap(), "--k", "2"]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("vertex 0"));

    // Parse failure.
    let path = tmp("garbage.ecg");
    write_file(&path, "not a colouring\n");
    let out = run(&["extract", "thm21k", "--file", path.to_str().unwrap(), "--k", "2"]);
    assert_exit(&out, 1);
    assert!(stderr(&out).contains("unrecognised header"));

    // Out-of-range colour in the body.
    let path = tmp("badcolour.ecg");
    write_file(&path, "ECG 1\n3 2\n0 1 1\n0 2 3\n1 2 1\n");
    let out = run(&["extract", "thm21k", "--file", path.to_str().unwrap(), "--k", "1"]);
    assert_exit(&out, 1);
    assert!(stderr(&out).contains("line 4"));

    // Unknown flags are bad input, not a hypothesis refusal.
    let out = run(&["extract", "thm21k", "--no-such-flag"]);
    assert_exit(&out, 1);

    // Missing file.
    let out = run(&["extract", "thm21k", "--file", "/nonexistent.ecg", "--k", "2"]);
    assert_exit(&out, 1);
}

#[test]
fn extract_mader_r11_and_thmr1k_verify_on_real_files() {
    // Parity colouring: colour 1 is two disjoint K_15s, average degree 14.
    let f = ColouredCompleteGraph::new_with(30, 2, |u, v| 1 + (u + v) % 2).unwrap();
    let path = tmp("mixed30.ecg");
    write_file(&path, &ColouringFile::new(f).serialise());
    let out = run(&[
        "extract", "mader", "--file", path.to_str().unwrap(), "--k", "2", "--colour", "1",
    ]);
    assert_exit(&out, 0);
    assert_eq!(field(&stdout(&out), "verified"), "true");

    let out = run(&["construct", "affine", "--n", "16", "--r", "3", "--k", "1"]);
    let path = tmp("affine16.ecg");
    write_file(&path, &stdout(&out));
    let out = run(&["extract", "r11", "--file", path.to_str().unwrap()]);
    assert_exit(&out, 0);
    let report = stdout(&out);
    assert_eq!(field(&report, "guarantee"), "8");
    assert_eq!(field(&report, "verified"), "true");
    // k = 1 is the only connectivity r11 handles.
    let out = run(&["extract", "r11", "--file", path.to_str().unwrap(), "--k", "2"]);
    assert_exit(&out, 1);

    let f = ColouredCompleteGraph::new_with(200, 3, |u, v| 1 + (u * v + u + 2 * v) % 3).unwrap();
    let path = tmp("three200.ecg");
    write_file(&path, &ColouringFile::new(f).serialise());
    let out = run(&["extract", "thmr1k", "--file", path.to_str().unwrap(), "--k", "2"]);
    assert_exit(&out, 0);
    let report = stdout(&out);
    assert_eq!(field(&report, "verified"), "true");
    let order: usize = field(&report, "order").parse().unwrap();
    let guarantee: usize = field(&report, "guarantee").parse().unwrap();
    assert_eq!(guarantee, 34);
    assert!(order >= guarantee);
}

#[test]
fn bipartite_methods_need_bipartite_files_and_vice_versa() {
    let path = tmp("bg10.ecg");
    run(&["construct", "bg", "--n", "10", "--k", "2", "--out", path.to_str().unwrap()]);
    let out = run(&[
        "extract", "r1kbip", "--file", path.to_str().unwrap(), "--ell", "1", "--q", "2",
    ]);
    assert_exit(&out, 1);
    assert!(stderr(&out).contains("expected a bipartite colouring"));

    let bpath = tmp("bm.ecgb");
    run(&["construct", "bipmod", "--m", "6", "--n", "6", "--r", "3", "--out", bpath.to_str().unwrap()]);
    let out = run(&["extract", "thm21k", "--file", bpath.to_str().unwrap(), "--k", "2"]);
    assert_exit(&out, 1);
    assert!(stderr(&out).contains("expected a complete-graph colouring"));
    let out = run(&["oracle", "--file", bpath.to_str().unwrap(), "--k", "1"]);
    assert_exit(&out, 1);
}

#[test]
fn r1kbip_extracts_above_budget_and_refuses_within_it() {
    // The complete bipartite graph in one colour is far above any budget.
    let b = BipartiteColouring::new_with(6, 6, 1, |_, _| 1).unwrap();
    let path = tmp("full66.ecgb");
    write_file(&path, &BipartiteFile::new(b).serialise());
    let out = run(&[
        "extract", "r1kbip", "--file", path.to_str().unwrap(), "--ell", "1", "--q", "2",
    ]);
    assert_exit(&out, 0);
    let report = stdout(&out);
    assert_eq!(field(&report, "verified"), "true");
    assert_eq!(field(&report, "witness_k"), "2");

    // The modular colouring splits edges three ways: within budget.
    let bpath = tmp("bm66.ecgb");
    run(&["construct", "bipmod", "--m", "6", "--n", "6", "--r", "3", "--out", bpath.to_str().unwrap()]);
    let out = run(&[
        "extract", "r1kbip", "--file", bpath.to_str().unwrap(), "--ell", "1", "--q", "2",
    ]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("within the budget"));
    // Both pair flags are required.
    let out = run(&["extract", "r1kbip", "--file", bpath.to_str().unwrap(), "--q", "2"]);
    assert_exit(&out, 1);
    assert!(stderr(&out).contains("--ell"));
}

#[test]
fn oracle_reports_the_block_construction_value() {
    let path = tmp("bg13.ecg");
    run(&["construct", "bg", "--n", "13", "--k", "2", "--out", path.to_str().unwrap()]);
    let out = run(&["oracle", "--file", path.to_str().unwrap(), "--k", "2", "--s", "1"]);
    assert_exit(&out, 0);
    let report = stdout(&out);
    assert_eq!(field(&report, "value"), "11");
    assert_eq!(field(&report, "verified"), "true");
}

#[test]
fn oracle_resource_guard_and_overrides() {
    let f = ColouredCompleteGraph::new_with(18, 2, |u, v| 1 + (u + v) % 2).unwrap();
    let path = tmp("big18.ecg");
    write_file(&path, &ColouringFile::new(f).serialise());

    // Above the default cap of 16 without an override: refused.
    let out = run(&["oracle", "--file", path.to_str().unwrap(), "--k", "1"]);
    assert_exit(&out, 4);

    // The environment variable raises the cap.
    let out = bin()
        .args(["oracle", "--file", path.to_str().unwrap(), "--k", "1"])
        .env("MONOCONN_ORACLE_LIMIT", "18")
        .output()
        .unwrap();
    assert_exit(&out, 0);
    let value: usize = field(&stdout(&out), "value").parse().unwrap();
    assert!(value >= 9, "a half-and-half colouring keeps big components");

    // An explicit flag beats the environment.
    let out = bin()
        .args(["oracle", "--file", path.to_str().unwrap(), "--k", "1", "--limit", "16"])
        .env("MONOCONN_ORACLE_LIMIT", "64")
        .output()
        .unwrap();
    assert_exit(&out, 4);

    // A malformed environment value is bad input.
    let out = bin()
        .args(["oracle", "--file", path.to_str().unwrap(), "--k", "1"])
        .env("MONOCONN_ORACLE_LIMIT", "lots")
        .output()
        .unwrap();
    assert_exit(&out, 1);
}

#[test]
fn bounds_quotes_the_closed_forms() {
    let out = run(&["bounds", "--n", "100", "--r", "2", "--k", "5"]);
    assert_exit(&out, 0);
    let report = stdout(&out);
    assert_eq!(field(&report, "lower"), "92");
    assert_eq!(field(&report, "upper"), "92");
    assert_eq!(field(&report, "exact"), "true");

    let out = run(&["bounds", "--n", "961", "--r", "3", "--k", "2"]);
    assert_eq!(field(&stdout(&out), "lower"), "481");

    let out = run(&["bounds", "--n", "8", "--r", "2", "--k", "3"]);
    assert_eq!(field(&stdout(&out), "upper"), "0");

    let out = run(&["bounds", "--n", "1", "--r", "2", "--k", "1"]);
    assert_exit(&out, 1);
}

#[test]
fn json_reports_parse_and_match_the_text_fields() {
    let out = run(&["bounds", "--n", "100", "--r", "2", "--k", "5", "--json"]);
    assert_exit(&out, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["lower"], 92);
    assert_eq!(v["upper"], 92);
    assert_eq!(v["exact"], true);

    let path = tmp("bg13json.ecg");
    run(&["construct", "bg", "--n", "13", "--k", "2", "--out", path.to_str().unwrap()]);
    let out = run(&["extract", "thm21k", "--file", path.to_str().unwrap(), "--k", "2", "--json"]);
    assert_exit(&out, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["guarantee"], 11);
    assert_eq!(v["verified"], true);
    assert!(v["vertices"].as_array().unwrap().len() >= 11);
}

#[test]
fn search_finds_the_optimum_and_reports_deterministically() {
    let args = [
        "search", "--n", "9", "--r", "2", "--k", "3", "--s", "1",
        "--iters", "400", "--seed", "11", "--init", "blocks",
    ];
    let first = run(&args);
    assert_exit(&first, 0);
    let report = stdout(&first);
    assert_eq!(field(&report, "best_value"), "5");
    assert_eq!(field(&report, "objective"), "exact");
    assert_eq!(field(&report, "archive.0"), "0 5");

    // Identical inputs, identical report, timings aside.
    let second = run(&args);
    let strip = |s: &str| {
        s.lines()
            .filter(|l| !l.starts_with("wall_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&report), strip(&stdout(&second)));
}

#[test]
fn search_writes_its_best_colouring_as_a_file() {
    let path = tmp("best.ecg");
    let out = run(&[
        "search", "--n", "7", "--r", "2", "--k", "2", "--s", "1",
        "--iters", "200", "--seed", "3", "--out", path.to_str().unwrap(),
    ]);
    assert_exit(&out, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let file = parse_complete_file(&text).unwrap();
    assert_eq!(file.serialise(), text);
    assert_eq!(file.colouring.order(), 7);
    assert_eq!(
        file.metadata("bestValue"),
        Some(field(&stdout(&out), "best_value").as_str())
    );
}

#[test]
fn help_exits_cleanly() {
    let out = run(&["--help"]);
    assert_exit(&out, 0);
    let out = run(&["extract", "--help"]);
    assert_exit(&out, 0);
    let out = run(&["no-such-command"]);
    assert_exit(&out, 1);
}
