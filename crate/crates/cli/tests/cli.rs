//! End-to-end tests of the `unirep` binary: exit codes, report content,
//! and byte-level determinism of the JSON output.

use std::path::Path;
use std::process::{Command, Output};

fn unirep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unirep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn ring_subcommand_reports_admissibility() {
    let out = unirep(&["ring", "--ring", "Z/4"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["admissible_count"], 0);
    assert_eq!(json["two_is_unit"], false);

    let out = unirep(&["ring", "--ring", "Z/5"]);
    let json = stdout_json(&out);
    assert_eq!(json["admissible_count"], 4);
    assert_eq!(json["lambda_surjective"], true);
}

#[test]
fn chars_subcommand_lists_the_full_dual() {
    let out = unirep(&["chars", "--ring", "Z/3[t^2+1]"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["total"], 9);
    assert_eq!(json["admissible_count"], 6);
    assert_eq!(json["characters"].as_array().unwrap().len(), 9);
}

#[test]
fn verify_passes_on_the_smallest_group() {
    let out = unirep(&["verify", "--ring", "Z/3", "--n", "2"]);
    assert!(out.status.success(), "exit code 0 when every check passes");
    let json = stdout_json(&out);
    assert_eq!(json["all_pass"], true);
    assert_eq!(json["group_order"], 81);
    let stderr = String::from_utf8_lossy(&out.stderr);
    let checks = json["checks"].as_array().unwrap();
    assert_eq!(stderr.lines().filter(|l| l.starts_with("PASS")).count(), checks.len());
    assert!(!stderr.contains("FAIL"));
    assert!(checks.iter().all(|c| c.get("paper_statement").is_some()));
}

#[test]
fn malformed_arguments_exit_with_code_two() {
    let out = unirep(&["verify", "--ring", "Z/6[t^2+", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = unirep(&["character", "--ring", "Z/3", "--n", "2", "--D", "x", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = unirep(&["verify", "--ring", "Z/3", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oversized_groups_exit_with_code_three() {
    let out = unirep(&["verify", "--ring", "Z/5", "--n", "4"]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("cap"));
}

#[test]
fn invalid_labels_exit_with_code_four() {
    // not left admissible over Z/4
    let out = unirep(&["character", "--ring", "Z/4", "--n", "2", "--D", "1", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(4));
    // index outside 1..=n
    let out = unirep(&["character", "--ring", "Z/3", "--n", "2", "--D", "7", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(4));
    // index set and character count disagree
    let out = unirep(&["character", "--ring", "Z/3", "--n", "2", "--D", "1,2", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn character_subcommand_emits_the_table_and_model() {
    let out = unirep(&[
        "character", "--ring", "Z/3", "--n", "2", "--D", "1,2", "--lambda", "1,2", "--dump-rep",
    ]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["degree"], 3);
    assert_eq!(json["inner_product"], "1");
    assert_eq!(json["monomial_verified"], true);
    assert_eq!(json["values"].as_array().unwrap().len(), 81);
    assert_eq!(json["rep"]["dimension"], 3);
    assert_eq!(json["rep"]["matrices"].as_array().unwrap().len(), 81);
    // quadratic exponent syntax
    let out = unirep(&[
        "character", "--ring", "Z/3[t^2+1]", "--n", "2", "--D", "2", "--lambda", "1:0",
    ]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["degree"], 1);
}

#[test]
fn classify_skips_gracefully_when_the_trace_is_not_onto() {
    let out = unirep(&["classify", "--ring", "Z/2", "--n", "2"]);
    assert!(out.status.success(), "skip is not a failure");
    let json = stdout_json(&out);
    assert_eq!(json["skipped"], true);
    assert!(json["skip_reason"].as_str().unwrap().contains("not surjective"));

    let out = unirep(&["classify", "--ring", "Z/5", "--n", "2"]);
    let json = stdout_json(&out);
    assert_eq!(json["skipped"], false);
    assert_eq!(json["label_count"], 24);
    assert_eq!(json["class_count"], 24);
    assert_eq!(json["partitions_agree"], true);
}

#[test]
fn reports_are_byte_identical_across_runs_and_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name);
    let run = |threads: &str, file: &Path| {
        let out = unirep(&[
            "verify", "--ring", "Z/3", "--n", "2",
            "--threads", threads,
            "--out", file.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty(), "--out moves the report off stdout");
        std::fs::read(file).unwrap()
    };
    let once = run("1", &path("a.json"));
    let again = run("1", &path("b.json"));
    let wide = run("4", &path("c.json"));
    assert_eq!(once, again, "reruns are byte-identical");
    assert_eq!(once, wide, "thread count leaves no trace in the report");
}
