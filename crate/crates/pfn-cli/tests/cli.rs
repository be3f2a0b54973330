//! End-to-end tests of the `pfn` binary: output bytes and exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn pfn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

/// The size-4 Hasse diagram with its thirteen edge labels, frozen.
const GOLDEN_PF4_DOT: &str = "\
digraph pf4 {
  rankdir=BT;
  n0 [label=\"0,0,0,0\"];
  n1 [label=\"0,0,4,3\"];
  n2 [label=\"0,3,2,0\"];
  n3 [label=\"0,4,0,2\"];
  n4 [label=\"2,1,0,0\"];
  n5 [label=\"2,1,4,3\"];
  n6 [label=\"3,0,1,0\"];
  n7 [label=\"3,4,1,2\"];
  n8 [label=\"4,0,0,1\"];
  n9 [label=\"4,3,2,1\"];
  n1 -> n0 [label=\"(8,5)\", movetype=rr];
  n2 -> n3 [label=\"(6,4)\", movetype=rs];
  n3 -> n1 [label=\"(8,3)\", movetype=rs];
  n4 -> n6 [label=\"(5,3)\", movetype=rs];
  n5 -> n4 [label=\"(8,5)\", movetype=rr];
  n5 -> n7 [label=\"(3,0)\", movetype=c];
  n6 -> n2 [label=\"(7,2)\", movetype=rs];
  n6 -> n8 [label=\"(5,4)\", movetype=rs];
  n7 -> n6 [label=\"(8,5)\", movetype=rr];
  n7 -> n9 [label=\"(3,2)\", movetype=c];
  n8 -> n3 [label=\"(8,2)\", movetype=rs];
  n9 -> n2 [label=\"(8,5)\", movetype=rr];
  n9 -> n8 [label=\"(7,5)\", movetype=rr];
}
";

// === hasse ===

#[test]
fn hasse_labeled_dot_is_golden() {
    let output = pfn(&["hasse", "--n", "4", "--labels"]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), GOLDEN_PF4_DOT);
    // byte-deterministic across runs
    assert_eq!(stdout(&pfn(&["hasse", "--n", "4", "--labels"])), GOLDEN_PF4_DOT);
}

#[test]
fn hasse_json_has_labeled_covers() {
    let output = pfn(&["hasse", "--n", "4", "--labels", "--format", "json"]);
    assert_eq!(code(&output), 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(parsed["n"], 4);
    assert_eq!(parsed["elements"].as_array().unwrap().len(), 10);
    assert_eq!(parsed["covers"].as_array().unwrap().len(), 13);
    assert_eq!(parsed["covers"][0]["movetype"], "rr");
}

#[test]
fn hasse_out_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join("pfn-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pf4.dot");
    let output = pfn(&["hasse", "--n", "4", "--labels", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&output), 0);
    assert!(stdout(&output).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), GOLDEN_PF4_DOT);
    std::fs::remove_file(&path).unwrap();
}

// === enumerate ===

#[test]
fn enumerate_lists_in_canonical_order() {
    let output = pfn(&["enumerate", "--n", "2"]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), "0,0\n2,1\n");
}

#[test]
fn enumerate_filters_by_arcs_and_speaks_json() {
    let output = pfn(&["enumerate", "--n", "4", "--arcs", "2", "--format", "json"]);
    assert_eq!(code(&output), 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(parsed["count"], 3);
    assert_eq!(parsed["elements"][0], "2,1,4,3");
}

// === compare ===

#[test]
fn compare_prints_each_verdict() {
    let cases = [
        (["compare", "--n", "4", "--x", "2,1,0,0", "--y", "3,4,1,2"], "incomparable"),
        (["compare", "--n", "4", "--x", "2,1,4,3", "--y", "0,0,0,0"], "<"),
        (["compare", "--n", "4", "--x", "0,0,0,0", "--y", "2,1,4,3"], ">"),
        (["compare", "--n", "4", "--x", "0,3,2,0", "--y", "0,3,2,0"], "="),
    ];
    for (args, expected) in cases {
        let output = pfn(&args);
        assert_eq!(code(&output), 0);
        assert_eq!(stdout(&output), format!("{expected}\n"), "{args:?}");
    }
}

// === interval ===

#[test]
fn interval_lists_members_and_checks_el() {
    let output = pfn(&[
        "interval", "--n", "4", "--x", "2,1,4,3", "--y", "0,3,2,0", "--check-el",
    ]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert!(text.starts_with("interval [2,1,4,3 .. 0,3,2,0]: 6 elements, length 3\n"));
    assert!(text.contains("  3,0,1,0 (rank 2)\n"));
    assert!(text.ends_with("el: 1 increasing chain, lex-smallest increasing\n"));
}

#[test]
fn interval_of_incomparable_endpoints_is_empty() {
    let output = pfn(&["interval", "--n", "4", "--x", "2,1,0,0", "--y", "3,4,1,2"]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), "incomparable; empty interval\n");
}

// === verify ===

#[test]
fn verify_all_passes_on_small_sizes() {
    let output = pfn(&["verify", "--n", "4", "--suite", "all"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    for suite in ["grading", "length", "el", "topology", "qseries"] {
        assert!(text.contains(&format!("{suite} n=4: PASS")), "{text}");
    }
}

#[test]
fn verify_json_envelope_is_machine_readable() {
    let output = pfn(&["verify", "--n", "3", "--suite", "qseries", "--json"]);
    assert_eq!(code(&output), 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(parsed[0]["suite"], "qseries");
    assert_eq!(parsed[0]["n"], 3);
    assert_eq!(parsed[0]["passed"], true);
    assert_eq!(parsed[0]["failures"].as_array().unwrap().len(), 0);
}

// === polys ===

#[test]
fn polys_prints_the_golden_row() {
    let output = pfn(&["polys", "--n", "4", "--check", "all"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert!(text.starts_with("n,k,coefficients,polynomial\n"));
    assert!(text.contains("4,all,\"1,2,2,2,1,1,1\",\"1+2q+2q^2+2q^3+q^4+q^5+q^6\"\n"));
    assert!(text.contains("# check closed: ok\n"));
    assert!(text.contains("# check recurrence: ok\n"));
}

#[test]
fn polys_rejects_impossible_arc_counts() {
    let output = pfn(&["polys", "--n", "4", "--k", "3"]);
    assert_eq!(code(&output), 2);
}

// === zeta ===

#[test]
fn zeta_matches_census_when_asked() {
    let output = pfn(&["zeta", "--n", "3", "--q", "2", "--oracle"]);
    assert_eq!(code(&output), 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(parsed["counts"]["0"], 1);
    assert_eq!(parsed["counts"]["2"], 7);
}

#[test]
fn zeta_refuses_unsupported_fields() {
    assert_eq!(code(&pfn(&["zeta", "--n", "3", "--q", "7"])), 3);
    // formula mode works beyond the census caps, oracle mode refuses
    assert_eq!(code(&pfn(&["zeta", "--n", "6", "--q", "3"])), 0);
    assert_eq!(code(&pfn(&["zeta", "--n", "6", "--q", "3", "--oracle"])), 3);
}

// === mobius ===

#[test]
fn mobius_of_bounds_and_intervals() {
    let output = pfn(&["mobius", "--n", "2"]);
    assert_eq!(stdout(&output), "-1\n");
    let output = pfn(&["mobius", "--n", "4"]);
    assert_eq!(stdout(&output), "0\n");
    // diamond interval: two atoms under a common top
    let output = pfn(&["mobius", "--n", "4", "--x", "2,1,4,3", "--y", "3,0,1,0"]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), "1\n");
}

#[test]
fn mobius_of_incomparable_elements_is_an_input_error() {
    let output = pfn(&["mobius", "--n", "4", "--x", "2,1,0,0", "--y", "3,4,1,2"]);
    assert_eq!(code(&output), 2);
}

// === exit-code contract ===

#[test]
fn usage_errors_exit_2() {
    // unknown flag (clap) and malformed word (domain validation)
    assert_eq!(code(&pfn(&["compare", "--n", "4", "--x", "2,1,0,0"])), 2);
    assert_eq!(
        code(&pfn(&["compare", "--n", "4", "--x", "1,1,0,0", "--y", "0,0,0,0"])),
        2
    );
    // word of the wrong size for --n
    assert_eq!(
        code(&pfn(&["compare", "--n", "5", "--x", "2,1,0,0", "--y", "0,0,0,0"])),
        2
    );
}

#[test]
fn size_guard_exits_3_and_force_overrides() {
    assert_eq!(code(&pfn(&["hasse", "--n", "9"])), 3);
    assert_eq!(code(&pfn(&["enumerate", "--n", "9"])), 3);
    let output = pfn(&["mobius", "--n", "8", "--force"]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), "0\n");
    // the forced run announces its memory estimate on stderr
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("# forced:"), "{stderr}");
}

#[test]
fn help_exits_zero() {
    assert_eq!(code(&pfn(&["--help"])), 0);
    assert!(Path::new(env!("CARGO_BIN_EXE_pfn")).exists());
}
