//! End-to-end tests of the `hochex` binary: every subcommand is exercised
//! through a real process, files round-trip through the documented JSON
//! grammar, and the exit-code contract (0 verdicts, 2 unusable input,
//! 3 size cap) is pinned.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hochex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hochex"))
        .args(args)
        .env_remove("HOCHEX_SIZE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    assert!(
        out.status.success(),
        "expected success, got {:?}\nstderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_str(&stdout_of(out)).expect("valid JSON on stdout")
}

fn write(path: &Path, contents: &str) {
    std::fs::write(path, contents).expect("test file writes");
}

// ---------------------------------------------------------------------------
// Homology commands
// ---------------------------------------------------------------------------

#[test]
fn hh_reports_the_dual_numbers_betti_table() {
    let out = hochex(&["hh", "--zoo", "dual", "--max-degree", "3", "--output", "json"]);
    let v = json_of(&out);
    assert_eq!(v["homology"]["betti"], serde_json::json!([2, 1, 1, 1]));
    assert_eq!(v["carrier"], "standard");
}

#[test]
fn hh_text_output_contains_the_table() {
    let out = hochex(&["hh", "--zoo", "matrix:2", "--max-degree", "2"]);
    let s = stdout_of(&out);
    assert!(s.contains("betti: [1, 0, 0]"), "unexpected output:\n{s}");
}

#[test]
fn hc_matches_the_morita_pin_for_two_by_two_matrices() {
    let out = hochex(&["hc", "--zoo", "matrix:2", "--max-degree", "3", "--output", "json"]);
    let v = json_of(&out);
    assert_eq!(v["hc"], serde_json::json!([1, 0, 1, 0]));
    assert_eq!(v["hh"], serde_json::json!([1, 0, 0, 0]));
}

#[test]
fn hp_stabilizes_for_truncated_polynomials() {
    for name in ["dual", "jet:1,2"] {
        let out = hochex(&["hp", "--zoo", name, "--output", "json"]);
        let v = json_of(&out);
        assert_eq!(v["even"]["stable"], serde_json::json!(1), "even tower of {name}");
        assert_eq!(v["odd"]["stable"], serde_json::json!(0), "odd tower of {name}");
    }
}

#[test]
fn sbi_holds_for_the_rationals() {
    let out = hochex(&["sbi", "--zoo", "matrix:1", "--output", "json"]);
    let v = json_of(&out);
    assert_eq!(v["holds"], serde_json::json!(true));
    assert_eq!(v["connes_connecting_agrees"], serde_json::json!(true));
}

#[test]
fn hunital_finds_the_left_unit_of_the_corner_ideal_via_excision() {
    let out =
        hochex(&["excision", "--zoo", "corner:1", "--max-degree", "2", "--output", "json"]);
    let v = json_of(&out);
    assert_eq!(v["h_unitality"]["mode"], serde_json::json!("left-unit"));
    assert_eq!(v["holds"], serde_json::json!(true));
}

#[test]
fn excision_fails_honestly_for_the_nilpotent_control() {
    let out = hochex(&[
        "excision",
        "--zoo",
        "nilpotent-jet:2,1",
        "--max-degree",
        "3",
        "--output",
        "json",
    ]);
    // A failed mathematical verdict is still a completed run: exit 0.
    let v = json_of(&out);
    assert_eq!(v["holds"], serde_json::json!(false));
    assert_eq!(v["h_unitality"]["mode"], serde_json::json!("failed"));
    assert_eq!(v["h_unitality"]["failure_degree"], serde_json::json!(1));
}

#[test]
fn hkr_verifies_the_identities_for_a_two_variable_jet() {
    let out = hochex(&["hkr", "--zoo", "jet:2,1", "--max-degree", "2", "--output", "json"]);
    let v = json_of(&out);
    let forms = v["forms"].as_array().expect("forms array");
    assert_eq!(forms.len(), 3);
    let dims: Vec<u64> = forms.iter().map(|f| f["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![3, 3, 1]);
    for f in forms {
        assert_eq!(f["projection_after_antisymmetrization_is_identity"], true);
        assert_eq!(f["antisymmetrization_lands_in_cycles"], true);
        assert_eq!(f["projection_kills_boundaries"], true);
    }
}

#[test]
fn hkr_rejects_noncommutative_algebras() {
    let out = hochex(&["hkr", "--zoo", "matrix:2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("commutative"), "stderr: {err}");
}

// ---------------------------------------------------------------------------
// The zoo and file round-trips
// ---------------------------------------------------------------------------

#[test]
fn zoo_listing_names_every_family() {
    let s = stdout_of(&hochex(&["zoo"]));
    for family in ["matrix:n", "jet:v,k", "dual", "corner:n", "nilpotent-jet:N,m", "sum:a,b"] {
        assert!(s.contains(family), "missing {family} in:\n{s}");
    }
}

#[test]
fn every_zoo_algebra_round_trips_through_its_json_file() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["matrix:1", "matrix:2", "dual", "jet:1,2", "jet:2,1"] {
        let path = dir.path().join("model.json");
        let out = hochex(&[
            "zoo",
            name,
            "--output",
            "json",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "zoo {name} failed");
        let reread = hochex(&[
            "hh",
            "--algebra",
            path.to_str().unwrap(),
            "--max-degree",
            "1",
            "--output",
            "json",
        ]);
        assert!(
            reread.status.success(),
            "round-trip of {name} failed: {}",
            String::from_utf8_lossy(&reread.stderr)
        );
    }
}

#[test]
fn every_zoo_extension_round_trips_through_its_json_file() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["corner:1", "corner:2", "nilpotent-jet:3,1", "sum:dual,matrix:1"] {
        let path = dir.path().join("ext.json");
        let out = hochex(&[
            "zoo",
            name,
            "--output",
            "json",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "zoo {name} failed");
        let reread = hochex(&[
            "excision",
            "--extension",
            path.to_str().unwrap(),
            "--max-degree",
            "1",
            "--output",
            "json",
        ]);
        assert!(
            reread.status.success(),
            "round-trip of {name} failed: {}",
            String::from_utf8_lossy(&reread.stderr)
        );
    }
}

#[test]
fn zoo_names_selecting_an_extension_feed_plain_commands_their_total_algebra() {
    let out = hochex(&["hh", "--zoo", "corner:1", "--max-degree", "1", "--output", "json"]);
    let v = json_of(&out);
    assert_eq!(v["algebra"], serde_json::json!("corner:1 (total algebra)"));
}

#[test]
fn a_hand_written_bimodule_file_loads_as_coefficients() {
    let dir = tempfile::tempdir().unwrap();
    let alg = dir.path().join("dual.json");
    let zoo = hochex(&["zoo", "dual", "--output", "json", "--out", alg.to_str().unwrap()]);
    assert!(zoo.status.success());
    // The trivial bimodule ℚ over the dual numbers: the unit acts as the
    // identity, x acts as zero on both sides.
    let module = dir.path().join("trivial.json");
    write(
        &module,
        r#"{"dim": 1, "left": [[0, 0, 0, "1"]], "right": [[0, 0, 0, "1"]]}"#,
    );
    let out = hochex(&[
        "hh",
        "--algebra",
        alg.to_str().unwrap(),
        "--module",
        module.to_str().unwrap(),
        "--max-degree",
        "2",
        "--output",
        "json",
    ]);
    let v = json_of(&out);
    assert_eq!(v["module"], serde_json::json!(module.display().to_string()));
    assert_eq!(v["homology"]["betti"].as_array().unwrap().len(), 3);
}

// ---------------------------------------------------------------------------
// Engine options
// ---------------------------------------------------------------------------

#[test]
fn certified_and_fast_engines_agree() {
    let fast = json_of(&hochex(&["hc", "--zoo", "matrix:2", "--max-degree", "3", "--output", "json"]));
    let sure = json_of(&hochex(&[
        "hc",
        "--zoo",
        "matrix:2",
        "--max-degree",
        "3",
        "--certify",
        "--output",
        "json",
    ]));
    assert_eq!(fast["hc"], sure["hc"]);
    assert_eq!(fast["hh"], sure["hh"]);
}

#[test]
fn worker_fanout_does_not_change_answers() {
    let one = json_of(&hochex(&["hh", "--zoo", "jet:2,1", "--max-degree", "3", "--output", "json"]));
    let four = json_of(&hochex(&[
        "hh",
        "--zoo",
        "jet:2,1",
        "--max-degree",
        "3",
        "--workers",
        "4",
        "--output",
        "json",
    ]));
    assert_eq!(one["homology"], four["homology"]);
}

// ---------------------------------------------------------------------------
// Exit codes and error reporting
// ---------------------------------------------------------------------------

#[test]
fn unreadable_input_exits_two() {
    let out = hochex(&["hh", "--algebra", "/nonexistent/algebra.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_rationals_are_reported_with_their_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    write(
        &path,
        r#"{"dim": 1, "basis": ["e"], "table": [[0, 0, 0, "1/0"]], "unit": null}"#,
    );
    let out = hochex(&["hh", "--algebra", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("malformed rational"), "stderr: {err}");
    assert!(err.contains("line 1"), "stderr: {err}");
}

#[test]
fn blown_size_cap_exits_three() {
    let out = hochex(&["hc", "--zoo", "matrix:2", "--size-cap", "100"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn size_cap_environment_variable_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_hochex"))
        .args(["hc", "--zoo", "matrix:2"])
        .env("HOCHEX_SIZE_CAP", "100")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn degree_floors_are_usage_errors() {
    let out = hochex(&["hp", "--zoo", "dual", "--max-degree", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hochex(&["excision", "--zoo", "corner:1", "--max-degree", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn extension_names_are_rejected_where_algebras_cannot_stand_in() {
    // excision on a plain algebra has no extension to work with.
    let out = hochex(&["excision", "--zoo", "dual"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("plain algebra"), "stderr: {err}");
}

#[test]
fn reports_can_be_written_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = hochex(&[
        "hc",
        "--zoo",
        "dual",
        "--max-degree",
        "2",
        "--output",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).expect("file is JSON");
    assert_eq!(v["hc"].as_array().unwrap().len(), 3);
}
