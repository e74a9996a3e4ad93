use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric-weights"))
        .args(args)
        .output()
        .unwrap()
}

fn machine(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "machine"]);
    let out = run(&all);
    let json = serde_json::from_slice(&out.stdout).unwrap();
    (out.status.code().unwrap(), json)
}

#[test]
fn check_square() {
    let input = data("square.json");
    let (code, v) = machine(&["check", "--input", input.to_str().unwrap()]);
    assert_eq!(code, 0);
    let r = &v["report"];
    assert_eq!(r["delzant"], true);
    assert_eq!(r["volume"], 2);
    assert_eq!(r["boundary_volume"], 4);
    assert_eq!(r["degrees"]["deg_chow"], 2);
    assert_eq!(r["degrees"]["deg_hurwitz"], 2);
    assert_eq!(r["points"], 4);
    assert_eq!(v["config"]["seed"], 0);
    assert_eq!(v["config"]["trials"], 20);
}

#[test]
fn check_flags_non_delzant_and_low_degree() {
    let (code, v) = machine(&["check", "--input", data("non_delzant.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["delzant"], false);
    assert_eq!(v["report"]["singular_vertices"][0]["vertex"], serde_json::json!([0, 1]));
    assert!(v["warnings"][0].as_str().unwrap().contains("(0,1)"));

    let (code, v) = machine(&["check", "--input", data("unit_simplex.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(v["warnings"][0].as_str().unwrap().contains("degree 1"));
}

#[test]
fn non_delzant_needs_the_skip_flag() {
    let input = data("non_delzant.json");
    let input = input.to_str().unwrap();
    assert_eq!(run(&["verify", "--input", input]).status.code(), Some(2));
    let out = run(&["verify", "--input", input, "--skip-delzant-check", "--trials", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_segment_and_square() {
    let (code, v) = machine(&["verify", "--input", data("segment.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["chow_vertices"], serde_json::json!([[1, 2, 1], [2, 0, 2]]));
    assert_eq!(
        v["report"]["hurwitz_vertices"],
        serde_json::json!([[0, 2, 0], [1, 0, 1]])
    );
    assert_eq!(v["status"], "pass");

    let (code, v) = machine(&["verify", "--input", data("square.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["triangulations"], 2);
}

#[test]
fn caps_exit_with_three() {
    let input = data("square.json");
    let (code, v) = machine(&[
        "verify",
        "--input",
        input.to_str().unwrap(),
        "--max-triangulations",
        "1",
    ]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "incomplete_enumeration");
    assert_eq!(v["config"]["max_triangulations"], 1);
    let out = run(&[
        "triangulations",
        "--input",
        input.to_str().unwrap(),
        "--time-budget",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"vertices\": [[0, 0],\n  [1, 0]\n  [0, 1]]}").unwrap();
    let (code, v) = machine(&["check", "--input", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(v["error"]["message"].as_str().unwrap().contains("line 3"));

    let flat = dir.path().join("flat.json");
    std::fs::write(&flat, r#"{"vertices": [[0, 0], [1, 1], [2, 2]]}"#).unwrap();
    let (code, v) = machine(&["check", "--input", flat.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(v["error"]["message"].as_str().unwrap().contains("degenerate"));

    let missing = dir.path().join("missing.json");
    assert_eq!(
        run(&["check", "--input", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn machine_output_is_independent_of_workers() {
    let input = data("doubled_simplex.json");
    let input = input.to_str().unwrap();
    for cmd in ["verify", "triangulations", "polytope"] {
        let outputs: Vec<Vec<u8>> = ["1", "2", "4"]
            .iter()
            .map(|w| {
                run(&[
                    cmd,
                    "--input",
                    input,
                    "--format",
                    "machine",
                    "--seed",
                    "17",
                    "--trials",
                    "5",
                    "--workers",
                    w,
                ])
                .stdout
            })
            .collect();
        assert!(!outputs[0].is_empty());
        assert!(outputs.windows(2).all(|p| p[0] == p[1]), "{cmd}");
    }
}

#[test]
fn vectors_and_polytope_tables() {
    let input = data("segment.json");
    let (code, v) = machine(&["vectors", "--input", input.to_str().unwrap(), "--kind", "hurwitz"]);
    assert_eq!(code, 0);
    let rows = v["report"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["triangulation"], serde_json::json!([[0, 1], [1, 2]]));
    assert_eq!(rows[0]["vector"], serde_json::json!([0, 2, 0]));

    let (code, v) = machine(&["polytope", "--input", input.to_str().unwrap(), "--kind", "chow"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["kind"], "chow");
    assert_eq!(v["report"]["affine_dim"], 1);
    assert_eq!(v["report"]["generators"].as_array().unwrap().len(), 2);
}

#[test]
fn human_output_lists_witnesses() {
    let out = run(&["triangulations", "--input", data("segment.json").to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("T0 {[0, 1], [1, 2]} witness ("), "{text}");
    assert!(text.contains("status: pass"));
}
