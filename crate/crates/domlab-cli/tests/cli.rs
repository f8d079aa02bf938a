//! End-to-end tests of the domlab binary: subcommand output, exit codes,
//! determinism across worker counts, and the env cap.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn domlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domlab"))
        .args(args)
        .env_remove("DOMLAB_MAX_N")
        .output()
        .expect("binary runs")
}

fn domlab_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_domlab"))
        .args(args)
        .env_remove("DOMLAB_MAX_N")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn construct_then_classify_path7() {
    let built = domlab(&["construct", "path", "7"]);
    assert_eq!(exit_code(&built), 0);
    let g6 = stdout_of(&built);
    assert_eq!(g6.trim().len(), 1 + 4); // size byte + ceil(21/6) data bytes

    let classified = domlab_stdin(&["classify"], &g6);
    assert_eq!(exit_code(&classified), 0);
    let text = stdout_of(&classified);
    assert!(text.contains("verdict=SR"), "{text}");
    assert!(text.lines().count() >= 8); // header + 6 edge rows
}

#[test]
fn classify_triangle_json() {
    let out = domlab_stdin(&["classify", "--json"], "Bw\n");
    assert_eq!(exit_code(&out), 0);
    let record: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(record["verdict"], "ASR");
    assert_eq!(record["gamma"], 1);
    assert_eq!(record["profiles"].as_array().unwrap().len(), 3);
    assert_eq!(record["profiles"][0]["gamma_subdivided"], 2);
}

#[test]
fn classify_edgelist_input() {
    let out = domlab_stdin(
        &["classify", "--format", "edgelist"],
        "6\n0 1\n1 2\n2 3\n3 4\n4 5\n",
    );
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("verdict=NEITHER"), "{text}");
    assert!(text.contains("weak"), "{text}");
}

#[test]
fn classify_rejects_disconnected_with_exit_3() {
    let out = domlab_stdin(&["classify", "--format", "edgelist"], "4\n0 1\n2 3\n");
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn classify_rejects_garbage_with_exit_2() {
    let out = domlab_stdin(&["classify"], "not-a-graph6-line!!!\n");
    assert_eq!(exit_code(&out), 2);
    let out = domlab_stdin(&["classify", "--format", "edgelist"], "3\n0 0\n");
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn construct_composites() {
    let gt = domlab(&[
        "construct",
        "gt",
        "corona(k2)",
        "corona(k2)",
        "u=0",
        "v=0",
        "t=3",
    ]);
    assert_eq!(exit_code(&gt), 0);
    let classified = domlab_stdin(&["classify"], &stdout_of(&gt));
    assert!(stdout_of(&classified).contains("verdict=SR"));

    let bm = domlab(&["construct", "bm", "k3+p3:s=0;k3+p3:s=0;bridges=0.0-1.0"]);
    assert_eq!(exit_code(&bm), 0);
    let classified = domlab_stdin(&["classify"], &stdout_of(&bm));
    assert!(stdout_of(&classified).contains("verdict=ASR"));

    let bad = domlab(&["construct", "bm", "k2+p3:s=0"]);
    assert_eq!(exit_code(&bad), 2);
}

#[test]
fn census_trees_seven() {
    let out = domlab(&["census", "--trees", "7"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 12); // 11 records + summary
    let summary: serde_json::Value = serde_json::from_str(lines[11]).unwrap();
    assert_eq!(summary["total"], 11);
    assert_eq!(summary["asr"], 0); // no ASR tree on 7 vertices
    for line in &lines[..11] {
        let rec: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_ne!(rec["verdict"], "ASR");
    }
}

#[test]
fn census_deterministic_across_jobs() {
    let one = domlab(&["census", "--connected", "6", "--jobs", "1"]);
    let four = domlab(&["census", "--connected", "6", "--jobs", "4"]);
    assert_eq!(exit_code(&one), 0);
    assert_eq!(stdout_of(&one), stdout_of(&four));
}

#[test]
fn census_filter_and_csv() {
    let out = domlab(&[
        "census",
        "--connected",
        "6",
        "--filter",
        "verdict=ASR",
        "--format",
        "csv",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.starts_with("graph6,"));
    // C6 and K6 are among the ASR graphs on six vertices
    assert!(text.contains("EBj?"), "{text}");
    assert!(text.contains("E~~w"), "{text}");
    assert!(text.trim_end().ends_with("neither=0"));

    let bad = domlab(&["census", "--connected", "5", "--filter", "color=red"]);
    assert_eq!(exit_code(&bad), 2);
}

#[test]
fn census_env_cap_lowers_limits() {
    let out = Command::new(env!("CARGO_BIN_EXE_domlab"))
        .args(["census", "--connected", "7"])
        .env("DOMLAB_MAX_N", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code().unwrap(), 3);
}

#[test]
fn census_file_roundtrip() {
    let dir = std::env::temp_dir().join("domlab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graphs.g6");
    std::fs::write(&path, "Bw\nFhCGG\n").unwrap();
    let out = domlab(&["census", "--file", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains("\"graph6\":\"Bw\""));
}

#[test]
fn verify_selected_theorems() {
    let out = domlab(&["verify", "--theorem", "sr-tree-char", "--max-tree-n", "7"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("sr-tree-char"));
    assert!(text.contains("pass"));

    let unknown = domlab(&["verify", "--theorem", "flat-earth"]);
    assert_eq!(exit_code(&unknown), 2);
}

#[test]
fn verify_json_report() {
    let out = domlab(&[
        "verify",
        "--theorem",
        "teschner",
        "--max-graph-n",
        "5",
        "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["entries"][0]["theorem_id"], "teschner");
    assert_eq!(
        report["entries"][0]["violations"].as_array().unwrap().len(),
        0
    );
}

#[test]
fn verify_list_shows_all_ids() {
    let out = domlab(&["verify", "--list"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 18);
    for id in ["path-class", "teschner", "asr-gamma1", "enumeration-counts"] {
        assert!(text.contains(id), "missing {id}");
    }
}

#[test]
fn verify_full_small_scope_exits_zero() {
    let out = domlab(&["verify", "--max-tree-n", "6", "--max-graph-n", "5"]);
    assert_eq!(
        exit_code(&out),
        0,
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout_of(&out);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("witness"));
}
