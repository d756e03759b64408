use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn htcol(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_htcol"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn construct_reports_summary() {
    let out = htcol(&["construct", "8"], None);
    assert_eq!(code(&out), 0);
    assert!(stderr(&out).contains("n=8 λ=1 colours=12 harmonious=true"), "{}", stderr(&out));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["palette"].as_array().unwrap().len(), 12);
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 8);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 28);
}

#[test]
fn construct_then_verify_round_trips() {
    for (n, lambda) in [(1, 1), (4, 1), (7, 1), (12, 1), (13, 1), (4, 3), (9, 2)] {
        let built = htcol(&["construct", &n.to_string(), "--lambda", &lambda.to_string()], None);
        assert_eq!(code(&built), 0);
        let checked = htcol(&["verify", "-"], Some(&built.stdout));
        assert_eq!(code(&checked), 0, "n = {n}: {}", stderr(&checked));
        let report: Value = serde_json::from_slice(&checked.stdout).unwrap();
        assert_eq!(report["harmonious"], true);
    }
}

#[test]
fn verify_flags_a_broken_colouring() {
    let built = htcol(&["construct", "5"], None);
    let mut doc: Value = serde_json::from_slice(&built.stdout).unwrap();
    // give vertex 1 the colour of vertex 0
    doc["vertices"][1] = doc["vertices"][0].clone();
    let text = doc.to_string();
    let out = htcol(&["verify", "-", "--exhaustive"], Some(text.as_bytes()));
    assert_eq!(code(&out), 1);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["proper_vertices"], false);
    assert!(report["violations"].as_array().unwrap().len() > 1);
}

#[test]
fn verify_against_explicit_graph() {
    let dir = tempdir();
    let graph = dir.join("k3.json");
    std::fs::write(&graph, r#"{"n": 3, "edges": [[0, 1, 1], [0, 2, 1], [1, 2, 1]]}"#).unwrap();
    let built = htcol(&["construct", "2"], None);
    let out = htcol(&["verify", "-", "--graph", graph.to_str().unwrap()], Some(&built.stdout));
    assert_eq!(code(&out), 65, "{}", stderr(&out));
}

#[test]
fn solve_exit_codes() {
    let unsat = htcol(&["solve", "4", "--budget", "6"], None);
    assert_eq!(code(&unsat), 2);
    let cert: Value = serde_json::from_slice(&unsat.stdout).unwrap();
    assert_eq!(cert["outcome"], "unsat");
    assert_eq!(cert["budget"], 6);
    assert!(cert["witness"].is_null());

    let sat = htcol(&["solve", "4", "--budget", "7", "--threads", "3"], None);
    assert_eq!(code(&sat), 0);
    let cert: Value = serde_json::from_slice(&sat.stdout).unwrap();
    assert_eq!(cert["outcome"], "sat");
    let witness = cert["witness"].to_string();
    assert_eq!(code(&htcol(&["verify", "-"], Some(witness.as_bytes()))), 0);

    let limited = htcol(&["solve", "5", "--budget", "7", "--node-limit", "5"], None);
    assert_eq!(code(&limited), 3);

    let plain = htcol(&["solve", "3", "--budget", "4", "--no-symmetry"], None);
    assert_eq!(code(&plain), 2);
}

#[test]
fn bounds_table() {
    let out = htcol(&["bounds", "10", "3"], None);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let value = |key: &str| {
        text.lines()
            .find_map(|l| l.strip_prefix(key).filter(|r| r.starts_with(' ')).map(|r| r.trim().to_string()))
            .unwrap()
    };
    assert_eq!(value("lower_bound"), "33");
    assert_eq!(value("expected"), "33");
    assert_eq!(value("closed_form"), "33");
    let out = htcol(&["bounds", "4", "2"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("bound_tight           false"), "{text}");
}

#[test]
fn levi_of_a_graph_file() {
    let input = r#"{"n": 3, "edges": [[0, 1, 2], [1, 2, 1]]}"#;
    let out = htcol(&["levi", "-"], Some(input.as_bytes()));
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["n"], 6);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 6);
    assert_eq!(doc["nodes"][4], serde_json::json!({"edge": [0, 1, 1]}));
}

#[test]
fn sweep_prints_ordered_lines() {
    let out = htcol(&["sweep", "--max-n", "9", "--max-lambda", "2", "--samples", "2", "--threads", "4"], None);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 18);
    assert!(lines[0].starts_with("n=1 λ=1 "));
    assert!(lines[3].starts_with("n=4 λ=1 colours=7 expected=7 ok"));
    assert!(lines[17].starts_with("n=9 λ=2 "));
    assert!(lines.iter().all(|l| l.contains(" ok")));
}

#[test]
fn export_formats() {
    let built = htcol(&["construct", "8"], None);
    let dot = htcol(&["export", "-", "--format", "dot"], Some(&built.stdout));
    assert_eq!(code(&dot), 0);
    let dot = String::from_utf8(dot.stdout).unwrap();
    assert!(dot.starts_with("graph G {"));
    assert!(dot.contains("label=\"∞_1\""));
    let csv = htcol(&["export", "-", "--format", "csv"], Some(&built.stdout));
    let csv = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(csv.lines().next(), Some("u,v,copy,colour_label"));
    assert_eq!(csv.lines().count(), 29);
    let direct = htcol(&["construct", "8", "--format", "csv"], None);
    assert_eq!(String::from_utf8(direct.stdout).unwrap(), csv);
}

#[test]
fn construct_writes_output_file() {
    let dir = tempdir();
    let path = dir.join("k6.dot");
    let out = htcol(&["construct", "6", "--format", "dot", "-o", path.to_str().unwrap()], None);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().contains(" -- "));
}

#[test]
fn usage_data_and_io_errors() {
    assert_eq!(code(&htcol(&["construct", "0"], None)), 64);
    assert_eq!(code(&htcol(&["solve", "4"], None)), 64);
    assert_eq!(code(&htcol(&["frobnicate"], None)), 64);
    assert_eq!(code(&htcol(&["--help"], None)), 0);

    let bad = htcol(&["verify", "-"], Some(br#"{"palette": ["a", "b"], "vertices": [0, 1], "edges": [[0, 1, 0, 9]]}"#));
    assert_eq!(code(&bad), 65);
    assert!(stderr(&bad).contains("edges[0]"), "{}", stderr(&bad));
    let bad = htcol(&["levi", "-"], Some(br#"{"n": 2, "edges": [[0, 1, 1], [1, 1, 1]]}"#));
    assert_eq!(code(&bad), 65);
    assert!(stderr(&bad).contains("edges[1]"), "{}", stderr(&bad));
    assert_eq!(code(&htcol(&["verify", "-"], Some(b"not json"))), 65);

    let missing = htcol(&["verify", "/definitely/not/here.json"], None);
    assert_eq!(code(&missing), 74);
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("htcol-test-{}-{:?}", std::process::id(), std::thread::current().id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
