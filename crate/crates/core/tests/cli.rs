//! End-to-end runs of the command-line interface, in-process through
//! `cli::run` and as a spawned binary for standard input handling.

use std::io::Write as _;
use std::process::{Command, Stdio};

use abperfect::cli::run;
use serde_json::Value;

fn run_cli(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("abperfect").chain(args.iter().copied());
    let status = run(argv, &mut input, &mut out, &mut err);
    (
        status,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (status, out, err) = run_cli(args, "");
    assert_eq!(status, 0, "{args:?}: {err}");
    out
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).unwrap()
}

fn corpus_file(lines: &[&str]) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    for l in lines {
        writeln!(f, "{l}").unwrap();
    }
    f
}

#[test]
fn fig2_profile_json() {
    assert_eq!(
        ok(&["params", "--named", "fig2", "--format", "json"]),
        "{\"omega\":2,\"chi\":3,\"gamma\":4,\"alpha\":5,\"psi\":6}\n"
    );
}

#[test]
fn p4_omega_psi_counterexample_is_whole_graph() {
    let v = json(&[
        "check", "--a", "omega", "--b", "psi", "--named", "p4", "--format", "json",
    ]);
    assert_eq!(v["perfect"], false);
    assert_eq!(v["pair"], serde_json::json!(["omega", "psi"]));
    assert_eq!(
        v["counterexample"]["vertices"],
        serde_json::json!([0, 1, 2, 3])
    );
    assert_eq!(v["counterexample"]["a_value"], 2);
    assert_eq!(v["counterexample"]["b_value"], 3);
}

#[test]
fn omega_psi_equivalence_sweep_passes() {
    let (status, out, _) = run_cli(&["sweep", "--theorem", "theorem4", "--max-n", "6"], "");
    assert_eq!(status, 0);
    assert!(out.contains("0 violations (pass)"), "{out}");
}

/// Every single-graph subcommand with every input source and output format.
#[test]
fn every_graph_command_input_and_format() {
    let file = corpus_file(&["Ch", "C~"]);
    let path = file.path().to_str().unwrap();
    let commands: [&[&str]; 4] = [
        &["params"],
        &["check", "--a", "chi", "--b", "alpha"],
        &["recognize"],
        &["forbidden", "--family", "omega_psi_quartet"],
    ];
    let inputs: [&[&str]; 4] = [
        &["--g6", "Ch"],
        &["--named", "p4"],
        &["--file", path],
        &["--file", "-"],
    ];
    let formats: [&[&str]; 4] = [
        &[],
        &["--format", "text"],
        &["--format", "json"],
        &["--format", "csv"],
    ];
    for cmd in commands {
        for input in inputs {
            for format in formats {
                let args: Vec<&str> = cmd
                    .iter()
                    .chain(input.iter())
                    .chain(format.iter())
                    .copied()
                    .collect();
                let (status, out, err) = run_cli(&args, "Ch\nC~\n");
                assert_eq!(status, 0, "{args:?}: {err}");
                assert!(!out.is_empty(), "{args:?}");
                let from_file = input[0] == "--file";
                match format.get(1).copied() {
                    Some("json") => {
                        let v: Value = serde_json::from_str(&out).unwrap();
                        if from_file {
                            let items = v.as_array().unwrap();
                            assert_eq!(items.len(), 2, "{args:?}");
                            assert_eq!(items[0]["graph6"], "Ch");
                            assert_eq!(items[1]["graph6"], "C~");
                        } else {
                            assert!(v.is_object(), "{args:?}");
                        }
                    }
                    Some("csv") => {
                        let rows = out.lines().count();
                        assert_eq!(rows, if from_file { 3 } else { 2 }, "{args:?}: {out}");
                        assert_eq!(out.starts_with("graph6,"), from_file, "{args:?}");
                    }
                    _ => {}
                }
            }
        }
    }
}

#[test]
fn forbidden_families() {
    let v = json(&[
        "forbidden",
        "--family",
        "odd_holes_and_antiholes",
        "--named",
        "c7",
        "--format",
        "json",
    ]);
    assert_eq!(v["witness"]["pattern"], "C7");
    let v = json(&[
        "forbidden",
        "--family",
        "p4_only",
        "--named",
        "k3,3",
        "--format",
        "json",
    ]);
    assert_eq!(v["witness"], Value::Null);
    assert_eq!(v["family"], serde_json::json!(["P4"]));
    let v = json(&[
        "forbidden",
        "--family",
        "achro_triple",
        "--named",
        "3k2",
        "--format",
        "json",
    ]);
    assert_eq!(v["witness"]["pattern"], "3K2");
}

#[test]
fn recognize_formats() {
    let v = json(&["recognize", "--named", "k4", "--format", "json"]);
    assert_eq!(v, serde_json::json!({"kind": "complete", "m": 4}));
    assert!(ok(&["recognize", "--named", "c4"]).starts_with("rejected: "));
    let csv = ok(&["recognize", "--named", "e3", "--format", "csv"]);
    assert_eq!(csv, "kind,m\nempty_part,3\n");
}

#[test]
fn named_graph_syntax() {
    let cases = [
        ("k4", [4, 4, 4, 4, 4]),
        ("p4", [2, 2, 3, 3, 3]),
        ("c4", [2, 2, 2, 2, 3]),
        ("e3", [1, 1, 1, 1, 1]),
        ("k2,3", [2, 2, 2, 2, 3]),
        ("p3+k2", [2, 2, 2, 3, 3]),
        ("3k2", [2, 2, 2, 3, 3]),
    ];
    for (name, expected) in cases {
        let v = json(&["params", "--named", name, "--format", "json"]);
        let got: Vec<u64> = ["omega", "chi", "gamma", "alpha", "psi"]
            .iter()
            .map(|k| v[k].as_u64().unwrap())
            .collect();
        assert_eq!(got, expected.map(|x| x as u64), "{name}");
    }
}

#[test]
fn every_sweep_theorem_and_format() {
    let theorems = [
        "eq1_chain",
        "theorem4",
        "theorem1_cs",
        "theorem2_cs",
        "lemma1",
        "lemma2",
        "interpolation_hhp",
        "interpolation_grundy",
        "figure3_inclusions",
    ];
    for t in theorems {
        for format in ["text", "json", "csv"] {
            for jobs in ["1", "2"] {
                let (status, out, err) = run_cli(
                    &[
                        "sweep",
                        "--theorem",
                        t,
                        "--max-n",
                        "4",
                        "--jobs",
                        jobs,
                        "--format",
                        format,
                    ],
                    "",
                );
                assert_eq!(status, 0, "{t} {format}: {err}");
                if format == "json" {
                    let v: Value = serde_json::from_str(&out).unwrap();
                    assert_eq!(v["theorem"], t);
                    assert_eq!(v["n_max"], 4);
                    assert_eq!(v["violations"], serde_json::json!([]));
                    assert!(v["elapsed_ms"].is_u64());
                }
                if format == "csv" {
                    assert!(
                        out.starts_with("theorem,n_max,checked,violations,elapsed_ms\n"),
                        "{out}"
                    );
                }
            }
        }
    }
}

#[test]
fn sweep_json_is_deterministic_apart_from_timing() {
    let strip = |args: &[&str]| {
        let mut v = json(args);
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let a = strip(&[
        "sweep",
        "--theorem",
        "theorem4",
        "--max-n",
        "6",
        "--format",
        "json",
    ]);
    let b = strip(&[
        "sweep",
        "--theorem",
        "theorem4",
        "--max-n",
        "6",
        "--format",
        "json",
        "--jobs",
        "4",
    ]);
    assert_eq!(a, b);
}

#[test]
fn graph_json_is_byte_deterministic() {
    let file = corpus_file(&["Ch", "D?{", "C~", "Dhc"]);
    let path = file.path().to_str().unwrap();
    for args in [
        vec!["params", "--file", path, "--format", "json"],
        vec![
            "check", "--a", "omega", "--b", "gamma", "--file", path, "--format", "json",
        ],
        vec!["recognize", "--file", path, "--format", "json"],
        vec![
            "forbidden",
            "--family",
            "omega_psi_quartet",
            "--file",
            path,
            "--format",
            "json",
        ],
    ] {
        assert_eq!(ok(&args), ok(&args));
    }
}

#[test]
fn cycles_table() {
    let v = json(&["cycles", "--max-n", "12", "--format", "json"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 10);
    let unequal: Vec<u64> = rows
        .iter()
        .filter(|r| r["alpha"] != r["psi"])
        .map(|r| r["n"].as_u64().unwrap())
        .collect();
    assert_eq!(unequal, vec![4, 11]);
    assert!(rows.iter().all(|r| r["matches"] == true));
    assert!(ok(&["cycles", "--max-n", "5", "--format", "csv"])
        .starts_with("n,alpha,psi,predicted_equal,matches\n"));
    assert!(ok(&["cycles", "--max-n", "5"]).contains("alpha: 2"));
}

#[test]
fn usage_and_input_errors_exit_two() {
    let cases: [&[&str]; 13] = [
        &[],
        &["frobnicate"],
        &["params"],
        &["params", "--g6", "Ch", "--named", "p4"],
        &["params", "--g6", "C"],
        &["params", "--named", "q7"],
        &["params", "--named", "k14"],
        &["check", "--a", "psi", "--b", "omega", "--named", "p4"],
        &["check", "--a", "delta", "--b", "psi", "--named", "p4"],
        &["sweep", "--theorem", "theorem5", "--max-n", "3"],
        &["sweep", "--theorem", "theorem4", "--max-n", "9"],
        &[
            "sweep",
            "--theorem",
            "theorem4",
            "--max-n",
            "3",
            "--jobs",
            "0",
        ],
        &["cycles", "--max-n", "13"],
    ];
    for args in cases {
        let (status, out, err) = run_cli(args, "");
        assert_eq!(status, 2, "{args:?}: {out}");
        assert!(!err.is_empty(), "{args:?}");
    }
    let (_, _, err) = run_cli(&["params", "--named", "k14"], "");
    assert!(err.contains("at most 13"), "{err}");
    let (_, _, err) = run_cli(
        &["check", "--a", "omega", "--b", "chi", "--named", "k11"],
        "",
    );
    assert!(err.contains("at most 10"), "{err}");
}

#[test]
fn bad_file_line_is_reported_with_its_number() {
    let file = corpus_file(&["Ch", "", "not graph6"]);
    let (status, _, err) = run_cli(&["params", "--file", file.path().to_str().unwrap()], "");
    assert_eq!(status, 2);
    assert!(err.contains("line 3"), "{err}");
    let (status, _, err) = run_cli(&["params", "--file", "/nonexistent/graphs.g6"], "");
    assert_eq!(status, 2);
    assert!(err.starts_with("error: "), "{err}");
}

#[test]
fn empty_file_gives_empty_list() {
    let file = corpus_file(&[]);
    assert_eq!(
        ok(&[
            "params",
            "--file",
            file.path().to_str().unwrap(),
            "--format",
            "json"
        ]),
        "[]\n"
    );
}

#[test]
fn binary_reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_abperfect"))
        .args(["params", "--file", "-", "--format", "csv"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b">>graph6<<Ch\nA_\n")
        .unwrap();
    let output = child.wait_with_output().unwrap();
    assert!(output.status.success());
    assert_eq!(
        String::from_utf8(output.stdout).unwrap(),
        "graph6,omega,chi,gamma,alpha,psi\nCh,2,2,3,3,3\nA_,2,2,2,2,2\n"
    );
}

#[test]
fn binary_exit_status_on_error() {
    let output = Command::new(env!("CARGO_BIN_EXE_abperfect"))
        .args(["params", "--g6", "@@@"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("graph6"));
}
