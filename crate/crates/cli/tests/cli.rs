use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn crosscert(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crosscert"))
        .current_dir(dir)
        .env_remove("CROSSCERT_BUDGET_SECS")
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}\nstdout: {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn gen_sizes() {
    let dir = TempDir::new().unwrap();
    for (args, v, e) in [
        (vec!["--family", "gn", "--n", "5"], 10, 20),
        (vec!["--family", "mn", "--n", "12"], 24, 60),
        (vec!["--family", "hn", "--n", "4"], 16, 40),
        (vec!["--family", "biclique", "--m", "4", "--n", "4"], 8, 16),
        (vec!["--family", "cycle", "--n", "7"], 7, 7),
    ] {
        let mut full = vec!["--json", "gen"];
        full.extend(&args);
        full.extend(["-o", "g.json"]);
        let out = crosscert(dir.path(), &full);
        assert!(out.status.success(), "{args:?}");
        let summary = json_of(&out);
        assert_eq!(summary["vertices"], v);
        assert_eq!(summary["edges"], e);
        let file = read_json(&dir.path().join("g.json"));
        assert_eq!(file["vertices"].as_array().unwrap().len(), v);
        assert_eq!(file["edges"].as_array().unwrap().len(), e);
    }
}

#[test]
fn gen_to_stdout_is_the_graph_file() {
    let dir = TempDir::new().unwrap();
    let out = crosscert(dir.path(), &["gen", "--family", "complete", "--n", "4"]);
    assert!(out.status.success());
    let g = json_of(&out);
    assert_eq!(g["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn usage_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let out = crosscert(dir.path(), &["gen", "--family", "biclique", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = crosscert(dir.path(), &["planar", "missing.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.json"));
    crosscert(
        dir.path(),
        &["gen", "--family", "complete", "--n", "5", "-o", "k5.json"],
    );
    let out = crosscert(dir.path(), &["decide", "k5.json", "--k", "-1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn planar_reports_witness() {
    let dir = TempDir::new().unwrap();
    crosscert(
        dir.path(),
        &[
            "gen", "--family", "biclique", "--m", "3", "--n", "3", "-o", "k33.json",
        ],
    );
    let out = crosscert(dir.path(), &["--json", "planar", "k33.json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["planar"], false);
    assert_eq!(v["shape"], "K33");
    assert_eq!(v["witness"].as_array().unwrap().len(), 9);

    crosscert(
        dir.path(),
        &["gen", "--family", "gn", "--n", "3", "-o", "g3.json"],
    );
    let v = json_of(&crosscert(dir.path(), &["--json", "planar", "g3.json"]));
    assert_eq!(v["planar"], true);
    assert!(v["witness"].is_null());
}

#[test]
fn solve_decide_and_budget_exit_codes() {
    let dir = TempDir::new().unwrap();
    crosscert(
        dir.path(),
        &["gen", "--family", "gn", "--n", "4", "-o", "g4.json"],
    );
    let out = crosscert(dir.path(), &["--json", "solve", "g4.json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["cr"], 4);
    assert_eq!(v["plan"]["crossings"].as_array().unwrap().len(), 4);

    let v = json_of(&crosscert(
        dir.path(),
        &["--json", "decide", "g4.json", "--k", "3"],
    ));
    assert_eq!(v["decision"], "infeasible");
    let v = json_of(&crosscert(
        dir.path(),
        &["--json", "decide", "g4.json", "--k", "4"],
    ));
    assert_eq!(v["decision"], "feasible");

    let out = crosscert(dir.path(), &["--json", "solve", "g4.json", "--max-k", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json_of(&out)["status"], "bounded");
}

#[test]
fn critical_exit_codes() {
    let dir = TempDir::new().unwrap();
    crosscert(
        dir.path(),
        &["gen", "--family", "complete", "--n", "5", "-o", "k5.json"],
    );
    let out = crosscert(dir.path(), &["critical", "k5.json"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("crossing-critical"));

    crosscert(
        dir.path(),
        &["gen", "--family", "gn", "--n", "4", "-o", "g4.json"],
    );
    let out = crosscert(
        dir.path(),
        &[
            "--json", "critical", "g4.json", "--cr", "4", "--edge", "x1--y2", "--edge", "x1x2",
        ],
    );
    assert!(out.status.success());
    assert_eq!(json_of(&out)["verdicts"].as_array().unwrap().len(), 2);

    // A wrong, too small cr: no deletion can go below it.
    crosscert(
        dir.path(),
        &["gen", "--family", "complete", "--n", "6", "-o", "k6.json"],
    );
    let out = crosscert(
        dir.path(),
        &["critical", "k6.json", "--cr", "1", "--edge", "0--1"],
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn draw_verify_audit_round_trip() {
    let dir = TempDir::new().unwrap();
    let out = crosscert(
        dir.path(),
        &[
            "--json", "draw", "--family", "gn", "--n", "7", "-o", "d.json", "--svg", "d.svg",
        ],
    );
    assert!(out.status.success());
    assert_eq!(json_of(&out)["crossings"], 7);
    assert!(std::fs::read_to_string(dir.path().join("d.svg"))
        .unwrap()
        .contains("<svg"));

    let out = crosscert(
        dir.path(),
        &[
            "--json",
            "verify-drawing",
            "d.json",
            "--good",
            "--between",
            "L3",
            "L3",
        ],
    );
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["crossings"], 7);
    assert_eq!(v["between"]["count"], 1);
    assert_eq!(v["goodness"]["no_triple_points"], true);

    let out = crosscert(dir.path(), &["--json", "audit", "d.json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["total_crossings"], 7);
}

#[test]
fn draw_variants() {
    let dir = TempDir::new().unwrap();
    let count = |args: &[&str]| {
        let mut full = vec!["--json", "draw"];
        full.extend(args);
        full.extend(["-o", "x.json"]);
        let out = crosscert(dir.path(), &full);
        assert!(out.status.success(), "{args:?}");
        json_of(&out)["crossings"].as_u64().unwrap()
    };
    assert!(count(&["--family", "gn", "--n", "6", "--delete", "x2x3"]) < 6);
    assert!(count(&["--family", "gn", "--n", "6", "--delete", "x2y3"]) < 6);
    assert_eq!(
        count(&[
            "--family",
            "gn",
            "--n",
            "6",
            "--exchange",
            "2",
            "--exchange",
            "5"
        ]),
        6
    );
    assert_eq!(count(&["--family", "mn", "--n", "12"]), 12);
    assert!(count(&["--family", "hn", "--n", "5"]) <= 30);
    assert_eq!(
        count(&["--family", "gn", "--n", "6", "--jitter", "1000", "--seed", "7"]),
        6
    );

    let out = crosscert(
        dir.path(),
        &["draw", "--family", "mn", "--n", "5", "--delete", "x1y2"],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn jitter_is_seeded() {
    let dir = TempDir::new().unwrap();
    let run = |seed: &str, name: &str| {
        let out = crosscert(
            dir.path(),
            &[
                "draw", "--family", "gn", "--n", "5", "--jitter", "500", "--seed", seed, "-o", name,
            ],
        );
        assert!(out.status.success());
        std::fs::read_to_string(dir.path().join(name)).unwrap()
    };
    assert_eq!(run("1", "a.json"), run("1", "b.json"));
    assert_ne!(run("1", "a.json"), run("2", "c.json"));
}

#[test]
fn audit_refuses_bad_input() {
    let dir = TempDir::new().unwrap();
    crosscert(
        dir.path(),
        &["draw", "--family", "mn", "--n", "5", "-o", "m.json"],
    );
    let out = crosscert(dir.path(), &["audit", "m.json"]);
    assert_eq!(out.status.code(), Some(2));

    // Put y1 on the segment x2--x3.
    crosscert(
        dir.path(),
        &["draw", "--family", "gn", "--n", "4", "-o", "d.json"],
    );
    let mut d = read_json(&dir.path().join("d.json"));
    let x2 = d["positions"]["x2"].clone();
    let x3 = d["positions"]["x3"].clone();
    let mid = |k: usize| {
        let half = |p: &Value| {
            let num: i64 = p[k][0].as_str().unwrap().parse().unwrap();
            let den: i64 = p[k][1].as_str().unwrap().parse().unwrap();
            (num, den)
        };
        let ((a, b), (c, e)) = (half(&x2), half(&x3));
        serde_json::json!([(a * e + c * b).to_string(), (2 * b * e).to_string()])
    };
    let old = d["positions"]["y1"].clone();
    let new = serde_json::json!([mid(0), mid(1)]);
    d["positions"]["y1"] = new.clone();
    for line in d["polylines"].as_object_mut().unwrap().values_mut() {
        for p in line.as_array_mut().unwrap() {
            if *p == old {
                *p = new.clone();
            }
        }
    }
    std::fs::write(dir.path().join("bad.json"), d.to_string()).unwrap();
    let out = crosscert(dir.path(), &["audit", "bad.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("not good"));
    let out = crosscert(dir.path(), &["verify-drawing", "bad.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn manifest_records_digests() {
    let dir = TempDir::new().unwrap();
    let out = crosscert(
        dir.path(),
        &[
            "--manifest",
            "m1.json",
            "draw",
            "--family",
            "gn",
            "--n",
            "5",
            "-o",
            "d.json",
        ],
    );
    assert!(out.status.success());
    let m1 = read_json(&dir.path().join("m1.json"));
    assert_eq!(m1["subcommand"], "draw");
    assert_eq!(m1["exit_code"], 0);
    let written = &m1["outputs"][0];
    let bytes = std::fs::read(dir.path().join("d.json")).unwrap();
    assert_eq!(written["bytes"], bytes.len());
    let digest = written["sha256"].as_str().unwrap();
    assert_eq!(digest.len(), 64);

    crosscert(
        dir.path(),
        &["--manifest", "m2.json", "verify-drawing", "d.json"],
    );
    let m2 = read_json(&dir.path().join("m2.json"));
    assert_eq!(m2["inputs"][0]["sha256"], digest);
    assert_eq!(m2["result"]["crossings"], 5);
    assert!(m2["argv"]
        .as_array()
        .unwrap()
        .iter()
        .any(|a| a == "verify-drawing"));
}

#[test]
fn reproduce_drawings_scope() {
    let dir = TempDir::new().unwrap();
    let out = crosscert(dir.path(), &["--json", "reproduce", "--scope", "drawings"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let v = json_of(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn reproduce_small_budget_exits_3() {
    let dir = TempDir::new().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_crosscert"))
        .current_dir(dir.path())
        .env("CROSSCERT_BUDGET_SECS", "0")
        .args(["reproduce", "--scope", "small-exact"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("BUDGET"));
}
