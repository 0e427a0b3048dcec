use std::io::Write;
use std::process::{Command, Output, Stdio};

use ocpoly::polytope::SkeletonGraph;

const X: &str = "# the poset X\nd 5\nnames: a b c g h\n0 2\n1 2\n2 3\n2 4\n";

fn ocpoly(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ocpoly"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(input) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(input.as_bytes())
            .unwrap();
    }
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn stats_from_stdin() {
    let o = ocpoly(&["stats", "-", "--format", "json"], Some(X));
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["edges_order"], 24);
    assert_eq!(v["edges_chain"], 24);
    assert_eq!(v["linear_extensions"], 4);
    assert_eq!(v["maximal_chains"], 4);
    assert_eq!(v["x_free"], false);
    // fields come out in declaration order
    let raw = String::from_utf8(o.stdout).unwrap();
    let pos = |k: &str| raw.find(&format!("\"{k}\"")).unwrap();
    assert!(pos("d") < pos("ideals") && pos("ideals") < pos("antichains"));
    assert!(pos("linear_extensions") < pos("x_free"));
}

#[test]
fn exit_codes() {
    let o = ocpoly(&["stats", "-"], Some("d 3\n0 1\n0 x\n"));
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(
        code(&ocpoly(&["stats", "-"], Some("d 3\n0 1\n1 2\n2 0\n"))),
        3
    );
    assert_eq!(
        code(&ocpoly(&["check", "--oracle", "-"], Some("d 10\n"))),
        4
    );
    assert_eq!(code(&ocpoly(&["stats", "-"], Some("d 30\n"))), 4);
    assert_eq!(code(&ocpoly(&["suite", "--oracle-max-d", "7"], None)), 5);
    assert_eq!(code(&ocpoly(&["suite", "--density", "3/2"], None)), 5);
}

#[test]
fn export_round_trip_through_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("x.txt");
    let output = dir.path().join("x.json");
    std::fs::write(&input, X).unwrap();
    for kind in ["order", "chain"] {
        let o = ocpoly(
            &[
                "export",
                input.to_str().unwrap(),
                "--kind",
                kind,
                "-o",
                output.to_str().unwrap(),
            ],
            None,
        );
        assert_eq!(code(&o), 0);
        let json = std::fs::read_to_string(&output).unwrap();
        assert!(json.starts_with(&format!("{{\"kind\":\"{kind}\",\"vertices\":[[0,0,0,0,0]")));
        let g = SkeletonGraph::from_json(&json).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 24));
        assert_eq!(g.to_json(), json.trim_end());
    }
}

#[test]
fn bijection_and_check() {
    let o = ocpoly(&["bijection", "-"], Some(X));
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains('↦')).count(), 24);
    let o = ocpoly(&["check", "-", "--format", "json"], Some("d 3\n0 1\n1 2\n"));
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(
        v["report"]["facet_count_order"],
        v["report"]["facet_count_chain"]
    );
}

#[test]
fn suite_config_file_and_output() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    let report = dir.path().join("report.json");
    std::fs::write(
        &cfg,
        r#"{"exhaustive_max_d": 3, "random_trials": 20, "random_d_range": [4, 6], "seed": 5}"#,
    )
    .unwrap();
    let args = [
        "suite",
        "--config",
        cfg.to_str().unwrap(),
        "--seed",
        "6",
        "-o",
        report.to_str().unwrap(),
    ];
    let o = ocpoly(&args, None);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["config"]["seed"], 6);
    assert_eq!(v["config"]["random_trials"], 20);
    assert_eq!(v["stats"]["posets"], 1 + 3 + 19 + 20);
    assert_eq!(v["all_passed"], true);

    std::fs::write(&cfg, r#"{"exhaustive_max_d": "three"}"#).unwrap();
    assert_eq!(
        code(&ocpoly(&["suite", "--config", cfg.to_str().unwrap()], None)),
        5
    );
}

#[test]
fn mutation_report_carries_counterexample() {
    let o = ocpoly(
        &[
            "suite",
            "--exhaustive-max-d",
            "2",
            "--random-trials",
            "0",
            "--mutation",
            "chain-edge-ignores-connectivity",
        ],
        None,
    );
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let props = v["properties"].as_array().unwrap();
    let edges = props
        .iter()
        .find(|p| p["name"] == "edge_count_equality")
        .unwrap();
    assert_eq!(edges["counterexample"]["poset"], "d 2\n");
    assert_eq!(edges["counterexample"]["origin"]["kind"], "exhaustive");
}
