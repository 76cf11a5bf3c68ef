use std::process::{Command, Output};

use serde_json::Value;

fn latkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr_json(o: &Output) -> Value {
    let text = String::from_utf8(o.stderr.clone()).unwrap();
    serde_json::from_str(text.trim()).unwrap_or_else(|_| panic!("stderr is not JSON: {text}"))
}

#[test]
fn tamari_f_vector() {
    let o = latkit(&["cjc", "--family", "tamari:3", "--f-vector"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1,6,6,1\n");
    let o = latkit(&["cjc", "--family", "tamari:4", "--f-vector"]);
    assert_eq!(stdout(&o), "1,10,20,10,1\n");
}

#[test]
fn m3_is_not_semidistributive() {
    let o = latkit(&["check", "--family", "fixture:m3", "--sd"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr_json(&o);
    assert_eq!(err["error"], "check_failed");
    let join = &err["report"]["join_semidistributive"];
    assert_eq!(join["holds"], false);
    let w = &join["witness"];
    let mut atoms: Vec<&str> = ["x", "y", "z"].iter().map(|k| w[k].as_str().unwrap()).collect();
    atoms.sort();
    assert_eq!(atoms, ["x", "y", "z"]);
}

#[test]
fn fig1_flag_and_crosscut_fail() {
    let o = latkit(&["check", "--family", "fixture:fig1", "--flag", "--crosscut"]);
    assert_eq!(o.status.code(), Some(1));
    let report: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(report["flag"]["holds"], false);
    assert_eq!(report["flag"]["witness"], serde_json::json!(["a", "b", "c"]));
    let cc = &report["crosscut_simplicial"];
    assert_eq!(cc["holds"], false);
    assert_eq!(cc["witness"]["interval"], serde_json::json!(["0̂", "1̂"]));
    assert_eq!(cc["witness"]["atoms"], serde_json::json!(["a", "c"]));
}

#[test]
fn passing_check_exits_zero() {
    let o = latkit(&["check", "--family", "weak:3"]);
    assert!(o.status.success());
    let report: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    for key in ["join_semidistributive", "meet_semidistributive", "flag", "crosscut_simplicial"] {
        assert_eq!(report[key]["holds"], true, "{key}");
    }
}

#[test]
fn domain_errors_exit_one_with_witness() {
    let o = latkit(&["double", "--family", "fixture:m3", "--interval", "x,bottom"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr_json(&o)["error"], "not_comparable");
    let o = latkit(&["cjc", "--family", "fixture:m3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr_json(&o)["error"], "not_join_semidistributive");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["build"][..],
        &["build", "--family", "boolean:2", "--file", "x.json"],
        &["build", "--family", "nosuch:2"],
        &["build", "--family", "boolean:2", "--then", "double:0,nosuch"],
        &["census", "--format", "dot"],
    ] {
        assert_eq!(latkit(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn construction_steps_compose() {
    let o = latkit(&["build", "--family", "boolean:2", "--then", "double:0,0", "--then", "dual"]);
    assert!(o.status.success());
    let doc: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(doc["n"], 5);
    let o = latkit(&["cjg", "--family", "chain:1", "--then", "product:chain:1"]);
    let doc: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 2);
    assert!(doc["edges"].as_array().unwrap().len() == 1);
}

#[test]
fn file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w3.json");
    let o = latkit(&["build", "--family", "weak:3"]);
    std::fs::write(&path, &o.stdout).unwrap();
    let p = path.to_str().unwrap();
    let a = latkit(&["cjc", "--file", p]);
    let b = latkit(&["cjc", "--family", "weak:3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn census_is_deterministic_and_resumable() {
    let a = latkit(&["census", "--max-steps", "3"]);
    let b = latkit(&["census", "--max-steps", "3", "--jobs", "2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 1 + 2 + 8);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("census.jsonl");
    std::fs::write(&path, &a.stdout).unwrap();
    let c = latkit(&["census", "--max-steps", "3", "--resume", path.to_str().unwrap()]);
    assert!(c.status.success());
    assert_eq!(a.stdout, c.stdout);

    std::fs::write(&path, "{\"n\":1}\n").unwrap();
    let bad = latkit(&["census", "--max-steps", "3", "--resume", path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn realize_and_rowmotion() {
    let o = latkit(&["realize", "--graph", "complete:3"]);
    assert!(o.status.success());
    let doc: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(doc["lattice"]["n"], 8);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    std::fs::write(&path, r#"{"n":3,"covers":[[0,1]]}"#).unwrap();
    let o = latkit(&["rowmotion", "--file", path.to_str().unwrap()]);
    assert!(o.status.success());
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.iter().all(|l| l["kappa_star_agrees"] == true));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["cjc", "--family", "weak:4"][..],
        &["enumerate", "--what", "lattices", "--n", "6"],
        &["cjg", "--family", "tamari:4", "--format", "dot"],
    ] {
        assert_eq!(latkit(args).stdout, latkit(args).stdout, "{args:?}");
    }
}
