use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pauli-ramsey"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

struct Fixture {
    _dir: TempDir,
    x_maximal: String,
    all_paulis: String,
    dir: PathBuf,
}

fn fixture() -> Fixture {
    let dir = TempDir::new().unwrap();
    let x = write(
        dir.path(),
        "x.json",
        r#"{"n":2,"noise":["II","XI","IX","XX"]}"#,
    );
    let all = write(
        dir.path(),
        "all.json",
        r#"{"n":2,"noise":["II","IX","IY","IZ","XI","XX","XY","XZ","YI","YX","YY","YZ","ZI","ZX","ZY","ZZ"]}"#,
    );
    Fixture {
        x_maximal: x.to_string_lossy().into(),
        all_paulis: all.to_string_lossy().into(),
        dir: dir.path().to_path_buf(),
        _dir: dir,
    }
}

#[test]
fn dim_on_maximal_x_channel() {
    let f = fixture();
    let out = run(&["dim", "--channel", &f.x_maximal, "--stabilizer", "ZZ"]);
    assert!(out.status.success());
    assert_eq!(json(&out), serde_json::json!({"dim_PGP": 2, "code_dim": 2}));
}

#[test]
fn dim_with_oracle_reports_both() {
    let f = fixture();
    let out = run(&[
        "dim",
        "--channel",
        &f.all_paulis,
        "--stabilizer",
        "ZI",
        "--oracle",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["dim_PGP"], 4);
    assert_eq!(v["oracle_dim_PGP"], 4);
}

#[test]
fn anticommuting_generators_are_rejected() {
    let f = fixture();
    let out = run(&["dim", "--channel", &f.x_maximal, "--stabilizer", "XI,ZI"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("generators anticommute: (1,2)"));
}

#[test]
fn bad_inputs_exit_one() {
    let f = fixture();
    let bad = write(&f.dir, "bad.json", r#"{"n":2,"noise":["XQ"]}"#);
    let out = run(&["classify", "--channel", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("noise[0]"));

    let out = run(&["classify", "--channel", "/nonexistent/channel.json"]);
    assert_eq!(out.status.code(), Some(1));

    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        run(&[
            "dim",
            "--channel",
            &f.x_maximal,
            "--stabilizer",
            "ZZ",
            "--nope"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        run(&["search", "--channel", &f.x_maximal, "--mode", "cliques"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn classify_maximal_channel() {
    let f = fixture();
    let out = run(&["classify", "--channel", &f.x_maximal, "--oracle"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["verdict"], "MaximalStabilizerChannel");
    assert_eq!(v["oracle"]["agrees"], true);
}

#[test]
fn classify_all_paulis_is_a_clique() {
    let f = fixture();
    let out = run(&["classify", "--channel", &f.all_paulis]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["verdict"], "Clique");
    assert_eq!(v["dim_PGP"], 4);
}

#[test]
fn search_reports_per_k() {
    let f = fixture();
    let out = run(&["search", "--channel", &f.x_maximal, "--mode", "both"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["witness_count"], 0);
    assert_eq!(v["per_k"][0]["examined"], 15);
    assert_eq!(v["per_k"][1]["examined"], 1);

    let out = run(&[
        "search",
        "--channel",
        &f.all_paulis,
        "--mode",
        "clique",
        "--k",
        "1",
    ]);
    let v = json(&out);
    assert_eq!(v["per_k"].as_array().unwrap().len(), 1);
    assert_eq!(v["per_k"][0]["cliques"].as_array().unwrap().len(), 15);
}

#[test]
fn construct_maximal_round_trips_through_classify() {
    let f = fixture();
    let path = f.dir.join("m.json");
    let p = path.to_str().unwrap();
    let out = run(&[
        "construct-maximal",
        "--n",
        "3",
        "--generators",
        "ZZI",
        "-o",
        p,
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["stabilizer"].as_array().unwrap().len(), 3);
    let out = run(&["classify", "--channel", p, "--oracle"]);
    assert_eq!(json(&out)["verdict"], "MaximalStabilizerChannel");

    let out = run(&[
        "construct-maximal",
        "--n",
        "2",
        "--generators",
        "XI,ZI",
        "-o",
        p,
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_runs_every_check() {
    let f = fixture();
    let out = run(&[
        "verify",
        "--channel",
        &f.all_paulis,
        "--stabilizer",
        "ZZ",
        "--oracle",
        "--seed",
        "7",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["consistent"], true);
    assert_eq!(v["clique"], true);
    assert_eq!(v["private_check"]["passed"], true);
    assert_eq!(v["private_check"]["seed"], 7);
}

#[test]
fn output_is_deterministic() {
    let f = fixture();
    let args = [
        "verify",
        "--channel",
        &f.all_paulis,
        "--stabilizer",
        "XX",
        "--seed",
        "3",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["selftest", "--n", "2", "--seed", "5"];
    let a = run(&args);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, run(&args).stdout);
}

#[test]
fn text_mode() {
    let f = fixture();
    let out = run(&["classify", "--channel", &f.all_paulis, "--text"]);
    let s = String::from_utf8_lossy(&out.stdout);
    assert!(s.contains("verdict    Clique"), "{s}");
}
