//! End-to-end tests driving the compiled binary through temp files.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_instanton"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn write(path: &Path, value: &Value) {
    fs::write(path, serde_json::to_string(value).unwrap()).unwrap();
}

fn member_file_11() -> Value {
    json!({
        "n": 1,
        "k": 1,
        "basis": [["1", "0", "0", "1"], ["0", "1", "0", "0"]],
    })
}

#[test]
fn dim_prints_the_formula() {
    let out = run(&["dim", "--n", "1", "--k", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().next(), Some("13"));

    let out = run(&["dim", "--n", "2", "--k", "3", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v, json!({ "fiber": 16, "base": 29, "total": 45 }));
}

#[test]
fn membership_accepts_the_member_example() {
    let dir = tempfile::tempdir().unwrap();
    let u = dir.path().join("u.json");
    write(&u, &member_file_11());
    let out = run(&["membership", "--in", u.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "Member (exact)");
}

#[test]
fn membership_rejects_a_rank_one_span() {
    let dir = tempfile::tempdir().unwrap();
    let u = dir.path().join("u.json");
    write(
        &u,
        &json!({ "n": 1, "k": 1, "basis": [["1", "0", "0", "0"], ["0", "0", "0", "1"]] }),
    );
    let out = run(&["membership", "--in", u.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["member"], json!(false));
    assert!(v["witness"].is_array() || v["certificate"].is_array());
}

#[test]
fn pipeline_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let u = dir.path().join("u.json");
    let m = dir.path().join("m.json");
    let u_path = u.to_str().unwrap();
    let m_path = m.to_str().unwrap();
    for (n, k) in [(1usize, 1usize), (1, 2), (2, 1)] {
        for seed in 1..=20u64 {
            let ns = n.to_string();
            let ks = k.to_string();
            let ss = seed.to_string();
            let out = run(&[
                "gen-u", "--n", &ns, "--k", &ks, "--seed", &ss, "--trials", "4", "--out", u_path,
            ]);
            assert_eq!(code(&out), 0, "gen-u n={n} k={k} seed={seed}");

            let out = run(&["membership", "--in", u_path, "--trials", "4", "--seed", &ss]);
            assert_eq!(code(&out), 0, "membership n={n} k={k} seed={seed}");
            assert!(stdout(&out).starts_with("Member"));

            let out = run(&["build-monad", "--in", u_path, "--out", m_path]);
            assert_eq!(code(&out), 0, "build-monad n={n} k={k} seed={seed}");

            let out = run(&["verify", "--in", m_path, "--trials", "3", "--seed", &ss]);
            assert_eq!(code(&out), 0, "verify n={n} k={k} seed={seed}");

            let out = run(&["simplicity", "--in", m_path]);
            assert_eq!(code(&out), 0, "simplicity n={n} k={k} seed={seed}");
        }
    }
}

#[test]
fn verify_flags_a_corrupted_monad() {
    let dir = tempfile::tempdir().unwrap();
    let u = dir.path().join("u.json");
    let m = dir.path().join("m.json");
    write(&u, &member_file_11());
    let out = run(&["build-monad", "--in", u.to_str().unwrap(), "--out", m.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    let mut monad: Value = serde_json::from_str(&fs::read_to_string(&m).unwrap()).unwrap();
    monad["b"][0][0][0] = json!("17");
    write(&m, &monad);

    let out = run(&["verify", "--in", m.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["composition_zero"], json!(false));
    assert_eq!(v["is_monad"], json!(false));
}

#[test]
fn frame_field_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let u = dir.path().join("u.json");
    let m = dir.path().join("m.json");
    let mut file = member_file_11();
    file["g"] = json!([
        ["0", "1", "0", "0"],
        ["1", "0", "0", "0"],
        ["0", "0", "1", "0"],
        ["0", "0", "1", "1"]
    ]);
    write(&u, &file);
    let out = run(&["build-monad", "--in", u.to_str().unwrap(), "--out", m.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let out = run(&["verify", "--in", m.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    file["g"] = json!([
        ["1", "0", "0", "0"],
        ["1", "0", "0", "0"],
        ["0", "0", "1", "0"],
        ["0", "0", "0", "1"]
    ]);
    write(&u, &file);
    let out = run(&["build-monad", "--in", u.to_str().unwrap()]);
    assert_eq!(code(&out), 2, "singular frame is a config error");
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ nope").unwrap();
    for cmd in ["membership", "verify", "simplicity", "invariants", "stabilizer"] {
        let out = run(&[cmd, "--in", bad.to_str().unwrap()]);
        assert_eq!(code(&out), 2, "{cmd} on malformed JSON");
    }
    let out = run(&["verify", "--in", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let out = run(&["dim", "--n", "0", "--k", "1"]);
    assert_eq!(code(&out), 2);

    let inv = dir.path().join("inv.json");
    write(&inv, &json!({ "pair": [], "quadruple": [] }));
    let out = run(&["invariants", "--in", inv.to_str().unwrap()]);
    assert_eq!(code(&out), 2, "pair and quadruple together");
}

#[test]
fn cohomology_table_json_shape() {
    let out = run(&["cohomology", "--n", "1", "--k", "1", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["window"], json!([-3, 0]));
    assert_eq!(v["entries"], json!({ "1,-1": 2, "1,0": 2, "2,-3": 2 }));
}

#[test]
fn invariants_of_the_reference_pair() {
    let dir = tempfile::tempdir().unwrap();
    let inv = dir.path().join("inv.json");
    write(
        &inv,
        &json!({ "pair": [[["1", "0"], ["0", "2"]], [["0", "1"], ["1", "0"]]] }),
    );
    let out = run(&["invariants", "--in", inv.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "3 0 5 0 2");
}

#[test]
fn stabilizer_of_the_graph_example() {
    let dir = tempfile::tempdir().unwrap();
    let gp = dir.path().join("gp.json");
    write(
        &gp,
        &json!({
            "n": 1,
            "u1": [["1", "0"], ["1", "0"]],
            "u2": [["0", "1"], ["0", "2"]]
        }),
    );
    let out = run(&["stabilizer", "--in", gp.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn kernel_sections_dimension() {
    let dir = tempfile::tempdir().unwrap();
    let u = dir.path().join("u.json");
    let m = dir.path().join("m.json");
    write(&u, &member_file_11());
    run(&["build-monad", "--in", u.to_str().unwrap(), "--out", m.to_str().unwrap()]);
    let out = run(&["kernel-sections", "--in", m.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "4");
}
