use std::path::Path;
use std::process::{Command, Output};

fn hopfdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfdual")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    hopfdual(args).status.code().expect("exit code")
}

fn report(args: &[&str], out: &Path) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--out", out.to_str().unwrap()]);
    let o = hopfdual(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap()
}

#[test]
fn axioms_exit_codes() {
    assert_eq!(code(&["axioms", "--spec", r#"{"type":"sym","n":3}"#, "--side", "function"]), 0);
    assert_eq!(code(&["axioms", "--spec", r#"{"type":"twisted","n":5}"#]), 0);
    assert_eq!(code(&["axioms", "--spec", r#"{"type":"sym","n":3"#]), 2);
    assert_eq!(code(&["axioms", "--spec", r#"{"type":"sym","n":9}"#]), 2);
    assert_eq!(code(&["axioms", "--spec", "/nonexistent/spec.json"]), 2);
    assert_eq!(code(&["axioms", "--spec", r#"{"type":"cyclic","n":3}"#, "--tol", "0.5"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn spec_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q8.json");
    std::fs::write(&path, r#"{"type":"quaternion"}"#).unwrap();
    let r = report(&["axioms", "--spec", path.to_str().unwrap(), "--side", "groupvn"], &dir.path().join("r.json"));
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["passes"], true);
    assert_eq!(r["input"]["label"], "W*(Q8)");
}

#[test]
fn dualize_sym3_double_reflexive() {
    let dir = tempfile::tempdir().unwrap();
    let r = report(
        &["dualize", "--spec", r#"{"type":"sym","n":3}"#, "--double", "--reflexive"],
        &dir.path().join("r.json"),
    );
    assert_eq!(r["stages"][0]["dual_signature"], serde_json::json!([1, 1, 2]));
    assert_eq!(r["reflexivity"]["reflexive"], true);
    assert_eq!(r["checks_pass"], true);
    assert!(r.get("wall_clock_ms").is_none());
}

#[test]
fn dualize_twisted_is_not_reflexive() {
    let dir = tempfile::tempdir().unwrap();
    let r = report(&["dualize", "--spec", r#"{"type":"twisted","n":5}"#, "--double"], &dir.path().join("r.json"));
    assert_eq!(r["stages"][0]["dual_signature"], serde_json::json!([1]));
    assert_eq!(r["stages"][0]["ideal_dim"], 1);
    assert_eq!(r["reflexivity"]["reflexive"], false);
    assert_eq!(r["annihilator"]["status"], "not_applicable");
}

#[test]
fn dualize_cyclic6_reconstructs_z6() {
    let dir = tempfile::tempdir().unwrap();
    let r = report(&["dualize", "--spec", r#"{"type":"cyclic","n":6}"#], &dir.path().join("r.json"));
    let g = &r["dual_group"];
    assert_eq!(g["method"], "spectrum");
    assert_eq!(g["order"], 6);
    assert_eq!(g["abelian"], true);
    // some element has order 6
    let table: Vec<Vec<usize>> = serde_json::from_value(g["table"].clone()).unwrap();
    let e = (0..6).find(|&x| (0..6).all(|y| table[x][y] == y)).unwrap();
    let order = |x: usize| {
        let mut p = x;
        let mut k = 1;
        while p != e {
            p = table[p][x];
            k += 1;
        }
        k
    };
    assert!((0..6).any(|x| order(x) == 6));
}

#[test]
fn pontryagin_exit_codes() {
    assert_eq!(code(&["pontryagin", "--spec", r#"{"type":"cyclic","n":8}"#]), 0);
    assert_eq!(
        code(&[
            "pontryagin",
            "--spec",
            r#"{"type":"product","factors":[{"type":"cyclic","n":2},{"type":"cyclic","n":4}]}"#
        ]),
        0
    );
    assert_eq!(code(&["pontryagin", "--spec", r#"{"type":"sym","n":3}"#]), 2);
}

#[test]
fn twisted_demo_lists_characters() {
    let dir = tempfile::tempdir().unwrap();
    let r = report(&["twisted-demo", "--n", "6"], &dir.path().join("r.json"));
    let standard: Vec<u64> = r["characters"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["standard"] == true)
        .map(|c| c["s"].as_u64().unwrap())
        .collect();
    assert_eq!(standard, vec![0, 3]);
    assert_eq!(r["dual_dim"], 2);
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["dualize", "--spec", r#"{"type":"dihedral","n":4}"#, "--side", "groupvn", "--triple", "--reflexive"];
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    report(&args, &a);
    report(&args, &b);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn timing_is_opt_in() {
    let dir = tempfile::tempdir().unwrap();
    let r = report(&["axioms", "--spec", r#"{"type":"cyclic","n":3}"#, "--timing"], &dir.path().join("r.json"));
    assert!(r["wall_clock_ms"].as_f64().unwrap() >= 0.0);
}

#[test]
fn fleet_runs_entries_in_order() {
    let dir = tempfile::tempdir().unwrap();
    let r = report(
        &[
            "fleet",
            "--spec",
            r#"[{"type":"cyclic","n":3},{"type":"twisted","n":5},{"type":"sym","n":3}]"#,
            "--seed",
            "0x10",
        ],
        &dir.path().join("r.json"),
    );
    let entries = r["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 5);
    let labels: Vec<&str> = entries.iter().map(|e| e["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["C(Z3)", "W*(Z3)", "Tw(Z5)", "C(S3)", "W*(S3)"]);
    let seeds: Vec<u64> = entries.iter().map(|e| e["seed"].as_u64().unwrap()).collect();
    assert_eq!(seeds, [16, 17, 18, 19, 20]);
    assert_eq!(entries[2]["reflexive"], false);
    assert!(entries.iter().filter(|e| e["label"] != "Tw(Z5)").all(|e| e["reflexive"] == true));
}

#[test]
fn summary_goes_to_stdout() {
    let o = hopfdual(&["dualize", "--spec", r#"{"type":"sym","n":3}"#]);
    let s = String::from_utf8(o.stdout).unwrap();
    assert!(s.contains("C(S3)^ [1, 1, 2]"), "{s}");
}
