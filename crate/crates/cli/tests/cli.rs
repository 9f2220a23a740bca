use std::process::{Command, Output};

use serde_json::Value;

fn dialgebra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dialgebra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = dialgebra(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn table<'a>(tsv: &'a str, name: &str) -> &'a str {
    let start = tsv.find(&format!("# {name}\n")).unwrap() + name.len() + 3;
    let rest = &tsv[start..];
    rest[..rest.find("\n# ").map_or(rest.len(), |i| i + 1)].trim_end()
}

#[test]
fn reproduce_both_diproducts() {
    let r = json(&[
        "reproduce",
        "diproducts-deg5-both",
        "--modulus",
        "101",
        "--output",
        "json",
    ]);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["matrix_shape"], serde_json::json!([600, 690]));
    assert_eq!(r["rank"], 250);
    assert_eq!(r["nullity"], 440);
    assert_eq!(r["generators"].as_array().unwrap().len(), 6);
    assert!(r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));
}

#[test]
fn reproduce_printed_matrices_over_rationals() {
    let out = dialgebra(&[
        "reproduce",
        "jordan-dialgebra-deg3",
        "--field",
        "rational",
        "--output",
        "tsv",
    ]);
    assert!(out.status.success());
    let tsv = String::from_utf8(out.stdout).unwrap();
    let matrix = include_str!("../../core/tests/fixtures/jd_deg3_matrix.txt");
    let rcf = include_str!("../../core/tests/fixtures/jd_deg3_rcf.txt");
    assert_eq!(table(&tsv, "matrix"), matrix.trim_end());
    assert_eq!(table(&tsv, "row canonical form"), rcf.trim_end());
    assert!(!tsv.contains("\tFAIL\t"));
}

#[test]
fn conjecture_for_jordan_triple_product() {
    let r = json(&["conjecture", "--omega", "abc+cba", "--degree", "5"]);
    assert_eq!(r["details"]["embedded"]["equal"], true);
    assert_eq!(r["details"]["embedded"]["j_dim"], 2990);
    let degrees: Vec<_> = r["details"]["degreewise"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["degree"].clone())
        .collect();
    assert_eq!(degrees, [3, 5]);
}

#[test]
fn repeated_runs_are_identical() {
    let args = [
        "reproduce",
        "instance-suite",
        "--seed",
        "11",
        "--output",
        "tsv",
    ];
    let a = dialgebra(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_dialgebra"))
        .args(args)
        .env("DIALGEBRA_THREADS", "1")
        .output()
        .unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_and_constraint_errors() {
    let out = dialgebra(&["reproduce", "no-such-experiment"]);
    assert_eq!(out.status.code(), Some(2));
    let out = dialgebra(&["reproduce", "diproduct1-deg5", "--modulus", "5"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("field constraint"));
    let out = dialgebra(&["identities", "--ops", "diproducts"]);
    assert_eq!(out.status.code(), Some(2));
    let out = dialgebra(&[
        "verify",
        "--variety",
        "no-such-variety",
        "--ops",
        "diproducts",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn custom_files() {
    let dir = std::env::temp_dir().join(format!("dialgebra-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let ops = dir.join("ops.txt");
    std::fs::write(&ops, "# the first diproduct\ndi tp = ^abc + cb^a\n").unwrap();
    let variety = dir.join("variety.txt");
    std::fs::write(
        &variety,
        "variety outer\noperation op1 3\nidentity S: (a,b,c)_1 - (c,b,a)_1\n",
    )
    .unwrap();
    let (ops, variety) = (ops.to_str().unwrap(), variety.to_str().unwrap());

    let r = json(&["identities", "--ops", ops, "--degree", "3"]);
    assert_eq!(r["matrix_shape"], serde_json::json!([18, 6]));
    assert_eq!(r["rank"], 6);
    assert_eq!(r["nullity"], 0);

    let out = dialgebra(&["verify", "--ops", ops, "--variety", variety]);
    assert_eq!(out.status.code(), Some(1));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["checks"][0]["pass"], false);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn modulo_verification_detects_a_wrong_identity() {
    let r = json(&[
        "verify",
        "--variety",
        "jd-triple-deg5",
        "--ops",
        "jordan-di-triple",
        "--modulo",
        "jordan-dialgebra",
    ]);
    assert_eq!(r["checks"].as_array().unwrap().len(), 7);

    let dir = std::env::temp_dir().join(format!("dialgebra-cli-mod-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wrong.txt");
    std::fs::write(
        &path,
        "variety wrong\noperation op1 3\noperation op2 3\nidentity W: <a,<d,c,b>_2,e>_1\n",
    )
    .unwrap();
    let out = dialgebra(&[
        "verify",
        "--variety",
        path.to_str().unwrap(),
        "--ops",
        "jordan-di-triple",
        "--modulo",
        "jordan-dialgebra",
    ]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn kp_and_bso() {
    let r = json(&["kp", "--variety", "jts"]);
    assert_eq!(r["details"]["part2"].as_array().unwrap().len(), 12);
    let r = json(&["bso", "--omega", "ab-ba"]);
    assert_eq!(r["generators"].as_array().unwrap().len(), 2);
}
