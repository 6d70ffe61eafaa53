use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn hlm() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hlm"));
    c.env_remove("HLM_CONFIG");
    c
}

fn run(c: &mut Command) -> (i32, String) {
    let out = c.output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out) = run(hlm().args(args));
    (code, serde_json::from_str(&out).unwrap())
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hlm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn classify_reports_the_table_row() {
    let (code, v) = json(&[
        "classify", "--L2", "1", "--M2", "1", "--H2", "1/4", "--f", "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["result"]["type"], "o(2,4)");
    assert_eq!(v["command"]["flags"]["H2"], "1/4");

    let (code, v) = json(&["classify", "--L2", "-1", "--M2", "-1", "--H2", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["type"], "o(3,3)");
}

#[test]
fn jacobi_failure_exits_one() {
    let (code, v) = json(&["jacobi", "--family", "ansatz"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "fail");
    assert!(v["result"]["residuals_nonzero"].as_u64().unwrap() > 0);
}

#[test]
fn bad_input_exits_two() {
    for args in [
        vec!["classify", "--L2", "0", "--M2", "1", "--H2", "1"],
        vec!["classify", "--L2", "x", "--M2", "1", "--H2", "1"],
        vec!["classify", "--M2", "1", "--H2", "1"],
        vec!["casimir", "--L2", "1", "--M2", "-1", "--H2", "inf"],
        vec!["rep-verify", "--L2", "1", "--M2", "-1", "--H2", "4/3"],
        vec![
            "field-op", "--dim", "1", "--L2", "1", "--M2", "-1", "--H2", "4",
        ],
    ] {
        let (code, v) = json(&args);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(v["verdict"], "error");
        assert!(v["error"].is_string());
    }
    let (code, _) = run(hlm().arg("frobnicate"));
    assert_eq!(code, 2);
}

#[test]
fn representation_and_casimir() {
    let (code, v) = json(&[
        "rep-verify",
        "--dim",
        "8",
        "--L2",
        "1",
        "--M2",
        "-1",
        "--H2",
        "16/9",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
    let (code, v) = json(&[
        "casimir", "--L2", "1", "--M2", "-1", "--H2", "16/9", "--which", "C2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["scalar"], "15/2");
}

#[test]
fn scalar_field_operator() {
    let (code, v) = json(&[
        "field-op", "--dim", "1", "--L2", "inf", "--M2", "inf", "--H2", "4", "--a", "3/2",
        "--hbar", "1/3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["central"], true);
    assert_eq!(v["result"]["scalar"], "1/12");
}

#[test]
fn text_format_flattens_keys() {
    let (code, out) = run(hlm().args(["jacobi", "--family", "lm", "--format", "text"]));
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "result.residuals_nonzero: 0"));
    assert!(out.lines().any(|l| l == "verdict: pass"));
    let (code, out) = run(hlm().args(["classify", "--format", "text"]));
    assert_eq!(code, 2);
    assert!(out.contains("verdict: error"));
}

#[test]
fn config_file_supplies_defaults() {
    let cfg = scratch("defaults.conf");
    std::fs::write(&cfg, "# point\nL2 = 1\nM2 = 1\nH2 = 4\n").unwrap();
    let (code, out) = run(hlm().env("HLM_CONFIG", &cfg).arg("classify"));
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["type"], "o(1,5)");
    // the command line wins
    let (_, out) = run(hlm()
        .env("HLM_CONFIG", &cfg)
        .args(["classify", "--H2", "1/4"]));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["type"], "o(2,4)");

    std::fs::write(&cfg, "L2 = 1\nnonsense = 2\n").unwrap();
    let (code, _) = run(hlm().env("HLM_CONFIG", &cfg).arg("classify"));
    assert_eq!(code, 2);
    let (code, _) = run(hlm()
        .env("HLM_CONFIG", scratch("missing.conf"))
        .arg("classify"));
    assert_eq!(code, 2);
}

#[test]
fn out_flag_writes_files() {
    let report = scratch("report.json");
    let (code, out) = run(hlm().args(["jacobi", "--out", report.to_str().unwrap()]));
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["verdict"], "pass");

    let doc = scratch("canonical.json");
    let (code, out) = run(hlm().args([
        "export",
        "--what",
        "algebra",
        "--family",
        "canonical",
        "--out",
        doc.to_str().unwrap(),
    ]));
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["round_trip"], true);
    let text = std::fs::read_to_string(&doc).unwrap();
    let back = hlm_core::io::import_algebra(&text).unwrap();
    assert_eq!(hlm_core::io::export_algebra(&back), text);
}
