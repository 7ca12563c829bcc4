use std::path::PathBuf;
use std::process::{Command, Output};

fn adeg(args: &[&str], cache: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adeg"))
        .args(args)
        .env("ADEG_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("adeg-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn script(dir: &std::path::Path, text: &str) -> String {
    let p = dir.join("s.adeg");
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let dir = scratch("flag");
    let out = adeg(&["run", "--bogus"], &dir);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage: adeg run"));
    let out = adeg(&["frobnicate"], &dir);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn run_reports_arithmetic_degrees() {
    let dir = scratch("run");
    let s = script(
        &dir,
        "ring S = Q[x, y];\nideal J = x^2, x*y;\ntask adeg J;\n",
    );
    let json = dir.join("out.json");
    let out = adeg(
        &[
            "run",
            "-i",
            &s,
            "--json",
            json.to_str().unwrap(),
            "--order",
            "degrevlex",
            "--parallel",
            "1",
        ],
        &dir,
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(&json).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["results"][0]["adeg"], serde_json::json!({"1": 1, "0": 1}));
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys, ["ring", "tasks", "results", "timings", "provenance"]);
    // Byte-identical on a second run.
    let again = adeg(&["run", "-i", &s], &dir);
    assert_eq!(String::from_utf8_lossy(&again.stdout), text);
}

#[test]
fn parse_errors_carry_positions() {
    let dir = scratch("parse");
    let s = script(&dir, "ring S = Q[x, y];\nideal J = x^2, z;\n");
    let out = adeg(&["run", "-i", &s], &dir);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("line 2, column 16"),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn caps_exit_with_three() {
    let dir = scratch("cap");
    let s = script(
        &dir,
        "ring S = Q[x, y, z];\nideal J = x^2 + y*z, x*y + z^2;\ntask gb J;\n",
    );
    let out = adeg(&["run", "-i", &s, "--max-deg", "2"], &dir);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"][0]["status"], "error");
}

#[test]
fn corpus_writes_json_and_csv() {
    let dir = scratch("corpus");
    let (j, c) = (dir.join("c.json"), dir.join("c.csv"));
    let out = adeg(
        &[
            "corpus",
            "--parallel",
            "2",
            "--json",
            j.to_str().unwrap(),
            "--csv",
            c.to_str().unwrap(),
        ],
        &dir,
    );
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("39 of 39 entries pass"), "{stdout}");
    let csv = std::fs::read_to_string(&c).unwrap();
    assert!(csv.starts_with("entry,task,i,value,status\n"));
    assert!(!csv.contains(",fail\n"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&j).unwrap()).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 39);
}
