use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_plastic-kit");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("PLASTIC_KIT_CONFIG").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("plastic-kit-{}-{name}", std::process::id()))
}

#[test]
fn term_examples() {
    let o = run(&["term", "--seq", "P", "--n", "-17"]);
    assert_eq!((stdout(&o).trim(), o.status.code()), ("0", Some(0)));
    let o = run(&["term", "--seq", "Q", "--n", "12"]);
    assert_eq!(stdout(&o).trim(), "29");
    let o = run(&["term", "--seq", "P", "--n", "200"]);
    assert_eq!(stdout(&o).trim(), plastic_core::sequences::padovan(200).to_string());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "--id", "no-such-id"]).status.code(), Some(2));
    assert_eq!(run(&["term", "--seq", "R", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--id", "neg-index-P", "--grid", "n=5..1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--id", "neg-index-P", "--grid", "m=1"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "--seq", "P", "--p", "0", "--q", "0"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn verify_json_is_identical_across_worker_counts() {
    let mut texts = Vec::new();
    for jobs in ["1", "4"] {
        let o = run(&["verify", "--id", "waring-set*", "--grid", "n=1..5", "--jobs", jobs, "--no-timestamp", "--json", "-"]);
        assert_eq!(o.status.code(), Some(0));
        texts.push(stdout(&o));
    }
    assert_eq!(texts[0], texts[1]);
    let v: serde_json::Value = serde_json::from_str(&texts[0]).unwrap();
    for key in ["version", "results", "errata_findings", "summary"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert!(v.get("generated_at").is_none());
}

#[test]
fn timestamp_present_by_default() {
    let path = temp("ts.json");
    let o = run(&["verify", "--id", "neg-index-P", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(v["generated_at"].as_u64().unwrap() > 0);
}

#[test]
fn skipped_points_are_reported() {
    let o = run(&["verify", "--id", "ap-sum-P", "--grid", "p=0..0;q=0..0;n=1..1", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["results"][0]["skipped"], 1);
    assert_eq!(v["summary"]["points_tested"], 1);
}

#[test]
fn config_file_and_environment() {
    let path = temp("cfg.json");
    std::fs::write(&path, r#"{"grids": {"neg-index-*": "n=0..2"}, "jobs": 2}"#).unwrap();
    let o = Command::new(BIN)
        .args(["verify", "--id", "neg-index-*", "--json", "-", "--no-timestamp"])
        .env("PLASTIC_KIT_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["points_tested"], 6);
    std::fs::write(&path, r#"{"point_cap": 5}"#).unwrap();
    let o = run(&["verify", "--id", "neg-index-P", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn catalog_listing() {
    let o = run(&["catalog", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let list = v.as_array().unwrap();
    assert!(list.len() >= 40);
    assert!(list.iter().any(|e| e["id"] == "neg-index-P"));
    assert!(list.iter().all(|e| !e["anchor"].as_str().unwrap().is_empty()));
    let text = stdout(&run(&["catalog"]));
    assert!(text.lines().any(|l| l.starts_with("double-binom-waring-6") && l.ends_with("[errata-watch]")));
}

#[test]
fn expand_and_roots() {
    let o = run(&["expand", "--kind", "ogf", "--seq", "P", "--p", "2", "--q", "1", "--order", "5"]);
    assert!(stdout(&o).contains("coefficients: 1 2 3 5 9 16"), "{}", stdout(&o));
    let o = run(&["expand", "--seq", "Q", "--p", "1", "--q", "0", "--order", "9", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["3", "0", "2", "3", "2", "5", "5", "7", "10", "12"]));
    let o = run(&["roots", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["alpha"].as_f64().unwrap() - 1.324_717_957_244_746).abs() < 1e-12);
    assert!((v["vandermonde_modulus"].as_f64().unwrap() - 23f64.sqrt()).abs() < 1e-9);
    assert!(v["beta"]["im"].as_f64().unwrap() > 0.0);
}
