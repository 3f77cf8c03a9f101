use std::process::{Command, Output};

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn irreducible_exit_codes() {
    let o = hecke(&["irreducible", "--type", "B", "-n", "2", "--k", "1", "--gamma", "2,0", "--mu", "++"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("P = {α_{1,2} (value 2)}"));

    let o = hecke(&["irreducible", "--type", "B", "-n", "2", "--k", "1", "--gamma", "1,0", "--mu", "+-"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("verdict: simple"));

    let o = hecke(&[
        "irreducible", "--type", "D", "-n", "2", "--k", "1", "--gamma", "1,1", "--mu", "+-", "--oracle",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("AGREE"));
}

#[test]
fn negative_and_fractional_inputs() {
    let o = hecke(&["irreducible", "-n", "2", "--k", "-1/2", "--gamma", "-1/2,1/2", "--mu", "--", "--oracle"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("AGREE"));
    let o = hecke(&["irreducible", "-n", "2", "--k", "-1/2", "--gamma", "-1/2,1/2", "--mu", "-+", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("AGREE"));
}

#[test]
fn errors() {
    for args in [
        &["irreducible", "-n", "2", "--k", "0", "--gamma", "1,0", "--mu", "++"][..],
        &["irreducible", "-n", "3", "--k", "1", "--gamma", "1,0", "--mu", "++"][..],
        &["irreducible", "-n", "2", "--k", "1", "--gamma", "1,x", "--mu", "++"][..],
        &["irreducible", "-n", "2", "--k", "1", "--gamma", "1,0", "--mu", "+0"][..],
        &["verify", "-n", "2", "--k", "0"][..],
    ] {
        let o = hecke(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
    let o = hecke(&["verify", "-n", "5", "--k", "1"]);
    assert_eq!(o.status.code(), Some(4));
    let o = hecke(&["module", "-n", "6", "--k", "1", "--gamma", "1,2,3,4,5,6", "--mu", "++++++"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn verify_small_ranks() {
    let o = hecke(&["verify", "-n", "2", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("0 failed\n"));
    let o = hecke(&["verify", "-n", "1", "--k", "3/2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn module_dump_matches_schema_and_is_deterministic() {
    let schema: serde_json::Value =
        serde_json::from_str(include_str!("../../../schema/module.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for (ty, n, gamma, mu) in [
        ("B", "1", "3", "-"),
        ("B", "2", "1,0", "++"),
        ("D", "2", "1,1", "+-"),
        ("B", "3", "1/2,0,-2", "+-+"),
    ] {
        let args = ["module", "--type", ty, "-n", n, "--k", "1", "--gamma", gamma, "--mu", mu, "--oracle", "--format", "json"];
        let a = hecke(&args);
        let b = hecke(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
        let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{errors:?}");
        if n == "1" {
            assert!(v["generators"].as_array().unwrap().iter().all(|g| g["matrix"].as_array().unwrap().len() == 1));
        }
    }
    let o = hecke(&["module", "-n", "2", "--k", "1", "--gamma", "1,0", "--mu", "++", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["generators"][0]["matrix"], serde_json::json!([["1", "-2"], ["0", "0"]]));
    assert!(v["oracle"].is_null());
}
