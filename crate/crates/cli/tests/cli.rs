use std::process::{Command, Output};

use a1deg_core::{Field, FieldElement};
use serde_json::Value;

fn a1deg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_a1deg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = a1deg(&all);
    let doc = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr));
    });
    (doc, out.status.code().unwrap())
}

fn strings(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect()
}

/// Every string leaf that should be a field element.
fn collect_scalars<'a>(v: &'a Value, key: &str, out: &mut Vec<&'a str>) {
    const SCALAR_KEYS: [&str; 9] = [
        "unit", "discriminant", "positive", "negative", "root", "sigma", "newton_matrix", "bezoutian", "duplicant",
    ];
    match v {
        Value::String(s) if SCALAR_KEYS.contains(&key) => out.push(s),
        Value::Array(xs) => xs.iter().for_each(|x| collect_scalars(x, key, out)),
        Value::Object(m) => m.iter().for_each(|(k, x)| collect_scalars(x, k, out)),
        _ => {}
    }
}

#[test]
fn degree_of_x_plus_inverse() {
    let (doc, code) = json(&["degree", "(x^2-1)/x"]);
    assert_eq!(code, 0);
    let class = &doc["result"]["class"];
    assert_eq!(strings(&class["positive"]), ["1", "1"]);
    assert!(class["negative"].as_array().unwrap().is_empty());
    assert_eq!(class["unit"], "1");
}

#[test]
fn duplicant_example() {
    let (doc, code) = json(&["duplicant", "--field", "Q", "--roots", "2:1,0:2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["duplicant"], "16");
    assert_eq!(doc["result"]["closed_form_agrees"], true);
}

#[test]
fn scalars_round_trip() {
    let cases: [(&str, &[&str]); 4] = [
        ("Q", &["verify-ltg", "(x-1/2)^2 (x+3) / (2x^2 + 5)"]),
        ("Q", &["local", "(x-1)^3 (x+1/3) / (x-7)"]),
        ("Fp:11", &["verify-ltg", "(x-3)^2 (x-5) / (x+1)"]),
        ("Fp:7", &["duplicant", "--roots", "1:2,3:1", "--lc", "5"]),
    ];
    for (field_text, args) in cases {
        let field: Field = field_text.parse().unwrap();
        let mut all = vec!["--field", field_text];
        all.extend_from_slice(args);
        let (doc, code) = json(&all);
        assert_eq!(code, 0, "{args:?}");
        let mut found = Vec::new();
        collect_scalars(&doc, "", &mut found);
        assert!(!found.is_empty());
        for s in found {
            let x = FieldElement::parse(field, s).unwrap();
            assert_eq!(x.to_string(), s);
        }
    }
}

#[test]
fn same_seed_same_bytes() {
    let args = ["--json", "--seed", "41", "verify-ltg", "--random", "20"];
    let a = a1deg(&args);
    let b = a1deg(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = a1deg(&["--json", "--seed", "42", "verify-ltg", "--random", "20"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn random_ltg_suite_passes() {
    let out = a1deg(&["verify-ltg", "--random", "100", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("100/100 pass"));
}

#[test]
fn out_file_matches_json_stdout() {
    let dir = std::env::temp_dir().join(format!("a1deg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("doc.json");
    let path_s = path.to_str().unwrap();
    let with_json = a1deg(&["--json", "--out", path_s, "nsum", "x", "2x^2/(x+1)"]);
    assert!(with_json.status.success());
    assert_eq!(std::fs::read(&path).unwrap(), with_json.stdout);
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn timing_is_opt_in() {
    let (doc, _) = json(&["degree", "x"]);
    assert!(doc.get("timing_us").is_none());
    let (doc, _) = json(&["--timing", "degree", "x"]);
    assert!(doc["timing_us"].is_u64());
}

#[test]
fn dsum_entries() {
    let (doc, code) = json(&["dsum", "--entry", "0=1,2", "--entry", "1=~3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["class"]["unit"], "2/3");
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["degree", "x^-1"][..],
        &["degree", "x^2/(x"],
        &["degree", "(x-1)/(x-1)"],
        &["degree", "x/(x+1)"],
        &["local", "(x^2-2)(x-1)", "--at", "x^2-2"],
        &["--field", "Fp:9", "degree", "x"],
        &["duplicant", "--roots", "1:1,1:2"],
    ] {
        let out = a1deg(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn selftest_reports_every_shape() {
    let (doc, code) = json(&["selftest", "duplicant"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["shapes"].as_array().unwrap().len(), 7);
    assert_eq!(doc["result"]["all_agree"], true);
}
