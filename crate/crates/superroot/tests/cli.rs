use std::io::Write;
use std::process::Command;

use serde_json::{json, Value};
use superroot::{run_with_env, Outcome};

fn call(args: &[&str]) -> Outcome {
    call_env(args, None)
}

fn call_env(args: &[&str], radius: Option<&str>) -> Outcome {
    let argv = std::iter::once("superroot").chain(args.iter().copied());
    run_with_env(argv, |k| (k == superroot::cli::RADIUS_ENV).then(|| radius.map(String::from)).flatten())
}

fn json_of(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = call(&full);
    assert_eq!(out.code, 0, "{args:?}: {}{}", out.stdout, out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn write_temp(v: &Value) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(v.to_string().as_bytes()).unwrap();
    f
}

#[test]
fn periplectic_is_not_frobenius_unimodular() {
    let v = json_of(&["unimodular", "--family", "p", "--n", "2", "--p", "3", "--r", "1"]);
    assert_eq!(v["verdict"], json!(false));
    assert_eq!(v["odd_root_sum"], json!([2, 2]));
}

#[test]
fn queer_dims() {
    let v = json_of(&["dims", "--family", "q", "--n", "2", "--p", "3", "--r", "1"]);
    assert_eq!(v["dim_O_Gr"], json!(1296));
    assert_eq!(v["pbw_count"], json!(1296));
}

#[test]
fn gl11_decomposition() {
    let v = json_of(&["decompose", "--family", "gl", "--m", "1", "--n", "1", "--p", "3", "--weight", "4,-2"]);
    assert_eq!(v["digits"], json!([[1, 1], [1, -1]]));
}

#[test]
fn large_dimensions_are_strings() {
    let v = json_of(&["dims", "--family", "gl", "--m", "4", "--n", "4", "--p", "7", "--r", "3"]);
    // 7^{3·24} · 2^{32} exceeds 2^53.
    assert!(v["dim_O_Gr"].is_string());
    assert_eq!(v["dim_O_Gr"], v["pbw_count"]);
}

#[test]
fn radius_from_environment() {
    let args = ["decompose", "--family", "gl", "--m", "2", "--n", "1", "--p", "3", "--weight", "7,2,0", "--json"];
    let out = call_env(&args, Some("0"));
    assert_eq!(out.code, 1);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], json!("decomposition_failed"));
    assert_eq!(call_env(&args, Some("2")).code, 0);
    assert_eq!(call_env(&args, Some("two")).code, 2);
    let mut explicit = args.to_vec();
    explicit.extend(["--radius", "2"]);
    assert_eq!(call_env(&explicit, Some("0")).code, 0);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["describe", "--family", "gl", "--m", "1", "--n", "1"]).code, 0);
    // usage errors
    assert_eq!(call(&["frobnicate"]).code, 2);
    assert_eq!(call(&["dims", "--family", "q", "--n", "2"]).code, 2);
    assert_eq!(call(&["dims", "--family", "gl", "--n", "2", "--p", "3"]).code, 2);
    assert_eq!(call(&["flatcheck", "--family", "q", "--n", "2", "--p", "3", "--weight", "a,b"]).code, 2);
    // domain errors
    let out = call(&["delta", "--family", "gl", "--m", "1", "--n", "1", "--p", "3", "--order", "1,1", "--json"]);
    assert_eq!(out.code, 1);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], json!("invalid_order"));
    assert_eq!(call(&["dims", "--family", "q", "--n", "2", "--p", "4"]).code, 1);
    assert_eq!(call(&["flatcheck", "--family", "p", "--n", "2", "--p", "3", "--weight", "1,0"]).code, 1);
    let out = call(&["decompose", "--family", "q", "--n", "2", "--p", "3", "--weight", "1,1"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("precondition"), "{}", out.stderr);
    assert_eq!(call(&["describe", "--family", "file", "--file", "/nonexistent/datum.json"]).code, 1);
}

#[test]
fn bad_json_is_a_domain_error() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(b"{\"rank\": 2,").unwrap();
    let out = call(&["describe", "--family", "file", "--file", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(out.code, 1);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], json!("bad_json"));

    let bad = json!({"rank": 1, "label": "x", "even_roots": [], "odd_roots": [{"root": [0], "mult": 1}], "h_odd_dim": 0});
    let f = write_temp(&bad);
    let out = call(&["describe", "--family", "file", "--file", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(out.code, 1);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], json!("invalid_datum"));
    assert_eq!(v["error"]["path"], json!("odd_roots[0].root"));
}

#[test]
fn emitted_datum_reingests() {
    for family in [["--family", "gl", "--m", "2", "--n", "2"], ["--family", "q", "--n", "3", "--m", "1"]] {
        let mut args = vec!["describe"];
        args.extend(family);
        let first = json_of(&args);
        let f = write_temp(&first);
        let second = json_of(&["describe", "--family", "file", "--file", f.path().to_str().unwrap()]);
        assert_eq!(first, second);
        let f = write_temp(&first["datum"]);
        let third = json_of(&["describe", "--family", "file", "--file", f.path().to_str().unwrap()]);
        assert_eq!(first, third);
    }
    let p3 = json_of(&["describe", "--family", "p", "--n", "3"]);
    let f = write_temp(&p3["datum"]);
    let args = ["unimodular", "--family", "file", "--file", f.path().to_str().unwrap(), "--p", "5"];
    assert_eq!(json_of(&args)["odd_root_sum"], json!([2, 2, 2]));
}

fn reversed_keys(v: &Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut out = serde_json::Map::new();
            for (k, x) in m.iter().rev() {
                out.insert(k.clone(), reversed_keys(x));
            }
            Value::Object(out)
        }
        Value::Array(a) => Value::Array(a.iter().map(reversed_keys).collect()),
        other => other.clone(),
    }
}

#[test]
fn output_is_stable_under_key_reordering() {
    let datum = json_of(&["describe", "--family", "gl", "--m", "2", "--n", "1"])["datum"].clone();
    let a = write_temp(&datum);
    let b = write_temp(&reversed_keys(&datum));
    assert_ne!(std::fs::read(a.path()).unwrap(), std::fs::read(b.path()).unwrap());
    for verb in [
        vec!["describe"],
        vec!["unimodular", "--p", "3", "--r", "2"],
        vec!["delta", "--p", "5", "--r", "1"],
        vec!["restricted", "--weight", "3,1,-4", "--p", "3"],
        vec!["admissible", "--semantics", "strict"],
    ] {
        let run = |path: &std::path::Path| {
            let mut args = verb.clone();
            args.extend(["--family", "file", "--file", path.to_str().unwrap(), "--json"]);
            let out = call(&args);
            assert_eq!(out.code, 0, "{verb:?}: {}", out.stdout);
            out.stdout
        };
        assert_eq!(run(a.path()), run(b.path()), "{verb:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["decompose", "--family", "q", "--n", "3", "--p", "5", "--weight", "40,12,-7"];
    let first = call(&args);
    assert_eq!(first.code, 0, "{}", first.stderr);
    for _ in 0..3 {
        assert_eq!(call(&args), first);
    }
}

#[test]
fn table_output_is_aligned() {
    let out = call(&["dims", "--family", "q", "--n", "2", "--p", "3"]);
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "dim_O_Gr   1296");
    assert!(lines.iter().all(|l| l.as_bytes()[11] != b' '));
}

#[test]
fn character_verbs() {
    let a = write_temp(&json!({"terms": [{"weight": [1, 0], "mult": 1}, {"weight": [0, 1], "mult": 1}]}));
    let b = write_temp(&json!({"terms": [{"weight": [0, 0], "mult": 2}]}));
    let (pa, pb) = (a.path().to_str().unwrap(), b.path().to_str().unwrap());
    let sum = json_of(&["char", "add", pa, pb]);
    assert_eq!(
        sum,
        json!({"terms": [
            {"weight": [0, 0], "mult": 2},
            {"weight": [0, 1], "mult": 1},
            {"weight": [1, 0], "mult": 1}
        ]})
    );
    let tw = json_of(&["char", "twist", pa, "--p", "3", "--r", "2"]);
    assert_eq!(tw["terms"][1]["weight"], json!([9, 0]));
    let st = json_of(&["char", "steinberg", "--p", "3", pa, pa]);
    assert_eq!(json_of(&["char", "dim", write_temp(&st).path().to_str().unwrap()])["dim"], json!(4));
    let top = json_of(&["char", "max", pa, "--order", "2,1"]);
    assert_eq!(top["weight"], json!([1, 0]));
    assert_eq!(json_of(&["char", "max", pa, "--order", "1,1"])["weight"], Value::Null);
}

#[test]
fn commutator_and_flatness_verbs() {
    let v = json_of(&["verify-commutator", "--max-m", "3", "--max-n", "3", "--degree", "6", "--p", "5"]);
    assert_eq!(v["success"], json!(true));
    let v = json_of(&["flatcheck", "--family", "q", "--n", "2", "--p", "3", "--weight", "1,-2"]);
    assert_eq!(v["flat"], json!(true));
    let v = json_of(&["flatcheck", "--family", "q", "--n", "2", "--p", "3", "--weight", "1,1"]);
    assert_eq!(v["flat"], json!(false));
}

#[test]
fn admissible_verb_reports_failures() {
    let v = json_of(&["admissible", "--family", "gl", "--m", "2", "--n", "1"]);
    assert_eq!(v["ok"], json!(true));
    let v = json_of(&["admissible", "--family", "gl", "--m", "2", "--n", "1", "--psi-odd", "1,0,-1"]);
    assert_eq!(v["ok"], json!(false));
    let conditions: Vec<&Value> = v["failures"].as_array().unwrap().iter().map(|f| &f["condition"]).collect();
    assert_eq!(conditions, [&json!("generation"), &json!("separation")]);
    assert_eq!(v["failures"][1]["roots"], json!([[1, -1, 0], [1, 0, -1]]));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_superroot");
    let ok = Command::new(bin).args(["unimodular", "--family", "gl", "--m", "1", "--n", "1", "--json"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["verdict"], json!(true));
    let usage = Command::new(bin).args(["dims"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let domain = Command::new(bin).args(["dims", "--family", "q", "--n", "2", "--p", "9"]).output().unwrap();
    assert_eq!(domain.status.code(), Some(1));
    let radius = Command::new(bin)
        .env("SUPERROOT_SEARCH_RADIUS", "0")
        .args(["decompose", "--family", "gl", "--m", "2", "--n", "1", "--p", "3", "--weight", "7,2,0"])
        .output()
        .unwrap();
    assert_eq!(radius.status.code(), Some(1));
}
