use std::path::Path;
use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

use padic_eisen_cli::check::Counterexample;
use padic_eisen_cli::output::{Breaks, Classification, Equivalence, Table};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_padic-eisen"))
        .args(args)
        .env_remove("PADIC_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Run, expect exit 0, validate against the named schema, return the value.
fn json_ok(args: &[&str], schema: &str) -> Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    validate(schema, &v);
    v
}

fn validate(schema: &str, v: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(schema);
    let s: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let compiled = JSONSchema::compile(&s).unwrap();
    if let Err(errors) = compiled.validate(v) {
        let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
        panic!("{schema}: {msgs:?} for {v}");
    };
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn classify_examples() {
    let v = json_ok(&["classify", "-p", "3", "x^3+6"], "classify.schema.json");
    assert_eq!(v["type"], "<0>");
    assert_eq!(v["family"], "F3");
    assert_eq!(v["a"], 2);
    assert_eq!(v["canonical"], "x^3+21");
    assert_eq!(v["d_f"], "5/3");
    assert_eq!(v["u_f"], "5/2");
    assert!(v.get("lambda").is_none());
    serde_json::from_value::<Classification>(v).unwrap();

    let v = json_ok(&["classify", "-p", "3", "x^3+3*x+3"], "classify.schema.json");
    assert_eq!(v["type"], "<1>");
    assert_eq!(v["family"], "F1");
    assert_eq!(v["lambda"], 1);
    assert_eq!(v["a"], 1);
    assert_eq!(v["canonical"], "x^3+3*x+3");
    assert_eq!(v["galois"]["shape"], "C_3 : C_2");

    let v = json_ok(&["classify", "-p", "3", "[3, 0, 6, 1]"], "classify.schema.json");
    assert_eq!(v["family"], "F2");
    assert_eq!(v["canonical"], "x^3-3*x^2+3");
    assert_eq!(v["galois"]["d_2"], 1);
}

#[test]
fn classify_rejections() {
    for bad in ["x^3+*3", "", "x^3+4", "2*x^3+3", "x^3 + 3y", "[3, 0.5, 1]", "x^3+9"] {
        let o = run(&["classify", "-p", "3", bad]);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = run(&["classify", "-p", "3", "x^3+*3"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 4"));
    assert_eq!(exit_code(&["classify", "-p", "4", "x^2+2"]), 2);
    assert_eq!(exit_code(&["classify", "-p", "2", "x^2+2"]), 3);
    assert_eq!(exit_code(&["classify", "-p", "3", "x^4+3"]), 3);
}

#[test]
fn equiv_examples() {
    let v = json_ok(&["equiv", "-p", "3", "x^3+6", "x^3+21"], "equiv.schema.json");
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["method"], "canonical");

    let v = json_ok(&["equiv", "-p", "3", "x^3+3", "x^3+30", "--method", "prop16"], "equiv.schema.json");
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["certificate"]["distance"], "3");
    assert_eq!(v["certificate"]["u_f"], "5/2");

    let v = json_ok(&["equiv", "-p", "3", "x^3+3", "x^3+6", "--method", "krasner"], "equiv.schema.json");
    assert_eq!(v["verdict"], "no_certificate");
    assert_eq!(v["equivalent"], Value::Null);
    serde_json::from_value::<Equivalence>(v).unwrap();

    let v = json_ok(&["equiv", "-p", "3", "x^3+9*x+3", "x^3+12", "--method", "oracle"], "equiv.schema.json");
    assert_eq!(v["equivalent"], true);
    let v = json_ok(&["equiv", "-p", "3", "x^3+3", "x^3+6", "--method", "oracle"], "equiv.schema.json");
    assert_eq!(v["verdict"], "inequivalent");

    // outside degree p, auto falls back to certificate then oracle
    let v = json_ok(&["equiv", "-p", "3", "x^4+3", "x^4+6"], "equiv.schema.json");
    assert_eq!(v["method"], "oracle");
    let v = json_ok(&["equiv", "-p", "3", "x^4+3", "x^4+30"], "equiv.schema.json");
    assert_eq!(v["method"], "krasner");
    assert_eq!(v["equivalent"], true);

    assert_eq!(exit_code(&["equiv", "-p", "3", "x^4+3", "x^4+6", "--method", "canonical"]), 3);
    assert_eq!(exit_code(&["equiv", "-p", "3", "x^4+3", "x^3+3"]), 2);
    assert_eq!(exit_code(&["equiv", "-p", "3", "x^3+3", "x^3+6", "--method", "guess"]), 2);
}

#[test]
fn breaks_examples() {
    let v = json_ok(&["breaks", "-p", "3", "x^3+3"], "breaks.schema.json");
    let expected: Value = serde_json::from_str(
        r#"{"lower":[["3/2",3]],"upper":["3/2"],"convention":"classical","u_shifted":"5/2","i_shifted":"5/6","d_f":"5/3"}"#,
    )
    .unwrap();
    assert_eq!(v, expected);
    serde_json::from_value::<Breaks>(v).unwrap();

    let v = json_ok(&["breaks", "-p", "3", "x^3+3*x+3"], "breaks.schema.json");
    assert_eq!(v["u_shifted"], "3/2");

    let v = json_ok(&["breaks", "-p", "2", "x^4+2"], "breaks.schema.json");
    assert_eq!(v["d_f"], "11/4");
    assert_eq!(exit_code(&["breaks", "-p", "2", "x^4+3"]), 2);
}

#[test]
fn table_listings() {
    let o = run(&["table", "-p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().any(|r| r.starts_with("F2\t-\t0\tx^3-3*x^2+3\t4/3\t2\t")));

    let v = json_ok(&["table", "-p", "5", "--json"], "table.schema.json");
    assert_eq!(v["entries"].as_array().unwrap().len(), 25);
    serde_json::from_value::<Table>(v).unwrap();

    let v = json_ok(&["table", "-p", "3", "--json"], "table.schema.json");
    let f2 = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["family"] == "F2" && e["a"] == 0)
        .unwrap();
    assert_eq!(f2["poly"], "x^3-3*x^2+3");
    assert_eq!(f2["u_f"], "2");

    assert_eq!(exit_code(&["table", "-p", "2"]), 3);
    assert_eq!(exit_code(&["table", "-p", "3", "--json", "--tsv"]), 2);
}

#[test]
fn check_command() {
    let args = ["check", "-p", "3", "--samples", "200", "--seed", "7"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&run(&args)));

    let o = run(&["check", "-p", "3", "--samples", "200", "--seed", "7", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let last: Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    validate("counterexample.schema.json", &last);
    let cx: Counterexample = serde_json::from_value(last).unwrap();
    assert_eq!(cx.suite, "classifier-vs-oracle");
}

#[test]
fn precision_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_padic-eisen"))
        .args(["check", "-p", "3", "--samples", "5"])
        .env("PADIC_PRECISION", "10")
        .output()
        .unwrap();
    assert!(stdout(&o).starts_with("check p=3 degree=3 samples=5 seed=0 precision=10"));
    let o = Command::new(env!("CARGO_BIN_EXE_padic-eisen"))
        .args(["equiv", "-p", "3", "x^3+3", "x^3+6", "--method", "oracle"])
        .env("PADIC_PRECISION", "nope")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
