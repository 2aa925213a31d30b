use std::process::{Command, Output};

use serde_json::Value;

fn tsscpp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tsscpp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gf_both_methods_match() {
    let o = tsscpp(&["gf", "--weight", "refined", "--n", "3", "--m", "0", "--method", "both"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2 + 3*t + 2*t^2\n2 + 3*t + 2*t^2\nMATCH\n");
}

#[test]
fn gf_mt_needs_k() {
    let o = tsscpp(&["gf", "--weight", "mt", "--n", "3", "--k", "1", "--method", "pfaffian", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pfaffian"], "2 + 2*t + t^2");
    assert!(!tsscpp(&["gf", "--weight", "mt", "--n", "3"]).status.success());
}

#[test]
fn enumerate_small_class() {
    let o = tsscpp(&["enumerate", "--class", "cspp", "--n", "1", "--m", "2", "--format", "json"]);
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let objects: Vec<&Value> = lines.iter().filter(|v| v.get("rows").is_some()).collect();
    assert_eq!(objects.len(), 4);
    assert_eq!(objects[3]["rows"], serde_json::json!([[2], [1]]));
    assert!(lines.last().unwrap().get("statistics").is_some());
}

#[test]
fn enumerate_csv_has_statistics_columns() {
    let o = tsscpp(&["enumerate", "--class", "cspp", "--n", "3", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "object,Ubar_1,Ubar_2,Ubar_3,V^R,V^C,profile,size");
    assert_eq!(lines.count(), 7);
}

#[test]
fn pfaffian_of_two_by_two() {
    let o = tsscpp(&["pfaffian", r#"[[0,"5"],["-5",0]]"#]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "5\n");
    assert!(!tsscpp(&["pfaffian", r#"[[0,"5"],["5",0]]"#]).status.success());
}

#[test]
fn matrix_json_feeds_pfaffian() {
    let o = tsscpp(&["matrix", "--kind", "block", "--weight", "refined", "--n", "3", "--format", "json"]);
    assert!(o.status.success());
    let pf = tsscpp(&["pfaffian", stdout(&o).trim()]);
    assert_eq!(stdout(&pf), "2 + 3*t + 2*t^2\n");
}

#[test]
fn constterm_compares_with_pfaffian() {
    let o = tsscpp(&["constterm", "--weight", "rows-even", "--n", "3", "--compare", "pfaffian"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1 + t + t^2\n1 + t + t^2\nMATCH\n");
}

#[test]
fn tables_are_csv() {
    let o = tsscpp(&["tables", "--family", "asm", "--max", "3"]);
    assert_eq!(stdout(&o), "n,r,value\n1,1,1\n2,1,1\n2,2,1\n3,1,2\n3,2,3\n3,3,2\n");
}

#[test]
fn verify_selected_conjecture() {
    let o = tsscpp(&["verify", "conjectures", "--id", "conj-mt", "--n", "3", "--k", "1", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 1);
    assert_eq!(cases[0]["lhs"], "2 + 2*t + t^2");
    assert_eq!(cases[0]["match"], true);
}

#[test]
fn verify_exit_code_follows_theorems_only() {
    // conjecture mismatches (the signed count offset) do not fail the run
    let o = tsscpp(&["verify", "conjectures", "--id", "signed-count-vs-vs", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["cases"].as_array().unwrap().iter().any(|c| c["match"] == false));
    assert!(tsscpp(&["verify", "genfun", "--max-nm", "3"]).status.success());
}

#[test]
fn verify_output_is_deterministic() {
    let a = stdout(&tsscpp(&["verify", "bijections", "--max-nm", "3", "--format", "json"]));
    let b = stdout(&tsscpp(&["verify", "bijections", "--max-nm", "3", "--format", "json"]));
    assert_eq!(a, b);
}
