use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bicomm"))
}

fn shipped(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../presentations").join(name)
}

fn temp_pres(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".pres").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str], path: &Path) -> Output {
    let mut cmd = bin();
    cmd.arg(args[0]).arg(path).args(&args[1..]);
    cmd.output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn gk_of_worked_example() {
    let v = json(&run(&["gk", "--json"], &shipped("example_sec2.pres")));
    assert_eq!(v["c_s"], 3);
    assert_eq!(v["gk"], 4);
}

#[test]
fn gk_of_free_bicommutative() {
    let v = json(&run(&["gk", "--json"], &shipped("free_bc_r3.pres")));
    assert_eq!(v["n_s"], 1);
    assert_eq!(v["gk"], 6);
    assert_eq!(v["input_was_gsb"], true);
}

#[test]
fn left_commutativity_holds_in_free_algebra() {
    let out = bin()
        .args(["eq", shipped("free_bc_r3.pres").to_str().unwrap(), "( x1 ( x2 x3 ) )", "( x2 ( x1 x3 ) )", "--json"])
        .output()
        .unwrap();
    assert_eq!(json(&out)["equal"], true);
}

#[test]
fn json_keys_are_sorted_and_output_is_stable() {
    let a = run(&["gk", "--json"], &shipped("diagonal.pres"));
    let b = run(&["gk", "--json"], &shipped("diagonal.pres"));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let text = String::from_utf8(a.stdout).unwrap();
    let positions: Vec<usize> = keys.iter().map(|k| text.find(&format!("\"{k}\":")).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn gsb_output_is_a_fixed_point() {
    let first = run(&["gsb"], &shipped("diagonal.pres"));
    assert!(first.status.success());
    let again = temp_pres(std::str::from_utf8(&first.stdout).unwrap());
    let second = run(&["gsb"], again.path());
    assert_eq!(first.stdout, second.stdout);
    let v = json(&run(&["gsb", "--json"], again.path()));
    assert_eq!(v["input_was_gsb"], true);
}

#[test]
fn commutative_gsb_round_trips() {
    let first = run(&["gsb"], &shipped("buchberger.pres"));
    let text = String::from_utf8(first.stdout).unwrap();
    assert_eq!(text.matches("rel ").count(), 3);
    let second = run(&["gsb"], temp_pres(&text).path());
    assert_eq!(text.as_bytes(), &second.stdout[..]);
}

#[test]
fn reduce_and_eq_use_the_completed_basis() {
    let p = shipped("diagonal.pres");
    let v = json(&run(&["reduce", "(x1 x1) - (x2 x2)", "--json"], &p));
    assert_eq!(v["normal_form"], "0");
    let v = json(&run(&["eq", "(x1 x1)", "(x1 x2)", "--json"], &p));
    assert_eq!(v["equal"], true);
}

#[test]
fn growth_reports_table_and_degree() {
    let v = json(&run(&["growth", "--n", "12", "--json", "--oracle"], &shipped("drop_of_two.pres")));
    assert_eq!(v["counts"].as_array().unwrap().len(), 13);
    assert_eq!(v["counts"][1]["count"], 2);
    assert_eq!(v["fitted_degree"], 2);
    assert_eq!(v["oracle_agrees"], true);
}

#[test]
fn irr_lists_up_to_maxlen() {
    let v = json(&run(&["irr", "--maxlen", "3", "--json", "--oracle"], &shipped("drop_of_two.pres")));
    assert_eq!(v["monomials"], serde_json::json!(["x2", "x1", "[x2; x2]", "[x2; x2^2]", "[x2^2; x2]"]));
    assert_eq!(v["oracle_agrees"], true);
}

#[test]
fn oracle_agrees_on_shipped_presentations() {
    for name in ["example_sec2.pres", "free_bc_r3.pres", "drop_of_two.pres", "buchberger.pres", "diagonal.pres", "bc_family.pres"] {
        let out = run(&["gk", "--oracle", "--json"], &shipped(name));
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert_eq!(json(&out)["oracle_agrees"], true, "{name}");
    }
}

#[test]
fn parse_errors_exit_two() {
    let f = temp_pres("algebra bicommutative\nvars x1 x2 x3\nrel ( x1 x2 x3 )\n");
    let out = run(&["gk"], f.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3, column 13"));

    let f = temp_pres("algebra commutative\nvars x1\norder nf-A\n");
    assert_eq!(run(&["gk"], f.path()).status.code(), Some(2));

    let out = run(&["reduce", "x9"], &shipped("diagonal.pres"));
    assert_eq!(out.status.code(), Some(2));

    assert_eq!(run(&["gk"], Path::new("/nonexistent.pres")).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = run(&["gk", "--max-steps", "1"], &shipped("diagonal.pres"));
    assert_eq!(out.status.code(), Some(3));
}
