use std::collections::BTreeMap;
use std::process::{Command, Output};
use weierstrass_core::semigroup::NumericalSemigroup;

const CURVE: [&str; 4] = ["--field", "GF(2)", "--curve", "Y^8+Y^2+X^3"];

fn basis_file() -> String {
    format!("{}/tests/data/worked_example_basis.txt", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weierstrass")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Key-value section of a CSV report.
fn fields(csv: &str) -> BTreeMap<String, String> {
    let mut reader = csv::ReaderBuilder::new().flexible(true).from_reader(csv.split("\n\n").next().unwrap().as_bytes());
    reader.records().map(|r| r.unwrap()).map(|r| (r[0].to_string(), r[1].to_string())).collect()
}

/// The section of a CSV report whose header starts with `first`.
fn table(csv: &str, first: &str) -> Vec<Vec<String>> {
    let section = csv.split("\n\n").find(|s| s.starts_with(first)).unwrap();
    let mut reader = csv::Reader::from_reader(section.as_bytes());
    reader.records().map(|r| r.unwrap().iter().map(String::from).collect()).collect()
}

fn with_basis(cmd: &[&str], extra: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = ["--format", "csv"].iter().chain(cmd).chain(&CURVE).map(|s| s.to_string()).collect();
    v.push("--integral-basis".into());
    v.push(basis_file());
    v.extend(extra.iter().map(|s| s.to_string()));
    v
}

fn refs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

#[test]
fn curve_analyze_worked_example() {
    let mut args = vec!["--format", "csv", "curve", "analyze"];
    args.extend(CURVE);
    let f = fields(&stdout(&args));
    assert_eq!(f["substitution"], "X <- X + Y^3");
    assert_eq!(f["h"], "2");
    assert_eq!(f["delta"], "9,3,8");
    assert_eq!(f["S_P"], "<9,3,8>");
    assert_eq!(f["one branch"], "yes");
}

#[test]
fn hypothesis_violation_exits_with_two() {
    let out = run(&["curve", "analyze", "--field", "GF(2)", "--curve", "Y^8+Y+X^10+X^3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("characteristic hypothesis"));
}

#[test]
fn input_errors_exit_with_one() {
    assert_eq!(run(&["curve", "analyze", "--field", "GF(2)", "--curve", "Y^^2"]).status.code(), Some(1));
    assert_eq!(run(&["curve", "analyze", "--field", "GF(6)", "--curve", "Y"]).status.code(), Some(1));
    assert_eq!(run(&["semigroup", "stats", "--gens", "3,5", "--bogus"]).status.code(), Some(1));
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
    let missing = run(&["weierstrass", "--field", "GF(2)", "--curve", "Y^8+Y^2+X^3", "--integral-basis", "/nonexistent"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(run(&["--help"]).status.success());
}

#[test]
fn fengrao_row_matches_library() {
    let out = stdout(&["--format", "csv", "semigroup", "fengrao", "--gens", "6,10,15", "--m", "30"]);
    let rows = table(&out, "m,");
    let s = NumericalSemigroup::from_generators(&[6, 10, 15]).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][0], "30");
    assert_eq!(rows[0][1], s.nu(30).unwrap().to_string());
    assert_eq!(rows[0][2], s.feng_rao(30).unwrap().to_string());
    assert_eq!(rows[0][6], "yes");
}

#[test]
fn semigroup_actions_match_library() {
    let s = NumericalSemigroup::from_generators(&[8, 10, 12, 13]).unwrap();
    let q0 = fields(&stdout(&["--format", "csv", "semigroup", "q0", "--gens", "8,10,12,13"]));
    let report = s.q0_m0().unwrap();
    assert_eq!(q0["q0"], report.q0.to_string());
    assert_eq!(q0["m0"], report.m0.to_string());
    assert_eq!(q0["conductor"], "28");
    let stats = fields(&stdout(&["--format", "csv", "semigroup", "stats", "--gens", "8,10,12,13"]));
    assert_eq!(stats["genus"], s.genus().to_string());
    assert_eq!(stats["symmetric"], "yes");
    let apery = stdout(&["--format", "csv", "semigroup", "apery", "--gens", "9,3,8", "--pivot", "9"]);
    let values: Vec<String> = table(&apery, "i,").into_iter().map(|r| r[1].clone()).collect();
    assert_eq!(values, ["0", "19", "11", "3", "22", "14", "6", "16", "8"]);
    let out = run(&["semigroup", "q0", "--gens", "3,5,7"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["semigroup", "nu", "--gens", "3,5", "--m", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn weierstrass_pipeline() {
    let out = stdout(&refs(&with_basis(&["weierstrass"], &[])));
    let f = fields(&out);
    assert_eq!(f["added values"], "13,7,10,4");
    assert_eq!(f["Gamma_P gaps"], "1,2,5");
    assert_eq!(f["genus"], "3");
    let plain = fields(&stdout(&refs(&with_basis(&["weierstrass"], &["--mode", "plain"]))));
    assert_eq!(plain["escaped values"], "13,7,10,4");
}

#[test]
fn lbasis_values() {
    let out = stdout(&refs(&with_basis(&["lbasis"], &["--m", "10"])));
    let values: Vec<String> = table(&out, "value,").into_iter().map(|r| r[0].clone()).collect();
    assert_eq!(values, ["0", "3", "4", "6", "7", "8", "9", "10"]);
}

#[test]
fn code_commands() {
    let build = fields(&stdout(&refs(&with_basis(&["code", "build"], &["--ext", "3", "--m", "5"]))));
    assert_eq!(build["n"], "6");
    assert_eq!(build["rank"], "3");
    assert_eq!(build["k"], "3");
    let bounds = stdout(&refs(&with_basis(&["code", "bounds"], &["--ext", "3", "--to", "8"])));
    assert!(bounds.contains("m,k,d_star,delta_FR,t_corr"));
    assert_eq!(table(&bounds, "m,").len(), 9);
    let zero = fields(&stdout(&refs(&with_basis(&["code", "syndrome"], &["--ext", "3", "--m", "5", "--word", "0,0,0,0,0,0"]))));
    assert_eq!(zero["codeword"], "yes");
    let short = run(&refs(&with_basis(&["code", "syndrome"], &["--ext", "3", "--m", "5", "--word", "0,1"])));
    assert_eq!(short.status.code(), Some(1));
}

#[test]
fn precision_ceiling_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_weierstrass"))
        .args(refs(&with_basis(&["weierstrass"], &[])))
        .env("WEIERSTRASS_PRECISION_CEILING", "20")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ceiling"));
}

#[test]
fn output_is_deterministic() {
    let args = with_basis(&["code", "build"], &["--ext", "3", "--m", "6"]);
    assert_eq!(stdout(&refs(&args)), stdout(&refs(&args)));
    let a = stdout(&["selftest", "--seed", "7", "--count", "10"]);
    assert_eq!(a, stdout(&["selftest", "--seed", "7", "--count", "10"]));
}
