use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn hk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hk"))
        .args(args)
        .env_remove("HK_SEED")
        .output()
        .expect("spawn hk")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn validate(v: &Value) {
    let schema: Value = serde_json::from_str(hk_cli::REPORT_SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn chern_example_even_theta() {
    let out = hk(&["chern", "example", "--name", "even-theta"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    validate(&v);
    assert_eq!(v["result"]["c2"], "30");
    assert_eq!(v["pass"], true);
}

#[test]
fn hilb2_not_birational() {
    let out = hk(&["pell", "hilb2", "--column", "8d8d_b", "--d", "16"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    validate(&v);
    assert_eq!(v["result"]["decision"], "not birational");
    assert_eq!(v["result"]["certificate"], "square factorization");
}

#[test]
fn pell_minimal_solution() {
    let out = hk(&["pell", "solve", "--d", "19", "--n", "1", "--bound", "1000"]);
    let v = json(&out);
    validate(&v);
    assert_eq!(v["result"]["minimal"], serde_json::json!(["39", "170"]));
}

#[test]
fn brauer_count_totals() {
    let v = json(&hk(&["brauer", "count"]));
    validate(&v);
    assert_eq!(v["result"]["Bh=1/2,B2=0"], (512 * 1025).to_string());
    assert_eq!(v["pass"], true);
}

#[test]
fn mukai_pairing_of_hyperbolic_vectors() {
    let zeros = vec!["0"; 22].join(",");
    let x = format!("1;{zeros};0");
    let y = format!("0;{zeros};1");
    let v = json(&hk(&["mukai", "pair", "--x", &x, "--y", &y]));
    validate(&v);
    assert_eq!(v["result"]["pairing"], "-1");
}

#[test]
fn gram_file_round_trip() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# A2 root lattice\n2 -1\n-1 2").unwrap();
    let out = hk(&["lattice", "gram", "--file", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    validate(&v);
    assert_eq!(v["result"]["det"], "3");
    assert_eq!(v["result"]["discriminant_orders"], serde_json::json!(["3"]));
}

#[test]
fn malformed_gram_exits_3() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "2 1\n1 two").unwrap();
    let out = hk(&["lattice", "gram", "--file", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn non_symmetric_gram_exits_3() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "2 1\n0 2").unwrap();
    let out = hk(&["lattice", "gram", "--file", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unknown_names_exit_2() {
    assert_eq!(
        hk(&["lattice", "standard", "--name", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        hk(&["heegner", "classical", "--name", "nope"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hk(&["fermat", "verify", "--check", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(hk(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn invalid_parameter_exits_4() {
    assert_eq!(hk(&["mukai", "bundle", "--d", "4"]).status.code(), Some(4));
    assert_eq!(
        hk(&["heegner", "case", "--column", "HC_2d2d_a", "--param", "-5"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn wrong_lambda_length_exits_3() {
    let out = hk(&[
        "brauer", "classify", "--d", "2", "--a", "1", "--lambda", "1,0,1",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn fermat_line_passes() {
    let out = hk(&["fermat", "verify", "--check", "line"]);
    assert_eq!(out.status.code(), Some(0));
    validate(&json(&out));
}

#[test]
fn sextic_seed_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_hk"))
        .args(["fermat", "verify", "--check", "sextic", "--samples", "8"])
        .env("HK_SEED", "7")
        .output()
        .unwrap();
    let v = json(&out);
    validate(&v);
    assert_eq!(v["result"]["seed"], "7");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn pretty_output_is_a_table() {
    let out = hk(&["--pretty", "chern", "fujiki", "--d", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("chern fujiki"));
    assert!(text.contains("PASS"));
    assert!(text.contains("0 failed"));
}

#[test]
fn classify_by_lambda_square() {
    let v = json(&hk(&[
        "brauer",
        "classify",
        "--d",
        "1",
        "--a",
        "1",
        "--lambda-sq-mod4",
        "2",
    ]));
    validate(&v);
    assert_eq!(v["result"]["name"], "odd theta");
    assert_eq!(v["result"]["Bh"], "1/2");
    assert_eq!(v["result"]["B2"], "1/2");
}

#[test]
fn fujiki_from_gram_and_vectors() {
    // E(H-E)^3 on <6> + <-2> is 12(3-1)
    let v = json(&hk(&[
        "chern",
        "fujiki",
        "--gram",
        "6,0;0,-2",
        "--vectors",
        "0,1;1,-1;1,-1;1,-1",
    ]));
    validate(&v);
    assert_eq!(v["result"]["product"], "24");
}

#[test]
fn pell_accepts_upper_case_flags() {
    let v = json(&hk(&[
        "pell", "solve", "--D", "19", "--N", "1", "--bound", "200",
    ]));
    assert_eq!(v["result"]["minimal"], serde_json::json!(["39", "170"]));
}

#[test]
fn gram_json_format() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"rank": 2, "gram": [["0", "1"], [1, "-4"]]}}"#).unwrap();
    let v = json(&hk(&[
        "lattice",
        "gram",
        "--file",
        f.path().to_str().unwrap(),
    ]));
    validate(&v);
    assert_eq!(v["result"]["det"], "-1");

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, r#"{{"rank": 3, "gram": [[0, 1], [1, 0]]}}"#).unwrap();
    let out = hk(&["lattice", "gram", "--file", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}
