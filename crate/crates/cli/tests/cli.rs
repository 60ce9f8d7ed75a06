use std::path::PathBuf;
use std::process::{Command, Output};

use clusterforge::LaurentPolynomial;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clusterforge")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn classify_kronecker() {
    let out = stdout(&["classify", "--quiver", &data("kronecker.json")]);
    assert_eq!(out.lines().next(), Some("Affine A~(1,1)"));
    assert_eq!(out, golden("classify_kronecker.txt"));
}

#[test]
fn ccmap_of_the_a31_delta_module_is_z() {
    let out = stdout(&["ccmap", "--rep", &data("a31_mlambda.json")]);
    assert_eq!(out, golden("ccmap_a31_mlambda.txt"));
    let vars = [1, 2, 3, 4];
    let z = LaurentPolynomial::parse(
        &vars,
        "(u3*u2*u1^2 + u2*u1 + u1*u4 + u4*u3 + u3*u2*u4^2)/(u1*u2*u3*u4)",
    )
    .unwrap();
    assert_eq!(LaurentPolynomial::parse(&vars, out.trim()).unwrap(), z);
    // The same module through --lambda.
    let by_lambda = stdout(&["ccmap", "--quiver", &data("a31.json"), "--lambda", "2"]);
    assert_eq!(by_lambda, out);
}

#[test]
fn diffprop_on_a21_has_difference_one() {
    let out = stdout(&["diffprop", "--quiver", &data("a21.json")]);
    assert_eq!(out, golden("diffprop_a21.txt"));
    for line in out.lines() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(fields[1..], ["1", "PASS"]);
    }
}

#[test]
fn kronecker_base_change_matrices() {
    let p = stdout(&["kronecker-basechange", "--from", "P", "--to", "z", "--n", "10"]);
    assert_eq!(p, golden("basechange_p_z_10.txt"));
    let c = stdout(&["kronecker-basechange", "--from", "C", "--to", "z", "--n", "10"]);
    assert_eq!(c, golden("basechange_c_z_10.txt"));
    let inverse = stdout(&["kronecker-basechange", "--from", "z", "--to", "P", "--n", "10"]);
    // P_2 = z^2 - 2: first row, third column.
    let row: Vec<&str> = inverse.lines().next().unwrap().split(' ').collect();
    assert_eq!(row[2], "-2");
}

#[test]
fn json_output_mirrors_terms() {
    let out = stdout(&["ccmap", "--quiver", &data("kronecker.json"), "--lambda", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["vars"], serde_json::json!([1, 2]));
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    let z = LaurentPolynomial::parse(&[1, 2], "(1 + u1^2 + u2^2)/(u1*u2)").unwrap();
    assert_eq!(v["string"], z.to_canonical_string());
}

#[test]
fn output_is_byte_stable() {
    let args = ["basis", "--quiver", &data("a21.json"), "--box", "1,1,1"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn generic_and_mutate() {
    let out = stdout(&["generic", "--quiver", &data("kronecker.json"), "--dim", "2,2"]);
    assert!(out.contains("decomposition: delta^2"), "{out}");
    let z = LaurentPolynomial::parse(&[1, 2], "(1 + u1^2 + u2^2)/(u1*u2)").unwrap();
    assert!(out.ends_with(&format!("X_d = {}\n", &z * &z)), "{out}");
    let a3 = r#"{"vertices":[1,2,3],"arrows":[[1,2],[2,3]]}"#;
    let out = stdout(&["mutate", "--quiver", a3]);
    assert!(out.starts_with("9 cluster variables"), "{out}");
    let out = stdout(&["mutate", "--quiver", &data("kronecker.json"), "--seq", "1"]);
    let x1 = LaurentPolynomial::parse(&[1, 2], "(1 + u2^2)/u1").unwrap();
    assert_eq!(out.lines().next().unwrap(), format!("x1 = {x1}"));
}

#[test]
fn reflect_reports_compatibility() {
    let rep = r#"{"dims":[1,1,1],"maps":{"0":[[1]],"1":[[1]],"2":[[5]]}}"#;
    let out = stdout(&["reflect", "--quiver", &data("a21.json"), "--sink", "3", "--rep", rep]);
    assert!(out.ends_with("compatibility PASS\n"), "{out}");
    let out = run(&["reflect", "--quiver", &data("a21.json"), "--sink", "2", "--rep", rep]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn grade_reports_infeasibility() {
    let cyc = r#"{"vertices":[1,2,3],"arrows":[[1,2],[1,2],[2,3],[2,3],[3,1],[3,1]]}"#;
    assert_eq!(stdout(&["grade", "--quiver", cyc]), "infeasible\n");
    assert!(stdout(&["grade", "--quiver", &data("a21.json")]).starts_with("grading form"));
}

#[test]
fn domain_errors_exit_with_one() {
    let out = run(&["classify", "--quiver", "{\"vertices\":[1,"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed JSON"));
    assert_eq!(run(&["classify", "--quiver", &data("a21.json"), "--bogus"]).status.code(), Some(1));
    let cyclic = r#"{"vertices":[1,2,3],"arrows":[[1,2],[2,3],[3,1]]}"#;
    assert_eq!(run(&["diffprop", "--quiver", cyclic]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--module", "nothing"]).status.code(), Some(1));
}

#[test]
fn verify_passes() {
    let out = stdout(&["verify"]);
    assert!(out.lines().last().unwrap().ends_with(", 0 failed"), "{out}");
    assert!(!out.contains("FAIL"));
}
