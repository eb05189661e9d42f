use std::process::Command;

use genpara::cli::{default_points, run, Outcome};
use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn go(args: &[&str]) -> Outcome {
    run(std::iter::once("genpara").chain(args.iter().copied()))
}

fn go_json(args: &[&str]) -> (Value, i32) {
    let o = go(args);
    assert!(o.code != 2, "unexpected input error: {}", o.stderr);
    (serde_json::from_str(&o.stdout).expect("json"), o.code)
}

fn zero_matrix(v: &Value) -> bool {
    v.as_array().unwrap().iter().flat_map(|r| r.as_array().unwrap()).all(|c| c == "0")
}

#[test]
fn validate_trivial_passes() {
    let (v, code) = go_json(&["validate", &fixture("trivial.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["points"].as_array().unwrap().len(), 5);
}

#[test]
fn validate_bad_product_names_invariant() {
    let (v, code) = go_json(&["validate", &fixture("product_bad.json")]);
    assert_eq!(code, 1);
    let failed: Vec<&str> = v["failed"].as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect();
    assert!(failed.contains(&"product_square_identity"));
}

#[test]
fn validate_other_descriptors() {
    for f in ["product_good.json", "omega_symplectic.json", "pi_constant.json", "para.json", "metric.json"] {
        let (v, code) = go_json(&["validate", &fixture(f)]);
        assert_eq!(code, 0, "{f}");
        assert_eq!(v["passed"], true, "{f}");
    }
}

#[test]
fn validate_degenerate_omega() {
    let (v, code) = go_json(&["validate", &fixture("omega_degenerate.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["failed"], serde_json::json!(["omega_nondegenerate"]));
    assert_eq!(go(&["validate", &fixture("omega_nonclosed.json"), "--point", "0,1,1,1"]).code, 2);
}

#[test]
fn malformed_json_is_input_error() {
    let o = go(&["validate", &fixture("malformed.json")]);
    assert_eq!(o.code, 2);
    assert!(o.stdout.is_empty());
    assert!(o.stderr.starts_with("error:"));
    assert_eq!(go(&["validate", &fixture("missing.json")]).code, 2);
    assert_eq!(go(&["integrability", &fixture("malformed.json")]).code, 2);
}

#[test]
fn integrability_symplectic() {
    let (v, code) = go_json(&["integrability", &fixture("omega_symplectic.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["integrable"], true);
    assert_eq!(v["criterion"], "d_omega_zero");
    assert_eq!(v["kind"], "omega");
    assert!(v["nijenhuis_residual_samples"].is_array());
}

#[test]
fn integrability_non_closed_omega() {
    let (v, code) = go_json(&["integrability", &fixture("omega_nonclosed.json"), "--points", "1,1,1,1;2,1,3,1"]);
    assert_eq!(code, 1);
    assert_eq!(v["integrable"], false);
    assert_eq!(v["nijenhuis_agrees"], true);
}

#[test]
fn integrability_non_poisson() {
    let (v, code) = go_json(&["integrability", &fixture("pi_nonpoisson.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["integrable"], false);
    assert_eq!(v["witness"], "jacobiator(2,3,4)");
}

#[test]
fn integrability_trivial_and_constant() {
    for f in ["trivial.json", "pi_constant.json", "product_good.json"] {
        let (v, code) = go_json(&["integrability", &fixture(f)]);
        assert_eq!(code, 0, "{f}");
        assert_eq!(v["integrable"], true);
    }
    assert_eq!(go(&["integrability", &fixture("para.json")]).code, 2);
}

#[test]
fn curvature_flat() {
    let (v, code) = go_json(&["curvature", "flat", "--point", "0,0,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["s"], "0");
    for k in ["ricci", "operator", "b_part", "w_part", "w_plus", "w_minus"] {
        assert!(zero_matrix(&v[k]), "{k}");
    }
    assert_eq!(v["duality"]["self_dual"], true);
    assert_eq!(v["duality"]["anti_self_dual"], true);
}

#[test]
fn curvature_constcurv() {
    let (v, _) = go_json(&["curvature", "constcurv:1", "--point", "0,0,0,0"]);
    assert_eq!(v["s"], "12");
    assert_eq!(v["sectional_constant"], "1");
    assert!(zero_matrix(&v["b_part"]));
    assert!(zero_matrix(&v["w_part"]));
    assert_eq!(v["ricci"][0][0], "3");
    assert_eq!(v["ricci"][3][3], "-3");
}

#[test]
fn curvature_perturbed_file() {
    let metric_id = format!("file:{}", fixture("perturbed_metric.json"));
    let (v, _) = go_json(&["curvature", &metric_id, "--point", "3/4,0,0,0"]);
    assert_eq!(v["s"], "-512/625");
    assert_eq!(v["operator"][0][0], "-256/625");
    assert!(!zero_matrix(&v["w_plus"]));
    assert!(v["sectional_constant"].is_null());
}

#[test]
fn curvature_orientation_swaps_ppwave_flags() {
    let (p, _) = go_json(&["curvature", "ppwave:x4^2", "--point", "1,2,3,4"]);
    let (m, _) = go_json(&["curvature", "ppwave:x4^2", "--point", "1,2,3,4", "--orientation", "-"]);
    assert!(zero_matrix(&p["w_plus"]));
    assert!(!zero_matrix(&p["w_minus"]));
    assert!(!zero_matrix(&m["w_plus"]));
    assert!(zero_matrix(&m["w_minus"]));
}

#[test]
fn curvature_input_errors() {
    assert_eq!(go(&["curvature", "constcurv:1", "--point", "0,0,2,0"]).code, 2);
    assert_eq!(go(&["curvature", "flat", "--point", "1,2"]).code, 2);
    assert_eq!(go(&["curvature", "nonsense"]).code, 2);
    assert_eq!(go(&["curvature", "flat", "--orientation", "x"]).code, 2);
    assert_eq!(go(&["curvature", "flat", "--points", "0,0,0,0;1,1,1,1"]).code, 2);
}

#[test]
fn theorem_flat_integrable() {
    for c in ["++", "+-", "-+", "--"] {
        let (v, code) = go_json(&["theorem", "flat", "--component", c, "--samples", "40"]);
        assert_eq!(code, 0, "{c}");
        assert_eq!(v["integrable"], true);
        assert_eq!(v["evidence"]["jklr"]["nonzero"], 0);
    }
}

#[test]
fn theorem_constcurv() {
    let (v, code) = go_json(&["theorem", "constcurv:1", "--component", "+-"]);
    assert_eq!(code, 0);
    assert_eq!(v["evidence"]["jklr"]["samples"], 200);
    assert_eq!(v["evidence"]["jklr"]["nonzero"], 0);
    let (v, code) = go_json(&["theorem", "constcurv:1", "--component", "++", "--samples", "20"]);
    assert_eq!(code, 1);
    assert_eq!(v["failed"], serde_json::json!(["ricci_nonzero"]));
}

#[test]
fn theorem_dtheta_obstruction() {
    let (v, code) = go_json(&["theorem", "flat", "--theta", "x1*dx2^dx3", "--component", "++", "--samples", "20"]);
    assert_eq!(code, 1);
    assert_eq!(v["failed"], serde_json::json!(["dTheta_nonzero"]));
    assert!(v["evidence"]["np_witness"].is_object());
}

#[test]
fn theorem_ppwave_and_perturbed() {
    let (v, code) = go_json(&["theorem", "ppwave:x4^2", "--component", "++"]);
    assert_eq!(code, 0);
    assert_eq!(v["evidence"]["jklr"]["nonzero"], 0);
    let metric_id = format!("file:{}", fixture("perturbed_metric.json"));
    let (v, code) = go_json(&["theorem", &metric_id, "--component", "+-"]);
    assert_eq!(code, 1);
    assert!(v["evidence"]["jklr"]["nonzero"].as_u64().unwrap() > 0);
}

#[test]
fn theorem_epsilon_never_integrable() {
    for (e, comp) in [("2", "++"), ("3", "+-"), ("4", "--")] {
        let (v, code) = go_json(&["theorem", "flat", "--epsilon", e, "--component", comp, "--samples", "10"]);
        assert_eq!(code, 1);
        assert_eq!(v["k1_integrable"], true);
        let c = &v["evidence"]["never_integrable"];
        assert_eq!(c["value"], c["expected"]);
        assert_ne!(c["value"]["vector"], serde_json::json!(["0", "0", "0", "0"]));
    }
    assert_eq!(go(&["theorem", "flat", "--epsilon", "5"]).code, 2);
    assert_eq!(go(&["theorem", "flat", "--component", "+x"]).code, 2);
    assert_eq!(go(&["theorem", "flat", "--theta", "dx1"]).code, 2);
}

#[test]
fn reports_are_deterministic() {
    let args = ["theorem", "constcurv:1", "--component", "-+", "--seed", "7", "--samples", "50"];
    assert_eq!(go(&args).stdout, go(&args).stdout);
    let (a, b) = (go(&["--format", "text", "theorem", "flat", "--seed", "3"]), go(&["--format", "text", "theorem", "flat", "--seed", "3"]));
    assert_eq!(a, b);
    assert!(a.stdout.lines().any(|l| l == "schema: 1"));
}

#[test]
fn default_points_are_distinct() {
    let p = default_points(4);
    assert_eq!(p.len(), 5);
    for i in 0..5 {
        for j in i + 1..5 {
            assert_ne!(p[i], p[j]);
        }
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_genpara");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["validate", &fixture("trivial.json")]), Some(0));
    assert_eq!(code(&["validate", &fixture("product_bad.json")]), Some(1));
    assert_eq!(code(&["validate", &fixture("malformed.json")]), Some(2));
    assert_eq!(code(&["bogus"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
}
