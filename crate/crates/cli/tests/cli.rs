use compoly_cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["compoly"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn hvec_of_two_one() {
    let v = json(&["hvec", "2,1"]);
    assert_eq!(v["h"], serde_json::json!([1, 7, 7, 1]));
    assert_eq!(v["composition"], serde_json::json!([2, 1]));
    assert_eq!(v["kind"], "hvec");
}

#[test]
fn gamma_routes() {
    assert_eq!(json(&["gamma", "2"])["gamma"], serde_json::json!([1, 2]));
    for c in ["3,1", "1,2,1", "2,2"] {
        let d = json(&["gamma", c, "--method", "direct"]);
        let e = json(&["gamma", c, "--method", "expand"]);
        assert_eq!(d["gamma"], e["gamma"], "{c}");
    }
}

#[test]
fn ehrhart_routes_agree() {
    for c in ["1,1", "2,1", "1,2,1"] {
        for m in ["0", "1", "3"] {
            let a = json(&["ehrhart", c, "--method", "oracle", "--eval", m]);
            let b = json(&["ehrhart", c, "--method", "sp", "--eval", m]);
            let p = json(&["ehrhart", c, "--method", "poly", "--eval", m]);
            assert_eq!(a["value"], b["value"], "{c} {m}");
            assert_eq!(a["value"], p["value"], "{c} {m}");
        }
    }
    let p = json(&["ehrhart", "1,1"]);
    assert_eq!(p["polynomial"], serde_json::json!(["1", "5/2", "3/2"]));
}

#[test]
fn zeta_shift_matches_ehrhart() {
    let z = json(&["zeta", "2,1"]);
    // Z(P_σ, t + 1) is the Ehrhart polynomial of the reversed composition.
    let e = json(&["ehrhart", "1,2"]);
    assert_eq!(z["shifted"], e["polynomial"]);
    let v = json(&["zeta", "2,1", "--eval", "2"]);
    assert_eq!(v["route"], "product+brute");
}

#[test]
fn hstar_routes_agree() {
    for c in ["2,1", "1,2", "1,1,2"] {
        let s = json(&["hstar", c]);
        let w = json(&["hstar", c, "--method", "words"]);
        let l = json(&["hstar", c, "--method", "elchains"]);
        assert_eq!(s["polynomial"], w["polynomial"], "{c}");
        assert_eq!(s["polynomial"], l["polynomial"], "{c}");
    }
}

#[test]
fn roots_report() {
    let r = json(&["roots", "1,2,1"]);
    assert_eq!(r["real_and_inside"], true);
    assert_eq!(r["degree"], 4);
}

#[test]
fn verify_sweep_passes() {
    let (code, out, _) = call(&["verify", "--n", "5"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    let (code, out, _) = call(&["verify", "--n", "4", "--checks", "sieve,paths", "--format", "tsv"]);
    assert_eq!(code, 0);
    // Header plus 8 compositions times 2 checks.
    assert_eq!(out.lines().count(), 17);
}

#[test]
fn tsv_output() {
    let (code, out, _) = call(&["hvec", "2,1", "--format", "tsv"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "h\t1\t7\t7\t1"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["hvec", "0,2"][..],
        &["hvec", "2,x"],
        &["hvec", "13"],
        &["verify", "--n", "3", "--checks", "nonsense"],
        &["frobnicate"],
        &["ehrhart", "1", "--method", "guess"],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn guard_message_names_override() {
    let (_, _, err) = call(&["hvec", "13"]);
    assert!(err.contains("--max-n"));
    assert!(err.contains("COMPOLY_MAX_N"));
}

#[test]
fn max_n_lifts_guard() {
    let (code, out, err) = call(&["--max-n", "13", "hvec", "13"]);
    assert_eq!(code, 0);
    assert!(err.contains("warning"));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["h"].as_array().unwrap().len(), 14);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn output_is_deterministic() {
    assert_eq!(call(&["verify", "--n", "4"]).1, call(&["verify", "--n", "4"]).1);
}
