use std::process::Command;

use blocksym::cli::run_from_args;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("blocksym").chain(args.iter().copied());
    let code = run_from_args(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn stdout_of(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out.trim_end().to_string()
}

#[test]
fn counts_and_formulas() {
    assert_eq!(stdout_of(&["count", "--r", "1,1,1"]), "64");
    for method in ["lgv", "tilings", "hexagon", "pp"] {
        assert_eq!(stdout_of(&["count", "--r", "1,1,1", "--method", method]), "64", "{method}");
    }
    assert_eq!(stdout_of(&["formula", "asm", "--n", "4"]), "42");
    assert_eq!(stdout_of(&["formula", "cor1", "--r", "2,2,2"]), "12096");
    assert_eq!(stdout_of(&["formula", "macmahon", "--a", "2", "--b", "2", "--c", "2"]), "20");
    assert_eq!(stdout_of(&["formula", "macmahon", "--a", "1", "--b", "1", "--c", "1", "--q"]), "q + 1");
    assert_eq!(stdout_of(&["formula", "sympp", "--m", "2", "--n", "2"]), "10");
    assert_eq!(stdout_of(&["formula", "cor3", "--r", "2"]), "q^4 + q^3 + q + 1");
}

#[test]
fn generating_functions_agree_across_methods() {
    let want = stdout_of(&["formula", "thm1", "--r", "1,0,2"]);
    for method in ["formula", "lgv", "tilings", "hexagon"] {
        assert_eq!(stdout_of(&["genfun", "--r", "1,0,2", "--method", method]), want, "{method}");
    }
    assert_eq!(stdout_of(&["lgv", "genfun", "--r", "1,0,2"]), want);
    assert_eq!(stdout_of(&["genfun", "--r", "1,1,1", "--weight", "numeric"]), "64");
    assert_eq!(
        stdout_of(&["pp", "genfun", "--m", "2", "--n", "2", "--r", "1,1"]),
        stdout_of(&["formula", "thm15", "--r", "1,1"])
    );
}

#[test]
fn signed_sum_and_its_product_side() {
    let signed = stdout_of(&["genfun", "--r", "1,2", "--rprime", "1,0"]);
    assert_eq!(signed, stdout_of(&["formula", "thm2", "--r", "1,2", "--rprime", "1,0"]));
    let (code, _, err) = run(&["genfun", "--r", "1,2", "--rprime", "0,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("--rprime"), "{err}");
    assert_eq!(run(&["genfun", "--r", "1,2", "--rprime", "0,1", "--exploratory"]).0, 0);
}

#[test]
fn tilings_schur_and_pp() {
    assert_eq!(stdout_of(&["tilings", "count", "--hex", "2,2,2"]), "20");
    assert_eq!(stdout_of(&["tilings", "genfun", "--trap", "1,1", "--P", "2"]), "x1");
    assert_eq!(stdout_of(&["tilings", "genfun", "--trap", "2,2", "--P", "2,4", "--weight", "qt"]), "q^2*t^3 + q*t^3");
    assert_eq!(stdout_of(&["schur", "eval", "--lambda", "2,1", "--m", "2"]), "x1^2*x2 + x1*x2^2");
    assert_eq!(
        stdout_of(&["schur", "eval", "--lambda", "2,1", "--m", "3", "--principal"]),
        "q^5 + 2*q^4 + 2*q^3 + 2*q^2 + q"
    );
    assert_eq!(stdout_of(&["pp", "count", "--a", "1", "--b", "2", "--c", "1"]), "3");
    let listed: serde_json::Value =
        serde_json::from_str(&stdout_of(&["pp", "list", "--a", "1", "--b", "1", "--c", "1", "--format", "json"])).unwrap();
    assert_eq!(listed, serde_json::json!([[[0]], [[1]]]));
    let tilings: serde_json::Value =
        serde_json::from_str(&stdout_of(&["tilings", "list", "--hex", "1,1,1", "--format", "json"])).unwrap();
    assert_eq!(tilings.as_array().unwrap().len(), 2);
}

#[test]
fn verify_reports_json() {
    let out = stdout_of(&["verify", "thm1", "--max", "5"]);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["suite"], "thm1");
    assert_eq!(report["passed"], true);
    assert!(report["first_counterexample"].is_null());
    assert!(report["instances"].as_u64().unwrap() > 0);
    let lemma = stdout_of(&["verify", "lemma32", "--n", "2", "--M", "4"]);
    assert!(lemma.contains("\"passed\":true"));
    let all = stdout_of(&["verify", "all", "--max", "4"]);
    assert_eq!(all.lines().count(), 14);
    assert!(all.lines().last().unwrap().contains("\"passed\":true"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "ring", "--max", "2", "--seed", "11"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
    let args = ["tilings", "list", "--hex", "2,1,2", "--format", "json"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn invalid_input_exits_with_two() {
    for (args, flag) in [
        (vec!["count", "--r", "1,x"], "--r"),
        (vec!["count", "--r", "1,1", "--bogus"], "--bogus"),
        (vec!["tilings", "count", "--hex", "2,2"], "--hex"),
        (vec!["formula", "macmahon", "--a", "0", "--b", "1", "--c", "1"], "--a"),
        (vec!["verify", "nosuch"], "suite"),
        (vec!["count", "--r", "1,1", "--limit", "0"], "--limit"),
    ] {
        let (code, _, err) = run(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(err.contains(flag), "{args:?}: {err}");
        assert_eq!(err.trim_end().lines().next().map(|l| l.starts_with("error")), Some(true), "{err}");
    }
}

#[test]
fn size_limits_refuse_and_can_be_lifted() {
    let args = ["tilings", "count", "--hex", "2,2,2", "--limit", "5"];
    let (code, _, err) = run(&args);
    assert_eq!(code, 2);
    assert!(err.contains("--unsafe-max"), "{err}");
    assert_eq!(stdout_of(&["tilings", "count", "--hex", "2,2,2", "--limit", "5", "--unsafe-max"]), "20");
    let (code, _, err) = run(&["pp", "count", "--a", "4", "--b", "4", "--c", "1"]);
    assert_eq!(code, 2, "{err}");
    assert_eq!(stdout_of(&["pp", "count", "--a", "4", "--b", "4", "--c", "1", "--unsafe-max"]), "70");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_blocksym");
    let ok = Command::new(bin).args(["count", "--r", "1,1,1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "64");
    let bad = Command::new(bin).args(["count", "--r", "a"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
