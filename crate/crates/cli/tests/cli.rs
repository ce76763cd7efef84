use std::f64::consts::PI;
use std::process::Command;

use mvlog::{Multivector, Signature};
use mvlog_cli::document::format_number;
use mvlog_cli::{parse_mv, print_mv, run, EXIT_NONEXISTENT, EXIT_OK, EXIT_SINGULAR, EXIT_USAGE};
use proptest::prelude::*;
use serde_json::Value;

fn mvlog(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mvlog")).args(args).output().expect("binary runs");
    let text = |b: Vec<u8>| String::from_utf8(b).expect("utf-8 output");
    (out.status.code().expect("exit code"), text(out.stdout), text(out.stderr))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(std::iter::once("mvlog").chain(all));
    (out.code, serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout)))
}

fn coeffs(v: &Value, key: &str) -> Vec<f64> {
    v["outcome"][key].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

#[test]
fn binary_exit_codes() {
    assert_eq!(mvlog(&["log", "--algebra", "cl30", "-2+e1+e23-3e123", "--json"]).0, EXIT_OK);
    assert_eq!(mvlog(&["log", "--algebra", "cl30", "e1+e12"]).0, EXIT_NONEXISTENT);
    assert_eq!(mvlog(&["log", "--algebra", "cl21", "e1-2e23"]).0, EXIT_NONEXISTENT);
    assert_eq!(mvlog(&["log", "--algebra", "cl30", "1+e1"]).0, EXIT_SINGULAR);
    let (code, _, err) = mvlog(&["log", "e1 e2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("column 4"), "{err}");
    assert_eq!(mvlog(&["log", "--algebra", "cl99", "e1"]).0, EXIT_USAGE);
    assert_eq!(mvlog(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(mvlog(&["log", "--tol", "-1", "e1"]).0, EXIT_USAGE);
    assert_eq!(mvlog(&["fn", "--name", "sin", "--algebra", "cl21", "e1"]).0, EXIT_USAGE);
    assert_eq!(mvlog(&["--help"]).0, EXIT_OK);
}

#[test]
fn roundtrip_command_reports_residuals() {
    let (code, out, _) = mvlog(&["roundtrip", "--algebra", "cl03", "--count", "1000", "--seed", "42"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("max residual"), "{out}");
    assert!(out.contains("0 of 1000 draws rejected"), "{out}");
}

#[test]
fn roundtrip_is_deterministic_and_counts_rejections() {
    let args = ["roundtrip", "--count", "300", "--seed", "7"];
    let (c1, a) = json(&args);
    let (c2, b) = json(&args);
    assert_eq!((c1, c2), (EXIT_OK, EXIT_OK));
    assert_eq!(a, b);
    let rows = a["algebras"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let rate = |name: &str| rows.iter().find(|r| r["algebra"] == name).unwrap()["rejection_rate"].as_f64().unwrap();
    assert_eq!(rate("cl03"), 0.0);
    assert!(rate("cl21") > 0.5, "{}", rate("cl21"));
    let (_, c) = json(&["roundtrip", "--count", "300", "--seed", "8"]);
    assert_ne!(a["algebras"], c["algebras"]);
}

#[test]
fn roundtrip_with_other_sheets() {
    let (code, doc) = json(&["roundtrip", "--count", "200", "--seed", "3", "--branch", "c1p=-2,c1m=3,c2p=3,c2m=-2", "--free-vec", "0.3,-1,2", "--free-biv", "1,1,-0.5"]);
    assert_eq!(code, EXIT_OK, "{doc}");
    assert_eq!(doc["branch"]["c1m"], 3);
}

#[test]
fn example_log_matches_closed_form() {
    let (code, doc) = json(&["log", "--algebra", "cl30", "-2+e1+e23-3e123"]);
    assert_eq!(code, EXIT_OK);
    let ln5 = 5f64.ln();
    let golden = ((1.0 + 5f64.sqrt()) / 2.0).atan();
    let want = [0.75 * ln5, -0.25 * ln5, 0.0, 0.0, 0.0, 0.0, 0.5 * (2.0f64 / 11.0).atan(), -PI + golden];
    for (got, want) in coeffs(&doc, "coeffs").iter().zip(want) {
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
    }
    assert_eq!(coeffs(&doc, "lambda_coeffs"), vec![0.0; 8]);
    assert_eq!(doc["outcome"]["case_row"], "cl30:Generic");
}

/// Same keys everywhere, identical strings and integers, floats to 1e-12.
fn same_shape(a: &Value, b: &Value, path: &str) {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            let kx: Vec<_> = x.keys().collect();
            let ky: Vec<_> = y.keys().collect();
            assert_eq!(kx, ky, "keys at {path}");
            for k in x.keys() {
                same_shape(&x[k], &y[k], &format!("{path}.{k}"));
            }
        }
        (Value::Array(x), Value::Array(y)) => {
            assert_eq!(x.len(), y.len(), "length at {path}");
            for (i, (p, q)) in x.iter().zip(y).enumerate() {
                same_shape(p, q, &format!("{path}[{i}]"));
            }
        }
        (Value::Number(x), Value::Number(y)) => {
            let (p, q) = (x.as_f64().unwrap(), y.as_f64().unwrap());
            assert!((p - q).abs() <= 1e-12 * p.abs().max(1.0), "{path}: {p} vs {q}");
        }
        _ => assert_eq!(a, b, "at {path}"),
    }
}

#[test]
fn golden_documents() {
    for (file, args, code) in [
        ("log_cl30_example.json", ["log", "--algebra", "cl30", "-2+e1+e23-3e123"], EXIT_OK),
        ("log_cl30_singular.json", ["log", "--algebra", "cl30", "1+e1"], EXIT_SINGULAR),
        ("log_cl21_nonexistent.json", ["log", "--algebra", "cl21", "e1-2e23"], EXIT_NONEXISTENT),
    ] {
        let path = format!("{}/tests/golden/{file}", env!("CARGO_MANIFEST_DIR"));
        let want: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let (got_code, got) = json(&args);
        assert_eq!(got_code, code, "{file}");
        same_shape(&got, &want, file);
    }
}

#[test]
fn singular_document_carries_lambda_multipliers() {
    let (_, doc) = json(&["log", "--algebra", "cl30", "1+e1"]);
    let l = coeffs(&doc, "lambda_coeffs");
    assert_eq!(&l[..2], &[0.5, -0.5]);
    let out = run(["mvlog", "log", "--algebra", "cl30", "1+e1"]);
    assert!(out.stdout.contains("log(0+)"), "{}", out.stdout);
}

#[test]
fn text_and_json_agree() {
    for args in [
        vec!["log", "--algebra", "cl03", "9/10 - 1/3 e3"],
        vec!["log", "--algebra", "cl12", "0.3 - 2e1 + e2 + 4e13 - e123"],
        vec!["pow", "--r", "2/3", "1 + e1 - e23"],
        vec!["fn", "--name", "arctanh", "0.2 + 0.1e2 - 0.3e13"],
    ] {
        let text = run(std::iter::once("mvlog").chain(args.iter().copied())).stdout;
        let (_, doc) = json(&args);
        for x in coeffs(&doc, "coeffs").into_iter().filter(|x| *x != 0.0) {
            let shown = format_number(x.abs());
            assert!(text.contains(&shown), "{shown} missing from\n{text}");
        }
    }
}

#[test]
fn example_decimals_in_text() {
    let out = run(["mvlog", "log", "--algebra", "cl03", "9/10 - 1/3 e3"]);
    assert!(out.stdout.contains("-0.04108730409 - 0.354705652*e3"), "{}", out.stdout);
    let out = run(["mvlog", "log", "--algebra", "cl03", "-9/10 - 1/3 e3"]);
    assert!(out.stdout.contains("-0.04108730409 - 2.786887002*e3"), "{}", out.stdout);
}

#[test]
fn branch_flags_select_sheets() {
    let (_, p) = json(&["log", "--algebra", "cl30", "-2+e1+e23-3e123"]);
    let (_, q) = json(&["log", "--algebra", "cl30", "--branch", "c1=1,c2=-1", "-2+e1+e23-3e123"]);
    let d: Vec<f64> = coeffs(&q, "coeffs").iter().zip(coeffs(&p, "coeffs")).map(|(a, b)| a - b).collect();
    assert!((d[6] - 2.0 * PI).abs() < 1e-12 && (d[7] + 2.0 * PI).abs() < 1e-12, "{d:?}");
    let out = run(["mvlog", "log", "--algebra", "cl30", "--branch", "c1=1", "-2+e1+e23-3e123", "--residual"]);
    let r: f64 = out.stdout.lines().find_map(|l| l.strip_prefix("residual: ")).unwrap().parse().unwrap();
    assert!(r < 1e-12);
    // Negative scalar in Cl(0,3): the free vector direction shows up in the result.
    let (_, a) = json(&["log", "--algebra", "cl03", "-2"]);
    let (_, b) = json(&["log", "--algebra", "cl03", "--free-vec", "0,2,0", "-2"]);
    assert_eq!(coeffs(&a, "coeffs")[1], PI);
    assert_eq!(coeffs(&b, "coeffs")[2], PI);
    assert_eq!(b["branch"]["free_vec"], serde_json::json!([0.0, 2.0, 0.0]));
}

#[test]
fn other_commands() {
    let (code, doc) = json(&["pow", "--r", "1/3", "--algebra", "cl03", "e1"]);
    assert_eq!(code, EXIT_OK);
    let c = coeffs(&doc, "coeffs");
    assert!((c[0] - 0.75f64.sqrt()).abs() < 1e-14 && (c[1] - 0.5).abs() < 1e-14);
    assert_eq!(doc["op"], "pow[1/3]");

    let (_, doc) = json(&["det", "1+e1+2e12"]);
    assert_eq!(coeffs(&doc, "coeffs")[0], 16.0);
    let (_, doc) = json(&["norm", "1+e1+2e12"]);
    assert_eq!(coeffs(&doc, "coeffs")[0], 2.0);

    let (code, doc) = json(&["series-log", "--algebra", "cl03", "1.2+0.1e1", "--residual"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["outcome"]["exists"], true);
    assert!(doc["residual"].as_f64().unwrap() < 1e-12);
    let (_, doc) = json(&["series-log", "--algebra", "cl03", "3+e1"]);
    assert_eq!(doc["outcome"]["exists"], false);

    let (code, doc) = json(&["fn", "--name", "arccosh", "-1-5e1+7e2-9e3+7e12-5e13+9e23+9I", "--residual"]);
    assert_eq!(code, EXIT_OK);
    assert!(doc["residual"].as_f64().unwrap() < 1e-10);

    let (code, doc) = json(&["min-sheet", "--algebra", "cl03", "--cmax", "1", "-3+e1+e2", "--residual"]);
    assert_eq!(code, EXIT_OK);
    assert!(doc["residual"].as_f64().unwrap() < 1e-12);

    let (code, doc) = json(&["exp", "--algebra", "cl03", "0.5e1 - e23", "--residual"]);
    assert_eq!(code, EXIT_OK);
    assert!(doc["residual"].as_f64().unwrap() < 1e-12);
}

#[test]
fn lambda_powers() {
    // Integer powers survive a logarithm with log(0+); fractional ones do not.
    let (code, doc) = json(&["pow", "--r", "3", "1+e1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(coeffs(&doc, "coeffs")[..2], [4.0, 4.0]);
    assert_eq!(json(&["pow", "--r", "1/2", "1+e1"]).0, EXIT_SINGULAR);
    assert_eq!(json(&["pow", "--r", "-1", "1+e1"]).0, EXIT_SINGULAR);
}

fn coefficient() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), -1e6f64..1e6, (-1000i32..1000).prop_map(f64::from), -1e-9f64..1e-9]
}

fn term_text(c: f64, blade: usize) -> String {
    let sym = ["", "e1", "e2", "e3", "e12", "e13", "e23", "I"][blade];
    let sign = if c < 0.0 { "-" } else { "+" };
    match blade {
        0 => format!("{sign} {}", c.abs()),
        _ => format!("{sign} {} * {sym}", c.abs()),
    }
}

proptest! {
    #[test]
    fn print_parse_fixed_point(c in prop::array::uniform8(coefficient())) {
        let a = Multivector::new(Signature::Cl12, c);
        let text = print_mv(&a);
        let back = parse_mv(&text, Signature::Cl12).unwrap();
        prop_assert_eq!(back, a);
        prop_assert_eq!(print_mv(&back), text);
    }

    #[test]
    fn duplicate_terms_are_summed(terms in prop::collection::vec(((-100i32..100).prop_map(f64::from), 0usize..8), 1..12)) {
        let text: String = terms.iter().map(|(c, b)| term_text(*c, *b)).collect::<Vec<_>>().join(" ");
        let mut want = [0.0; 8];
        for (c, b) in &terms {
            want[*b] += c;
        }
        let got = parse_mv(&text, Signature::Cl30).unwrap();
        prop_assert_eq!(*got.coeffs(), want, "{}", text);
    }

    #[test]
    fn juxtaposed_blades_are_rejected(a in 1usize..8, b in 1usize..8) {
        let sym = |i: usize| ["", "e1", "e2", "e3", "e12", "e13", "e23", "I"][i];
        let text = format!("{} {}", sym(a), sym(b));
        let e = parse_mv(&text, Signature::Cl03).unwrap_err();
        prop_assert_eq!(e.pos, sym(a).len() + 1);
    }

    #[test]
    fn parser_never_panics(s in "[-+*/. 0-9eI]{0,24}") {
        let _ = parse_mv(&s, Signature::Cl21);
    }
}
