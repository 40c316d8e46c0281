use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cgqh_core::report::VerificationReport;
use serde_json::Value;

const TABLE: &str = include_str!("../../../data/cg_table.json");
const GIAMBELLI: &str = include_str!("../../../data/cg_giambelli.json");

fn cgqh(args: &[&str]) -> Output {
    cgqh_in(None, args)
}

fn cgqh_in(data_dir: Option<&Path>, args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cgqh"));
    cmd.args(args).env_remove("CG_DATA_DIR");
    if let Some(d) = data_dir {
        cmd.env("CG_DATA_DIR", d);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

/// A data directory holding the shipped files with one textual edit.
fn fixture(file: &str, from: &str, to: &str) -> (tempfile::TempDir, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let (table, giambelli) = match file {
        "table" => {
            assert!(TABLE.contains(from), "fixture anchor {from}");
            (TABLE.replacen(from, to, 1), GIAMBELLI.to_string())
        }
        _ => {
            assert!(GIAMBELLI.contains(from), "fixture anchor {from}");
            (TABLE.to_string(), GIAMBELLI.replacen(from, to, 1))
        }
    };
    std::fs::write(dir.path().join("cg_table.json"), table).unwrap();
    std::fs::write(dir.path().join("cg_giambelli.json"), giambelli).unwrap();
    let p = dir.path().to_path_buf();
    (dir, p)
}

#[test]
fn products() {
    for (a, b, want) in [
        ("s2", "s2", "s4 + 2*s4p + 2*s4pp"),
        ("s0", "s7", "s7"),
        ("s7", "s7", "q^2*s6 + q^2*s6p + q^3*s2 + q^3*s2p"),
    ] {
        let o = cgqh(&["product", a, b]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o), format!("{want}\n"));
    }
    assert_eq!(code(&cgqh(&["product", "s9", "s1"])), 2);
}

#[test]
fn invariants() {
    for (args, want) in [(["1", "s3", "s1", "s8"], "2"), (["0", "s4", "s4", "s0"], "1"), (["4", "s8", "s8", "s8"], "1"), (["3", "s8", "s8", "s8"], "0")] {
        let mut a = vec!["gw"];
        a.extend(args);
        let o = cgqh(&a);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o).trim(), want, "{args:?}");
    }
    assert_eq!(code(&cgqh(&["gw", "5", "s1", "s1", "s1"])), 2);
    assert_eq!(code(&cgqh(&["gw", "1", "s1", "x", "s1"])), 2);
}

#[test]
fn scenarios() {
    let o = cgqh(&["scenario", "4.1.8"]);
    assert_eq!(stdout(&o), "main=7 correction=1 value=6\n");
    let o = cgqh(&["scenario", "--all"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 12);
    assert!(stdout(&o).contains("4.2.3 I1(tau1111, tau2, tau33): main=3 correction=1 value=2"));
    assert_eq!(code(&cgqh(&["scenario", "9.9.9"])), 2);
    assert_eq!(code(&cgqh(&["scenario"])), 2);
}

#[test]
fn charpoly() {
    let o = cgqh(&["charpoly", "--q", "1"]);
    assert_eq!(stdout(&o), "t^15 - 102 t^11 + 317 t^7 - 2048 t^3\n");
    let o = cgqh(&["charpoly", "--q", "0"]);
    assert_eq!(stdout(&o), "t^15\n");
    assert_eq!(code(&cgqh(&["charpoly", "--q", "one"])), 2);
}

#[test]
fn conjecture_o() {
    let o = cgqh(&["conjecture-o"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("T(CG) = 12.6175960331"), "{out}");
    assert!(out.contains("max_eigenvalue_real_simple: true"));
    assert!(out.contains("modulus_t_set_is_t_times_fourth_roots: true"));
    assert!(out.contains("trace_form_nondegenerate: true"));
    let v: Value = serde_json::from_slice(&cgqh(&["--json", "conjecture-o"]).stdout).unwrap();
    let t: f64 = v["galkin"]["t_cg"]["decimal"].as_str().unwrap().parse().unwrap();
    assert!((t - 12.6175960332).abs() < 1e-8);
    assert_eq!(v["galkin"]["bound_ok"], true);
}

#[test]
fn derive_closes_the_loop() {
    let o = cgqh(&["derive"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("a7 = 0"));
    assert!(out.contains("relation: s1^5 - 5*s1^3*s2 + 6*s1*s2^2 + 4*s1*q = 0"), "{out}");
    assert!(out.contains("all 120 products agree with the table"));
}

#[test]
fn verify_all_passes() {
    let o = cgqh(&["verify", "--suite", "all"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).ends_with("0 failed\n"));
}

#[test]
fn verify_json_round_trips() {
    let o = cgqh(&["--json", "verify", "--suite", "table"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let r: VerificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(r.suite, "table");
    assert!(r.all_passed());
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", text);
    let v: Value = serde_json::from_slice(&cgqh(&["--json", "product", "s7", "s7"]).stdout).unwrap();
    assert_eq!(v["product"], "q^2*s6 + q^2*s6p + q^3*s2 + q^3*s2p");
}

#[test]
fn output_is_deterministic() {
    let a = cgqh(&["--json", "conjecture-o"]);
    let b = cgqh(&["--json", "conjecture-o"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn missing_file_is_a_data_error() {
    let o = cgqh(&["verify", "--table-file", "missing.json"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.json"));
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("cg_table.json"), "{").unwrap();
    std::fs::write(dir.path().join("cg_giambelli.json"), GIAMBELLI).unwrap();
    assert_eq!(code(&cgqh_in(Some(dir.path()), &["verify", "--suite", "table"])), 2);
}

#[test]
fn data_dir_is_honoured() {
    let (_keep, dir) = fixture("table", "", "");
    let o = cgqh_in(Some(&dir), &["verify", "--suite", "table"]);
    assert_eq!(code(&o), 0);
    std::fs::rename(dir.join("cg_table.json"), dir.join("other.json")).unwrap();
    assert_eq!(code(&cgqh_in(Some(&dir), &["verify", "--suite", "table"])), 2);
    let o = cgqh_in(Some(&dir), &["--table-file", "other.json", "verify", "--suite", "table"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn erratum_fails_associativity() {
    let (_keep, dir) = fixture(
        "table",
        r#"{"a": "s2", "b": "s5p", "terms": [{"label": "s7", "q": 0, "coeff": 3}"#,
        r#"{"a": "s2", "b": "s5p", "terms": [{"label": "s7", "q": 0, "coeff": 1}"#,
    );
    let o = cgqh_in(Some(&dir), &["verify", "--suite", "table"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("[FAIL] associativity"), "{}", stdout(&o));
}

#[test]
fn printed_s2p_s4_entry_fails_associativity() {
    let (_keep, dir) = fixture(
        "table",
        r#"{"a": "s2p", "b": "s4", "terms": [{"label": "s6", "q": 0, "coeff": 1}"#,
        r#"{"a": "s2p", "b": "s4", "terms": [{"label": "s6", "q": 0, "coeff": 2}"#,
    );
    let o = cgqh_in(Some(&dir), &["verify", "--suite", "table"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("[FAIL] associativity: 172 of 3375"), "{}", stdout(&o));
}

#[test]
fn negative_coefficient_fails_positivity() {
    let (_keep, dir) = fixture(
        "table",
        r#"{"a": "s3", "b": "s3", "terms": [{"label": "s6", "q": 0, "coeff": 3}"#,
        r#"{"a": "s3", "b": "s3", "terms": [{"label": "s6", "q": 0, "coeff": -3}"#,
    );
    let o = cgqh_in(Some(&dir), &["verify", "--suite", "table"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("[FAIL] positivity"), "{}", stdout(&o));
}

#[test]
fn flipped_giambelli_sign_fails_presentation() {
    let (_keep, dir) = fixture("giambelli", r#"{"exponents": [0, 1, 0], "coeff": "-1/1"}"#, r#"{"exponents": [0, 1, 0], "coeff": "1/1"}"#);
    let o = cgqh_in(Some(&dir), &["verify", "--suite", "presentation"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("[FAIL] giambelli"), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&cgqh(&[])), 2);
    assert_eq!(code(&cgqh(&["verify", "--suite", "nope"])), 2);
}
