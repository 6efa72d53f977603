use std::path::PathBuf;
use std::process::{Command, Output};

use lfactor_core::EulerFactor;

fn registry() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/std.json")
}

fn lfactor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lfactor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_registry(args: &[&str]) -> Output {
    let reg = registry();
    let mut all = vec!["--registry", reg.to_str().unwrap()];
    all.extend_from_slice(args);
    lfactor(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim_end().to_string()
}

#[test]
fn steinberg_exterior_square() {
    let o = with_registry(&["ext", "[one:2@-1/2]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(1 - X)^-1");
}

#[test]
fn oracle_agrees_on_steinberg_gl3() {
    let o = with_registry(&["oracle", "[one:3@-1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "AGREE: (1 - q^(-1) X)^-1");
}

#[test]
fn parse_error_exits_one_without_registry() {
    let o = lfactor(&["ext", "[one:2@-1/2"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("parse error at byte 11"), "{err}");
}

#[test]
fn missing_registry_is_a_domain_error() {
    let o = lfactor(&["ext", "[one:2@-1/2]"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn unknown_label_is_a_domain_error() {
    let o = with_registry(&["ext", "[nope:1]"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nope"));
}

#[test]
fn json_factor_round_trips() {
    let o = with_registry(&["--json", "rs", "[one:2@-1/2]"]);
    assert_eq!(o.status.code(), Some(0));
    let f: EulerFactor = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(f.to_string(), "(1 - q^(-1) X)^-1 (1 - X)^-1");
    let again = serde_json::to_string(&f).unwrap();
    assert_eq!(serde_json::from_str::<EulerFactor>(&again).unwrap(), f);
}

#[test]
fn flags_may_follow_the_command() {
    let reg = registry();
    let o = lfactor(&[
        "sym",
        "[one:2@-1/2]",
        "--registry",
        reg.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("{\"roots\""));
}

#[test]
fn rs_with_two_representations() {
    let o = with_registry(&["rs", "[one:2@-1/2]", "[one:1@1]"]);
    assert_eq!(stdout(&o), "(1 - q^(-3/2) X)^-1");
    let o = with_registry(&["rs", "[one:1]", "[rho2:1]"]);
    assert_eq!(stdout(&o), "1");
}

#[test]
fn gamma_of_steinberg() {
    let o = with_registry(&["gamma", "[one:2@-1/2]"]);
    assert_eq!(stdout(&o), "(1 - q^(1) X)^-1 / (1 - X)^-1");
    let o = with_registry(&["gamma", "[chi:1]"]);
    assert_eq!(stdout(&o), "1 / 1");
}

#[test]
fn lex_reports_linked_parts() {
    let o = with_registry(&["lex", "[one:2] * [one:2@-1]"]);
    assert_eq!(o.status.code(), Some(1));
    let o = with_registry(&["lex", "[one:2] * [one:2@1/2]"]);
    assert_eq!(stdout(&o), "(1 - q^(-3/2) X)^-1");
    let o = with_registry(&["lex", "[one:3@-1]"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn derive_lists_constituents() {
    let o = with_registry(&["derive", "--order", "1", "[one:2] * [chi:1]"]);
    assert_eq!(stdout(&o), "(0,1) [one:2]\n(1,0) [one:1@1] * [chi:1]");
    let o = with_registry(&["derive", "--order", "1", "[rho2:2]"]);
    assert_eq!(stdout(&o), "0");
    let o = with_registry(&["derive", "--order", "9", "[rho2:2]"]);
    assert_eq!(o.status.code(), Some(1));
    let o = with_registry(&["--json", "derive", "--order", "4", "[rho2:2]"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["constituents"][0]["parts"].as_array().unwrap().len(), 0);
}

#[test]
fn general_position_report() {
    let o = with_registry(&["check-gp", "[one:1] * [one:1@1/3]"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "ok".to_string()));
    let o = with_registry(&["--json", "check-gp", "[one:1] * [one:1]"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ok"], false);
    assert_eq!(v["violations"][0]["condition"], 2);
}

#[test]
fn oracle_refuses_outside_general_position() {
    let o = with_registry(&["oracle", "[one:1] * [one:1]"]);
    assert_eq!(o.status.code(), Some(1));
    let o = with_registry(&["oracle", "[one:1] * [one:1@1]"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn langlands_agreement() {
    let o = with_registry(&["langlands", "[one:2@-1/2] * [chi:1@1/5] * [rho2o:1@0~z1/4]"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("AGREE: "));
}

#[test]
fn selftest_runs_without_registry() {
    let o = lfactor(&["selftest", "--cases", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    assert_eq!(lfactor(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(lfactor(&["derive", "[one:1]"]).status.code(), Some(1));
    assert_eq!(lfactor(&["--help"]).status.code(), Some(0));
    assert_eq!(lfactor(&["--version"]).status.code(), Some(0));
}
