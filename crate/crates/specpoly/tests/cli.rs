//! End-to-end checks of the `specpoly` binary: output formats, exit codes,
//! and the CSV/JSON round trips through the CLI surface.

use std::process::{Command, Output};

fn specpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specpoly"))
        .args(args)
        .output()
        .expect("failed to run specpoly")
}

fn stdout(args: &[&str]) -> String {
    let out = specpoly(args);
    assert!(
        out.status.success(),
        "specpoly {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn prints_polynomials_in_paper_style() {
    assert_eq!(stdout(&["phi", "7"]).trim(), "7 - 14x + 7x^2 - x^3");
    assert_eq!(stdout(&["psi", "5"]).trim(), "-1 + x + x^2");
    assert_eq!(stdout(&["cyclo", "12"]).trim(), "1 - x^2 + x^4");
    assert_eq!(stdout(&["lucas", "4"]).trim(), "2 - 4x^2 + x^4");
    assert_eq!(stdout(&["spread", "4"]).trim(), "16x - 20x^2 + 8x^3 - x^4");
    assert_eq!(stdout(&["Phi", "6"]).trim(), "1 - 2x + x^2");
    assert_eq!(stdout(&["phi", "6"]).trim(), "1 - x");
}

#[test]
fn pretty_output_parses_back() {
    for args in [["phi", "30"], ["psi", "17"], ["cyclo", "105"], ["spread", "9"]] {
        let printed = stdout(&args);
        let parsed = specpoly::format::parse_poly(printed.trim()).unwrap();
        assert_eq!(parsed.to_string(), printed.trim());
    }
}

#[test]
fn json_output_round_trips() {
    let text = stdout(&["phi", "5", "--format", "json"]);
    let (n, poly) = specpoly::format::poly_from_json(text.trim()).unwrap();
    assert_eq!(n, 5);
    assert_eq!(poly, specpoly::minpoly::phi_min(5));
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&["eval", "phi", "5", "0"]).trim(), "5");
    assert_eq!(stdout(&["eval", "phi", "8", "4"]).trim(), "2");
    assert_eq!(stdout(&["eval", "cyclo", "9", "1"]).trim(), "3");
    assert_eq!(stdout(&["eval", "lucas", "6", "-1"]).trim(), "2");
}

#[test]
fn w_prints_coordinates_and_integer() {
    let out = stdout(&["w", "12", "omega"]);
    assert!(out.contains("(-2, 0, 0, 0)") && out.trim().ends_with("= -2"), "{out}");
    let out = stdout(&["w", "2", "-1"]);
    assert!(out.contains("(0, 0, 0, 0)"), "{out}");
}

#[test]
fn verify_passes_and_exits_zero() {
    let out = specpoly(&["verify", "--theorem", "1", "--max", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("theorem 1: 98/98 passed"), "{text}");

    let out = specpoly(&["verify", "--max", "60", "--jobs", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn factorcheck_passes() {
    let out = specpoly(&["factorcheck", "--max", "60"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn table_csv_round_trips() {
    let csv = stdout(&["table", "--max", "23", "--format", "csv"]);
    let rows = specpoly::format::table_from_csv(&csv).unwrap();
    assert_eq!(rows, specpoly::theorems::value_table(23));
}

#[test]
fn table_pretty_marks_small_n() {
    let out = stdout(&["table", "--max", "5"]);
    assert!(out.contains("outside theorem range"), "{out}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["psi", "2"],
        &["cyclo", "0"],
        &["eval", "nope", "5", "0"],
        &["w", "9", "tau"],
        &["verify", "--theorem", "9"],
        &["phi", "not-a-number"],
    ] {
        let out = specpoly(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn spread_table_matches_periods() {
    let out = stdout(&["spread-table", "--max", "6"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[1], "0 0 0 0 0 0");
    assert_eq!(lines[4], "3 0 4 2 0 4");
    assert_eq!(lines[7], "6 0 0 4 0 0");
}

#[test]
fn oracle_reports_small_deviation() {
    let out = stdout(&["oracle", "7"]);
    assert!(out.contains("max relative deviation"), "{out}");
}
