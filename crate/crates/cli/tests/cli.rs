//! End-to-end checks of the `tablecli` binary: flag handling, formats, exit
//! codes, and output determinism.

use std::process::{Command, Output};

use tablecli::render::parse_bfile;
use treecount::series::EgfSeries;
use treecount::ExactRatio;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tablecli"))
        .args(args)
        .env_remove("TABLECLI_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("no signal")
}

#[test]
fn trees_single_row_csv() {
    assert_eq!(stdout(&["trees", "--m", "1", "--n-max", "5"]), "1,1,1,1,1\n");
    assert_eq!(
        stdout(&["trees", "--m", "2", "--n-max", "6", "--format", "csv"]),
        "1,1,2,5,16,61\n"
    );
}

#[test]
fn trees_bfile_row() {
    let text = stdout(&["trees", "--m", "2", "--n-max", "10", "--format", "bfile"]);
    assert!(text.starts_with("1 1\n2 1\n3 2\n4 5\n"));
    assert!(text.ends_with("10 50521\n"));
    let parsed = parse_bfile(&text).unwrap();
    assert_eq!(parsed.len(), 10);
    assert_eq!(parsed[9].1.to_string(), "50521");
}

#[test]
fn trees_matrix_paper_layout_blanks() {
    let text = stdout(&[
        "trees",
        "--m-max",
        "3",
        "--n-max",
        "4",
        "--paper-layout",
        "--format",
        "csv",
    ]);
    assert_eq!(text, "1,1,1\n,2,5\n,,6\n");
}

#[test]
fn chromatic_defaults_to_minus_one() {
    assert_eq!(
        stdout(&["chromatic", "--m", "1", "--n-max", "4"]),
        "-1,2,-6,24\n"
    );
    assert_eq!(
        stdout(&["chromatic", "--m", "1", "--n-max", "4", "--lambda", "3"]),
        "3,6,6,0\n"
    );
    assert_eq!(
        stdout(&["chromatic", "--m", "2", "--n-max", "3", "--lambda", "0"]),
        "0,0,0\n"
    );
    assert_eq!(
        stdout(&["chromatic", "--m", "2", "--n-max", "3", "--lambda", "2"]),
        "2,4,6\n"
    );
}

#[test]
fn gessel_rows_and_bfile() {
    assert_eq!(
        stdout(&["gessel", "--m", "1", "--n-max", "5"]),
        "1,1,2,6,24,120\n"
    );
    let text = stdout(&["gessel", "--m", "2", "--n-max", "3", "--format", "bfile"]);
    assert_eq!(text, "0 1\n1 1\n2 1\n3 1\n");
}

#[test]
fn gessel_entry_matches_signed_chromatic_row() {
    // (-1)^7 chi_5(K_7, -1) = 14
    let text = stdout(&["gessel", "--m", "3", "--n-max", "7"]);
    assert_eq!(text, "1,1,1,1,1,1,2,14\n");
}

#[test]
fn bell_subcommand_prints_one_value() {
    assert_eq!(stdout(&["bell", "--n", "4", "--k", "2", "--args", "ones:2"]), "3\n");
    assert_eq!(
        stdout(&["bell", "--n", "3", "--k", "2", "--args", "1,1,1"]),
        "3\n"
    );
    assert_eq!(
        stdout(&["bell", "--n", "2", "--k", "1", "--args", "1/3,-2/5"]),
        "-2/5\n"
    );
}

#[test]
fn series_operations() {
    assert_eq!(
        stdout(&["series", "--op", "recip", "--coeffs", "1,-1", "--order", "5"]),
        "1,1,2,6,24,120\n"
    );
    assert_eq!(
        stdout(&["series", "--op", "compinv", "--coeffs", "0,1,1,1,1", "--order", "4"]),
        "0,1,-1,2,-6\n"
    );
    assert_eq!(
        stdout(&["series", "--op", "integrate", "--coeffs", "1,0,0"]),
        "0,1,0,0\n"
    );
    assert_eq!(
        stdout(&["series", "--op", "derive", "--coeffs", "0,1,0"]),
        "1,0\n"
    );
    assert_eq!(
        stdout(&[
            "series", "--op", "compose", "--coeffs", "0,1,-1", "--inner", "0,1",
        ]),
        "0,1,-1\n"
    );
}

#[test]
fn series_dump_form_round_trips() {
    let text = stdout(&[
        "series",
        "--op",
        "recip",
        "--coeffs",
        "2,1",
        "--order",
        "3",
        "--dump-series",
    ]);
    assert!(text.starts_with("order 3\n1/2\n"));
    let parsed = EgfSeries::<ExactRatio>::from_text(&text).unwrap();
    assert_eq!(parsed.order(), 3);
}

#[test]
fn env_var_sets_default_format() {
    let out = Command::new(env!("CARGO_BIN_EXE_tablecli"))
        .args(["trees", "--m", "1", "--n-max", "3"])
        .env("TABLECLI_FORMAT", "markdown")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("| m\\n | 1 | 2 | 3 |\n"), "got: {text}");
}

#[test]
fn latex_format() {
    let text = stdout(&["chromatic", "--m", "1", "--n-max", "2", "--format", "latex"]);
    assert_eq!(
        text,
        "\\begin{tabular}{c|rr}\n$m \\backslash n$ & 1 & 2 \\\\\n\\hline\n1 & -1 & 2 \\\\\n\\end{tabular}\n"
    );
}

#[test]
fn oracle_checks_pass() {
    assert_eq!(
        exit_code(&["trees", "--m-max", "4", "--n-max", "8", "--oracle-check"]),
        0
    );
    assert_eq!(
        exit_code(&[
            "chromatic", "--m-max", "3", "--n-max", "5", "--lambda", "3", "--oracle-check",
        ]),
        0
    );
    assert_eq!(
        exit_code(&["gessel", "--m", "3", "--n-max", "10", "--oracle-check"]),
        0
    );
}

#[test]
fn usage_errors_exit_two() {
    // bad rational literal
    assert_eq!(exit_code(&["bell", "--n", "2", "--k", "1", "--args", "1,x"]), 2);
    assert_eq!(
        exit_code(&["series", "--op", "recip", "--coeffs", "1/0"]),
        2
    );
    // both or neither of --m / --m-max (rejected by the parser)
    assert_eq!(exit_code(&["trees", "--n-max", "5"]), 2);
    assert_eq!(
        exit_code(&["trees", "--m", "2", "--m-max", "3", "--n-max", "5"]),
        2
    );
    // b-file needs a single sequence
    assert_eq!(
        exit_code(&["trees", "--m-max", "3", "--n-max", "5", "--format", "bfile"]),
        2
    );
    // zero bounds
    assert_eq!(exit_code(&["trees", "--m", "2", "--n-max", "0"]), 2);
    assert_eq!(exit_code(&["gessel", "--m", "0", "--n-max", "3"]), 2);
    // domain errors surface as usage errors
    assert_eq!(
        exit_code(&["series", "--op", "recip", "--coeffs", "0,1"]),
        2
    );
    assert_eq!(
        exit_code(&["series", "--op", "compose", "--coeffs", "0,1"]),
        2
    );
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = [
        "trees",
        "--m-max",
        "6",
        "--n-max",
        "9",
        "--paper-layout",
        "--format",
        "markdown",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
