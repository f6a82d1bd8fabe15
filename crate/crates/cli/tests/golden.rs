//! Golden-file tests for the `polycenter` binary.
//!
//! Each case runs the binary inside `tests/golden/` and compares the exit
//! code, stdout and stderr against `tests/golden/<case>.out`, whose first
//! line records the arguments as a JSON array. Set
//! `POLYCENTER_BLESS=1` to rewrite the expected files.

use std::path::{Path, PathBuf};
use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_polycenter");

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(BIN)
        .args(args)
        .current_dir(golden_dir())
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

fn transcript(args: &[&str], r: &Run) -> String {
    let argv = serde_json::to_string(args).unwrap();
    format!(
        "args: {argv}\nexit: {}\n--- stdout\n{}--- stderr\n{}",
        r.code, r.stdout, r.stderr
    )
}

fn check(case: &str, args: &[&str], expected_code: i32) {
    let r = run(args);
    assert_eq!(r.code, expected_code, "{case}: stderr was\n{}", r.stderr);
    let actual = transcript(args, &r);
    let path = golden_dir().join(format!("{case}.out"));
    if std::env::var_os("POLYCENTER_BLESS").is_some() {
        std::fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "{case} differs from {}", path.display());
}

#[test]
fn center_square_centroid() {
    check(
        "center_square_centroid",
        &["center", "square.json", "--name", "centroid"],
        0,
    );
}

#[test]
fn center_tri345_several() {
    check(
        "center_tri345",
        &[
            "center",
            "tri345.json",
            "--name",
            "perimeter,lamina,circumcenter,median,chebyshev",
        ],
        0,
    );
}

#[test]
fn center_trapezoid_lamina() {
    check(
        "center_trapezoid",
        &[
            "center",
            "trapezoid.json",
            "--name",
            "lamina,centroid",
            "--precision",
            "6",
        ],
        0,
    );
}

#[test]
fn center_from_distances() {
    check(
        "center_pentagon_distances",
        &["center", "pentagon_distances.json", "--name", "centroid,perimeter"],
        0,
    );
}

#[test]
fn center_expression() {
    check(
        "center_expr",
        &["center", "tri345.json", "--expr", "d(n,1) + d(1,2)"],
        0,
    );
}

#[test]
fn coords_perimeter() {
    check(
        "coords_tri345",
        &["coords", "tri345.json", "--name", "perimeter,circumcenter"],
        0,
    );
}

#[test]
fn check_axioms_catalog() {
    check(
        "check_axioms_lamina",
        &[
            "check-axioms",
            "--name",
            "lamina",
            "--n",
            "6",
            "--trials",
            "100",
            "--seed",
            "3",
        ],
        0,
    );
}

#[test]
fn check_axioms_minimal() {
    check(
        "check_axioms_median",
        &[
            "check-axioms",
            "--name",
            "median",
            "--n",
            "5",
            "--trials",
            "10",
            "--seed",
            "1",
        ],
        0,
    );
}

#[test]
fn characterize_mountain() {
    check("characterize_mountain", &["characterize", "mountain.json"], 0);
}

#[test]
fn characterize_rhombus_with_tolerance() {
    check(
        "characterize_rhombus",
        &["characterize", "rhombus.json", "--tol", "1e-6"],
        0,
    );
}

#[test]
fn reconstruct_pentagon() {
    check("reconstruct_pentagon", &["reconstruct", "pentagon_distances.json"], 0);
}

#[test]
fn plot_to_stdout() {
    check(
        "plot_square",
        &["plot", "square.json", "--centers", "centroid,median"],
        0,
    );
}

#[test]
fn plot_outline_only() {
    check("plot_mountain", &["plot", "mountain.json"], 0);
}

// exit code 2: input and parse errors

#[test]
fn both_geometries_rejected() {
    check("err_both", &["center", "both.json", "--name", "centroid"], 2);
}

#[test]
fn schema_path_diagnostic() {
    check(
        "err_bad_number",
        &["center", "bad_number.json", "--name", "centroid"],
        2,
    );
}

#[test]
fn malformed_json() {
    check("err_malformed", &["coords", "malformed.json", "--name", "centroid"], 2);
}

#[test]
fn missing_file() {
    let r = run(&["center", "no_such_file.json", "--name", "centroid"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("error: no_such_file.json: "), "{}", r.stderr);
}

#[test]
fn expression_syntax_error() {
    check("err_expr_syntax", &["center", "square.json", "--expr", "d(1,"], 2);
}

#[test]
fn expression_index_error() {
    check("err_expr_index", &["check-axioms", "--expr", "d(2,2)", "--n", "4"], 2);
}

#[test]
fn unknown_center() {
    check(
        "err_unknown_center",
        &["center", "square.json", "--name", "centroid,foo"],
        2,
    );
}

#[test]
fn reconstruct_needs_distances() {
    check("err_reconstruct_vertices", &["reconstruct", "square.json"], 2);
}

#[test]
fn bad_flags_exit_2() {
    assert_eq!(run(&["center", "square.json"]).code, 2);
    assert_eq!(
        run(&["center", "square.json", "--name", "centroid", "--expr", "1"]).code,
        2
    );
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(
        run(&["center", "square.json", "--name", "centroid", "--precision", "0"]).code,
        2
    );
    assert_eq!(run(&["characterize", "square.json", "--tol", "-1"]).code, 2);
}

// exit code 3: domain violations

#[test]
fn medoid_tie() {
    check("err_medoid_tie", &["center", "square.json", "--name", "medoid"], 3);
}

#[test]
fn circumcenter_needs_triangle() {
    check(
        "err_circumcenter_square",
        &["center", "square.json", "--name", "circumcenter"],
        3,
    );
}

#[test]
fn infeasible_distances() {
    check("err_tetrahedron", &["reconstruct", "tetrahedron.json"], 3);
}

#[test]
fn expression_fails_axioms() {
    check(
        "err_axioms_d12",
        &[
            "check-axioms",
            "--expr",
            "d(1,2)",
            "--n",
            "3",
            "--trials",
            "20",
            "--seed",
            "5",
        ],
        3,
    );
}

#[test]
fn expression_rejected_before_evaluation() {
    check(
        "err_center_expr_rejected",
        &["center", "tri345.json", "--expr", "d(1,2)"],
        3,
    );
}

#[test]
fn implicit_center_has_no_coords() {
    check("err_coords_median", &["coords", "tri345.json", "--name", "median"], 3);
}

// exit code 4: undefined coordinate map

#[test]
fn all_zero_coordinates() {
    check(
        "err_all_zero",
        &["center", "rhombus.json", "--expr", "abs(d(n,1) - d(1,2))"],
        4,
    );
}

// exit code 5: non-convergence

#[test]
fn median_iteration_cap() {
    check(
        "err_median_no_convergence",
        &["center", "tri345.json", "--name", "median", "--max-iter", "1"],
        5,
    );
}

#[test]
fn plot_file_is_byte_identical_across_runs() {
    let dir = std::env::temp_dir().join(format!("polycenter-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut outputs = Vec::new();
    for k in 0..3 {
        let path = dir.join(format!("run{k}.svg"));
        let p = path.to_str().unwrap();
        let r = run(&[
            "plot",
            "tri345.json",
            "--centers",
            "centroid,perimeter,circumcenter,median,chebyshev",
            "-o",
            p,
        ]);
        assert_eq!(r.code, 0, "{}", r.stderr);
        assert!(r.stdout.is_empty());
        outputs.push(std::fs::read(&path).unwrap());
    }
    std::fs::remove_dir_all(&dir).unwrap();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
    let expected = std::fs::read(golden_dir().join("plot_tri345.svg")).unwrap();
    assert_eq!(outputs[0], expected);
}

#[test]
fn stdout_is_deterministic() {
    let args = [
        "check-axioms",
        "--name",
        "perimeter,centroid",
        "--n",
        "7",
        "--trials",
        "50",
        "--seed",
        "11",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
}
