//! Runs the built binary and checks printed output and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const HAMMING: &str = "\
# [7,4] Hamming code
linear 2 4 7
1 0 0 0 0 1 1
0 1 0 0 1 0 1
0 0 1 0 1 1 0
0 0 0 1 1 1 1
";

fn uedetect(args: &[&str]) -> (i32, String, String) {
    let Output {
        status,
        stdout,
        stderr,
    } = Command::new(env!("CARGO_BIN_EXE_uedetect"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        status.code().expect("exit code"),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

fn write_file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Value printed after `label = ` on its own line.
fn field(out: &str, label: &str) -> f64 {
    let prefix = format!("{label} = ");
    out.lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap_or_else(|| panic!("no {label} in\n{out}"))
        .parse()
        .unwrap()
}

#[test]
fn mu_large_distance_table() {
    let (code, out, _) = uedetect(&["mu", "--q", "2", "--d", "1000", "--k", "2", "--terms", "4"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "mu"), 2075.8565430);
    assert_eq!(field(&out, "p_m"), 0.035254023181);
    assert!(out.contains("large-distance series"));
    for v in [
        "2000.0000000",
        "2074.4659482",
        "2075.8522426",
        "2075.8565439",
    ] {
        assert!(out.contains(v), "{v} missing from\n{out}");
    }
}

#[test]
fn mu_nonlinear_example() {
    let (code, out, _) = uedetect(&["mu", "--q", "2", "--d", "2", "--k", "1000", "--nonlinear"]);
    assert_eq!(code, 0);
    assert!((field(&out, "mu_N") - 2022.85).abs() <= 0.01, "{out}");
}

#[test]
fn mu_small_case_matches_grid_scan() {
    let (code, out, _) = uedetect(&["mu", "--q", "2", "--d", "1", "--k", "1"]);
    assert_eq!(code, 0);
    // independent scan of h(p) = (ln(1-2p) - ln 2)/ln(1-p) at resolution 1e-6
    let grid = (1..500_000)
        .map(|j| j as f64 * 1e-6)
        .map(|p: f64| ((-2.0 * p).ln_1p() - 2f64.ln()) / (-p).ln_1p())
        .fold(f64::INFINITY, f64::min);
    let mu = field(&out, "mu");
    assert!(mu > 2.0);
    assert!((mu - grid).abs() <= 1e-5, "mu {mu} grid {grid}");
}

#[test]
fn mu_regime_override_and_limits() {
    let (code, out, _) = uedetect(&[
        "mu", "--q", "2", "--d", "1000", "--k", "2", "--terms", "2", "--regime", "kd",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("large-dimension series"), "{out}");
    let (code, _, err) = uedetect(&["mu", "--q", "2", "--d", "3", "--k", "2", "--terms", "9"]);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = uedetect(&["mu", "--q", "1", "--d", "3", "--k", "2"]);
    assert_eq!(code, 2);
    let (code, _, _) = uedetect(&["mu", "--q", "2", "--d", "3"]);
    assert_eq!(code, 2);
    let (code, _, _) = uedetect(&["mu", "--q", "2", "--d", "3", "--k", "2", "--regime", "xy"]);
    assert_eq!(code, 2);
}

#[test]
fn analyze_hamming_with_csv() {
    let dir = TempDir::new().unwrap();
    let path = write_file(&dir, "hamming.txt", HAMMING);
    let csv_path = dir.path().join("curve.csv");
    let (code, out, err) = uedetect(&[
        "analyze",
        "--code",
        s(&path),
        "--grid",
        "256",
        "--csv",
        s(&csv_path),
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("d = 3"));
    assert!(out.contains("A = 1 0 0 7 7 0 0 1"));
    assert!(out.contains("verdict C:  good"), "{out}");
    assert!(out.contains("verdict C⊥: good"), "{out}");
    assert!(out.contains("n >= mu: no"));

    let text = std::fs::read_to_string(&csv_path).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p,pue,pue_perp,good_bound,bad_bound"));
    let ps: Vec<f64> = lines
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(ps.len(), 256);
    assert!(ps.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn analyze_e1_generator_is_bad() {
    let dir = TempDir::new().unwrap();
    let path = write_file(&dir, "e1.txt", "linear 2 1 10\n1 0 0 0 0 0 0 0 0 0\n");
    let (code, out, _) = uedetect(&["analyze", "--code", s(&path)]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict C:  bad"), "{out}");
    // d = 1, k = 1: every code longer than the threshold is bad
    assert!(out.contains("n >= mu: yes"), "{out}");
}

#[test]
fn analyze_nonlinear_distance_distribution() {
    let dir = TempDir::new().unwrap();
    let path = write_file(&dir, "rep.txt", "nonlinear 2 3 2\n0 0 0\n1 1 1\n");
    let (code, out, _) = uedetect(&["analyze", "--code", s(&path)]);
    assert_eq!(code, 0);
    assert!(out.contains("M = 2"));
    assert!(out.contains("A = 1 0 0 1"));
    assert!(!out.contains("C⊥"));
    assert!(out.contains("mu_N"));
}

#[test]
fn analyze_input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.txt");
    let (code, _, err) = uedetect(&["analyze", "--code", s(&missing)]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot read"));

    let path = write_file(&dir, "bad.txt", "linear 2 1 3\n1 0 7\n");
    let (code, _, err) = uedetect(&["analyze", "--code", s(&path)]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");

    // 3^16 codewords exceed the enumeration cap
    let mut big = String::from("linear 3 16 16\n");
    for i in 0..16 {
        let row: Vec<&str> = (0..16).map(|j| if i == j { "1" } else { "0" }).collect();
        big.push_str(&row.join(" "));
        big.push('\n');
    }
    let path = write_file(&dir, "big.txt", &big);
    let (code, _, err) = uedetect(&["analyze", "--code", s(&path)]);
    assert_eq!(code, 2);
    assert!(err.contains("16777216"), "{err}");
}

#[test]
fn dual_check_passes_on_valid_codes() {
    let dir = TempDir::new().unwrap();
    for (name, text) in [
        ("hamming.txt", HAMMING),
        ("rep.txt", "linear 2 1 3\n1 1 1\n"),
    ] {
        let path = write_file(&dir, name, text);
        let (code, out, err) = uedetect(&["dual-check", "--code", s(&path)]);
        assert_eq!(code, 0, "{name}: {out}{err}");
        assert!(out.contains("64 samples, seed 0"));
        let residual: f64 = out
            .lines()
            .find_map(|l| l.strip_prefix("max identity residual"))
            .and_then(|l| l.trim_start().strip_prefix("= "))
            .unwrap()
            .parse()
            .unwrap();
        assert!(residual <= 1e-13, "{name}: {residual}");
    }
}

#[test]
fn dual_check_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let path = write_file(&dir, "hamming.txt", HAMMING);
    let args = [
        "dual-check",
        "--code",
        s(&path),
        "--samples",
        "16",
        "--seed",
        "9",
    ];
    assert_eq!(uedetect(&args), uedetect(&args));
}

#[test]
fn dual_check_rejects_bad_input() {
    let dir = TempDir::new().unwrap();
    let path = write_file(&dir, "deficient.txt", "linear 2 2 3\n1 1 0\n1 1 0\n");
    let (code, _, err) = uedetect(&["dual-check", "--code", s(&path)]);
    assert_eq!(code, 2);
    assert!(err.contains("rank 1"), "{err}");
    let path = write_file(&dir, "nl.txt", "nonlinear 2 3 2\n0 0 0\n1 1 1\n");
    let (code, _, _) = uedetect(&["dual-check", "--code", s(&path)]);
    assert_eq!(code, 2);
}

#[test]
fn reproduce_examples() {
    for (example, expect) in [
        ("1", &["2075.8565430", "2074.4659482"][..]),
        ("2", &["1020.8737393", "1020.8169587"][..]),
        ("3", &["2075.86", "2108.10", "1020.87", "2022.85"][..]),
    ] {
        let (code, out, err) = uedetect(&["reproduce", "--example", example]);
        assert_eq!(code, 0, "example {example}: {out}{err}");
        assert!(!out.contains("FAIL"));
        for v in expect {
            assert!(out.contains(v), "example {example}: {v} missing\n{out}");
        }
    }
    let (code, _, _) = uedetect(&["reproduce", "--example", "4"]);
    assert_eq!(code, 2);
}
