use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

fn ybrace(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ybrace")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn fixtures() -> (TempDir, PathBuf) {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("fx");
    let (code, _, err) = ybrace(&["fixtures", "--out-dir", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    (dir, path)
}

fn p(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn validate_six_point() {
    let (_d, fx) = fixtures();
    let (code, out, _) = ybrace(&["validate", "--solution", &p(&fx, "six-point.sol")]);
    assert_eq!(code, 0);
    assert_eq!(out, "valid, square-free, n=6\n");
    let (code, out, _) = ybrace(&["validate", "--brace", &p(&fx, "sym3.brace")]);
    assert_eq!(code, 0);
    assert_eq!(out, "valid, left brace, n=6\n");
}

#[test]
fn mpl_reports() {
    let (_d, fx) = fixtures();
    let (code, out, _) = ybrace(&["mpl", "--brace", &p(&fx, "trivial8.brace"), "--via-solution"]);
    assert_eq!((code, out.as_str()), (0, "mpl = 1\n"));
    for brace in ["sym3.brace", "aug2.brace", "aug3.brace", "iyb-six-point.brace"] {
        let a = ybrace(&["mpl", "--brace", &p(&fx, brace)]);
        let b = ybrace(&["mpl", "--brace", &p(&fx, brace), "--via-solution"]);
        assert_eq!(a, b, "{brace}");
    }
    assert_eq!(ybrace(&["mpl", "--brace", &p(&fx, "sym3.brace")]).1, "mpl = 2\n");
    assert_eq!(ybrace(&["mpl", "--solution", &p(&fx, "six-point.sol")]).1, "mpl = 3\n");
}

#[test]
fn augbrace_levels() {
    for n in 1..=3 {
        let (code, out, _) = ybrace(&["augbrace", "-n", &n.to_string(), "--mpl"]);
        assert_eq!(code, 0);
        assert!(out.starts_with(&format!("mpl = {n}\n")), "{out}");
        assert!(out.contains("square-free = true"));
    }
    let (code, _, err) = ybrace(&["augbrace", "-n", "9", "--mpl"]);
    assert_eq!(code, 2, "{err}");
    let (code, out, _) = ybrace(&["augbrace", "-n", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("n 8\nadd\n"));
}

#[test]
fn sweep_passes() {
    let (code, out, _) = ybrace(&["sweep", "--theorem", "abelian-retractable", "--max-n", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("0 counterexamples"), "{out}");
    let (code, out, _) = ybrace(&["sweep", "--theorem", "retract-socle", "--max-n", "6", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["counterexamples"], 0);
    assert_eq!(ybrace(&["sweep", "--theorem", "bogus"]).0, 2);
}

#[test]
fn malformed_files_report_positions() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.sol", "n 2\nsigma\n0 1\n1 z\n");
    let (code, _, err) = ybrace(&["validate", "--solution", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("line 4, column 3"), "{err}");
    let (code, _, _) = ybrace(&["validate", "--solution", "/nonexistent/file.sol"]);
    assert_eq!(code, 2);
}

#[test]
fn invalid_objects_exit_one() {
    let dir = TempDir::new().unwrap();
    let not_solution = write(dir.path(), "x.sol", "n 2\nsigma\n0 1\n1 0\n");
    let (code, out, _) = ybrace(&["validate", "--solution", &not_solution]);
    assert_eq!(code, 1);
    assert!(out.starts_with("invalid: "), "{out}");
    let not_brace = write(dir.path(), "x.brace", "n 2\nadd\n0 1\n1 0\nmul\n0 1\n0 1\n");
    assert_eq!(ybrace(&["validate", "--brace", &not_brace]).0, 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ybrace(&["frobnicate"]).0, 2);
    assert_eq!(ybrace(&["validate"]).0, 2);
    assert_eq!(ybrace(&["enumerate", "-n", "7"]).0, 2);
    assert_eq!(ybrace(&["class2", "--group", "nonsense:3"]).0, 2);
    assert_eq!(ybrace(&["validate", "--format", "yaml"]).0, 2);
}

#[test]
fn conversions() {
    let (_d, fx) = fixtures();
    let (code, out, _) = ybrace(&["from-brace", "--brace", &p(&fx, "sym3.brace")]);
    assert_eq!(code, 0);
    assert_eq!(out, std::fs::read_to_string(fx.join("sym3.sol")).unwrap().replace("solution of the Sym3 brace", "solution of a left brace of order 6"));
    let (code, out, _) = ybrace(&["double-cover", "--brace", &p(&fx, "sym3.brace")]);
    assert_eq!(code, 0);
    assert!(out.contains("n 12\nsigma\n"));
    let (code, out, _) = ybrace(&["retract", "--solution", &p(&fx, "six-point.sol"), "--chain"]);
    assert_eq!(code, 0);
    assert_eq!(out, "sizes = 6 4 2 1\nmpl = 3\n");
    let (code, out, _) = ybrace(&["ybgroup", "--solution", &p(&fx, "six-point.sol")]);
    assert_eq!(code, 0);
    assert_eq!(out, "order = 6\nabelian = false\nnilpotency class = none\n");
    let (code, out, _) = ybrace(&["socle", "--brace", &p(&fx, "sym3.brace")]);
    assert_eq!(code, 0);
    assert_eq!(out, "socle = {0, 2, 4}\norder = 3\n");
    let (code, out, _) = ybrace(&["quotient", "--brace", &p(&fx, "sym3.brace"), "--socle"]);
    assert_eq!(code, 0);
    assert!(out.contains("n 2\n"));
    let (code, _, _) = ybrace(&["quotient", "--brace", &p(&fx, "sym3.brace"), "--ideal", "0,1"]);
    assert_eq!(code, 1);
    let (code, out, _) = ybrace(&["iyb-brace", "--solution", &p(&fx, "six-point.sol")]);
    assert_eq!(code, 0);
    let iyb = write(fx.as_path(), "iyb.brace", &out);
    assert_eq!(ybrace(&["validate", "--brace", &iyb]).1, "valid, left brace, n=6\n");
}

#[test]
fn products_and_constructions() {
    let (_d, fx) = fixtures();
    let (code, out, _) = ybrace(&["product", "--left", &p(&fx, "sym3.brace"), "--right", &p(&fx, "aug1.brace")]);
    assert_eq!(code, 0);
    assert!(out.contains("n 12\n"));
    let (code, out, _) = ybrace(&["product", "--left", &p(&fx, "aug1.brace"), "--right", &p(&fx, "aug1.brace"), "--kind", "wreath"]);
    assert_eq!(code, 0);
    assert!(out.contains("n 8\n"));
    let (code, out, _) = ybrace(&["class2", "--group", "heisenberg:2"]);
    assert_eq!(code, 0, "{out}");
    let (code, _, _) = ybrace(&["class2", "--group", "dihedral:4", "--center", "0,2", "--generators", "1,4"]);
    assert_eq!(code, 0);
    assert_eq!(ybrace(&["class2", "--group", "dihedral:8"]).0, 1);
    let (code, out, _) = ybrace(&["embed", "-p", "2", "--group", "quaternion"]);
    assert_eq!(code, 0);
    assert!(out.contains("injective = true"));
    assert_eq!(ybrace(&["embed", "-p", "2", "--group", "symmetric:3"]).0, 1);
}

#[test]
fn enumeration_counts() {
    let (code, out, _) = ybrace(&["enumerate", "-n", "4"]);
    assert_eq!((code, out.as_str()), (0, "count = 23\n"));
    assert_eq!(ybrace(&["enumerate", "-n", "3", "--raw"]).1, "count = 12\n");
    assert_eq!(ybrace(&["enumerate", "--group", "cyclic:4"]).1, "count = 2\n");
    assert_eq!(ybrace(&["enumerate", "--order", "4"]).1, "Z2xZ2: 2\nZ4: 2\ncount = 4\n");
    let (_, out, _) = ybrace(&["enumerate", "-n", "3", "--census"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[0].starts_with("n=3 id=0 sigma="));
    assert_eq!(lines[5], "count = 5");
}

#[test]
fn output_is_identical_across_job_counts() {
    for args in [&["enumerate", "-n", "5", "--census"][..], &["sweep", "--theorem", "all", "--max-n", "4"][..]] {
        let one = ybrace(&[args, &["--jobs", "1"]].concat());
        let three = ybrace(&[args, &["--jobs", "3"]].concat());
        assert_eq!(one.0, 0);
        assert_eq!(one, three);
        assert_eq!(ybrace(args), one);
    }
}

#[test]
fn json_mirrors_text() {
    let (_d, fx) = fixtures();
    let (_, out, _) = ybrace(&["validate", "--solution", &p(&fx, "six-point.sol"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["square_free"], true);
    assert_eq!(v["n"], 6);
    let (_, out, _) = ybrace(&["augbrace", "-n", "2", "--mpl", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["mpl"], 2);
}

#[test]
fn output_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("six.sol");
    let (code, out, _) = ybrace(&["fixtures", "--name", "six-point", "-o", target.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(ybrace(&["validate", "--solution", target.to_str().unwrap()]).1, "valid, square-free, n=6\n");
}

#[test]
fn selftest_modes() {
    for cmd in ["validate", "mpl", "socle", "augbrace", "enumerate", "from-brace"] {
        let (code, out, _) = ybrace(&[cmd, "--selftest"]);
        assert_eq!(code, 0, "{cmd}: {out}");
        assert!(out.ends_with(", 0 failed\n"), "{out}");
    }
}
