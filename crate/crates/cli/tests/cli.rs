use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_annuli"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

const CORNERS: &str = "0,0\n1,0\n1,1\n0,1\n";
const CORNERS_CENTER: &str = "# unit square corners and its center\n0,0\n1,0\n1,1\n0,1\n0.5,0.5\n";

fn run(args: &[&str], input: &Path) -> Output {
    bin().args(args).arg("--input").arg(input).output().unwrap()
}

fn report(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn square_width_at_zero() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "cc.csv", CORNERS_CENTER);
    let out = run(&["--shape", "square", "--objective", "width", "--orientation", "fixed:0"], &input);
    assert_eq!(report(&out)["width"], 0.5);
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"width\": 5.0000000000000000e-1"));
}

#[test]
fn rect_area_of_corners_is_zero() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "c.csv", CORNERS);
    let out = run(&["--shape", "rect", "--objective", "area", "--orientation", "fixed:0"], &input);
    assert_eq!(report(&out)["area"], 0.0);
}

#[test]
fn empty_square_matches_reference_scan() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "cc.csv", CORNERS_CENTER);
    let out = run(&["--shape", "empty-square", "--orientation", "any", "--oracle"], &input);
    let r = report(&out);
    let side = r["side"].as_f64().unwrap();
    let reference = r["oracle"]["side"].as_f64().unwrap();
    let step = r["oracle"]["step"].as_f64().unwrap();
    let lip = 2.0 * 2f64.sqrt();
    assert!(side >= reference - 1e-9 && side <= reference + lip * step, "{side} vs {reference}");
}

#[test]
fn fields_appear_in_schema_order() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "cc.csv", CORNERS_CENTER);
    let out = run(&["--shape", "rect", "--objective", "area-width", "--oracle"], &input);
    let json = String::from_utf8(out.stdout.clone()).unwrap();
    let keys = [
        "\"spec\"",
        "\"n\"",
        "\"theta_star\"",
        "\"width\"",
        "\"area\"",
        "\"side\"",
        "\"outer\"",
        "\"inner\"",
        "\"supports\"",
        "\"diagnostics\"",
        "\"pairs_T\"",
        "\"oracle\": {",
        "\"version\"",
    ];
    let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap_or_else(|| panic!("{k} missing"))).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{json}");
    let r = report(&out);
    assert_eq!(r["n"], 5);
    assert_eq!(r["outer"]["corners"].as_array().unwrap().len(), 4);
    assert_eq!(r["spec"]["objective"], "area-width");
}

#[test]
fn reports_are_byte_identical_across_runs_and_threads() {
    let dir = TempDir::new().unwrap();
    let out_a = dir.path().join("a.json");
    let out_b = dir.path().join("b.json");
    for (path, threads) in [(&out_a, "1"), (&out_b, "4")] {
        let st = bin()
            .args(["--shape", "square", "--objective", "area", "--random", "25", "--seed", "9", "--threads", threads])
            .arg("--output")
            .arg(path)
            .status()
            .unwrap();
        assert!(st.success());
    }
    assert_eq!(fs::read(&out_a).unwrap(), fs::read(&out_b).unwrap());
}

#[test]
fn svg_shows_every_point() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "cc.csv", CORNERS_CENTER);
    let svg = dir.path().join("fig.svg");
    let out = bin()
        .args(["--shape", "urect", "--objective", "width", "--orientation", "fixed:0.3"])
        .arg("--input")
        .arg(&input)
        .arg("--svg")
        .arg(&svg)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("<circle").count(), 5);
    assert!(text.contains("fill-rule=\"evenodd\""));
}

#[test]
fn duplicates_are_dropped_and_counted() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "d.csv", "0,0\n1,0\n0,0\n1,1\n");
    let out = run(&["--shape", "urect", "--objective", "area"], &input);
    let r = report(&out);
    assert_eq!(r["n"], 3);
    assert_eq!(r["diagnostics"]["duplicates_removed"], 1);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    for (name, text) in [("bad.csv", "0,0\n1;2\n"), ("nan.csv", "0,0\nNaN,1\n"), ("empty.csv", "# nothing\n")] {
        let input = write(&dir, name, text);
        let out = run(&["--shape", "square", "--objective", "width"], &input);
        assert_eq!(out.status.code(), Some(2), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let out = run(&["--shape", "square", "--objective", "width"], &dir.path().join("missing.csv"));
    assert_eq!(out.status.code(), Some(2));
    let input = write(&dir, "bad.csv", "0,0\n1;2\n");
    let out = run(&["--shape", "square", "--objective", "width"], &input);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn unsupported_combinations_exit_with_three() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "c.csv", CORNERS);
    for (shape, obj) in [("square", "largest"), ("empty-rect", "width"), ("urect", "largest")] {
        let out = run(&["--shape", shape, "--objective", obj], &input);
        assert_eq!(out.status.code(), Some(3), "{shape} {obj}");
    }
}

#[test]
fn every_supported_entry_runs() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "cc.csv", "0,0\n3,0.5\n2.5,2\n0.2,1.7\n1.1,0.9\n");
    let annuli = ["width", "area", "area-width", "width-area"];
    let mut count = 0;
    for orientation in ["any", "fixed:0.4"] {
        for shape in ["square", "urect", "rect"] {
            for obj in annuli {
                let out = run(&["--shape", shape, "--objective", obj, "--orientation", orientation], &input);
                assert!(out.status.success(), "{shape} {obj} {orientation}");
                count += 1;
            }
        }
        for shape in ["empty-rect", "empty-square"] {
            let out = run(&["--shape", shape, "--orientation", orientation], &input);
            assert!(out.status.success(), "{shape} {orientation}");
            count += 1;
        }
    }
    assert_eq!(count, 28);
}
