//! End-to-end checks of the installed binary: exit codes and artifacts.

use std::process::Command;

use plof::thompson::{f0, f1};
use plof_cli::mapfile::MapFile;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_plof"))
}

fn standard_file(dir: &std::path::Path) -> std::path::PathBuf {
    let path = dir.join("maps.json");
    let text = MapFile::from_named(&[("f0".into(), f0()), ("f1".into(), f1())]).serialize();
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn analyze_and_verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let input = standard_file(dir.path());

    let out = bin().arg("analyze").arg(&input).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("type (2,1) pure"));

    let out = bin()
        .args(["verify"])
        .arg(&input)
        .args(["f0", "f1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = bin()
        .args(["verify"])
        .arg(&input)
        .args(["f0", "f0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(6));

    let missing = dir.path().join("missing.json");
    let out = bin().arg("analyze").arg(&missing).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn word_eq_exit_codes() {
    let run = |u: &str, v: &str| {
        bin()
            .args(["word-eq", u, v])
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("g0^-1 g1 g0", "g2"), Some(0));
    assert_eq!(run("g0 g1", "g1 g0"), Some(1));
    assert_eq!(run("g0^", "g0"), Some(2));
}

#[test]
fn extract_writes_a_trace_and_render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let input = standard_file(dir.path());

    let trace_path = dir.path().join("trace.json");
    let out = bin()
        .arg("extract")
        .arg(&input)
        .args(["--witness", "g1", "--out"])
        .arg(&trace_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
    let trace = std::fs::read_to_string(&trace_path).unwrap();
    assert!(trace.contains("\"verdict\": \"IsomorphicToF\""));

    let svg_path = dir.path().join("maps.svg");
    let out = bin()
        .arg("render")
        .arg(&input)
        .args(["f0", "f1", "--size", "400x300", "--out"])
        .arg(&svg_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"));

    // a hypothesis failure exits 4
    let alone = dir.path().join("alone.json");
    std::fs::write(
        &alone,
        MapFile::from_named(&[("f0".into(), f0())]).serialize(),
    )
    .unwrap();
    let out = bin().arg("extract").arg(&alone).output().unwrap();
    assert_eq!(out.status.code(), Some(4));

    // an exhausted search exits 5
    let out = bin()
        .arg("extract")
        .arg(&input)
        .args(["--witness", "g1", "--depth", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));
}
