//! Helpers for tests that drive the `termflux` binary.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const FIXTURES: [&str; 3] = ["trend", "chrono", "census"];

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn termflux(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_termflux")).args(args).output().expect("termflux runs")
}

/// Runs `args`, failing with stderr on a nonzero exit, and returns stdout.
pub fn stdout_of(args: &[&str]) -> Vec<u8> {
    let out = termflux(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

/// Every subcommand except `serve`, on one fixture, writing side files
/// under `dir`. Returns the stdout and side files of each run.
pub fn run_all(name: &str, dir: &Path) -> Vec<(String, Vec<u8>)> {
    let fx = fixture(name);
    let manifest = fx.join("manifest.json").display().to_string();
    let terms = fx.join("terms.txt").display().to_string();
    let occurrences = dir.join("occurrences.jsonl").display().to_string();
    let side = |f: &str| dir.join(f).display().to_string();
    let mut outputs = Vec::new();

    stdout_of(&["scan", "--corpus", &manifest, "--terms", &terms, "--out", &occurrences]);
    outputs.push(("scan".to_owned(), std::fs::read(&occurrences).unwrap()));

    let runs: Vec<(&str, Vec<String>, Vec<String>)> = vec![
        (
            "ana-stats",
            vec![
                "ana-stats".into(),
                "--corpus".into(),
                manifest.clone(),
                "--occurrences".into(),
                occurrences.clone(),
                "--presence-out".into(),
                side("presence.csv"),
                "--lowess-out".into(),
                side("lowess.csv"),
                "--lowess-frac".into(),
                "0.8".into(),
            ],
            vec![side("presence.csv"), side("lowess.csv")],
        ),
        (
            "ana-stats json",
            vec![
                "ana-stats".into(),
                "--corpus".into(),
                manifest.clone(),
                "--terms".into(),
                terms.clone(),
                "--format".into(),
                "json".into(),
            ],
            vec![],
        ),
        (
            "chrono-stats",
            vec![
                "chrono-stats".into(),
                "--corpus".into(),
                manifest.clone(),
                "--occurrences".into(),
                occurrences.clone(),
                "--N".into(),
                "3".into(),
                "--density-out".into(),
                side("density.csv"),
            ],
            vec![side("density.csv")],
        ),
        ("lattice", vec!["lattice".into(), "--terms".into(), terms.clone(), "--expansion-only".into()], vec![]),
        (
            "classify",
            vec!["classify".into(), "--corpus".into(), manifest.clone(), "--occurrences".into(), occurrences.clone()],
            vec![],
        ),
        ("census", vec!["census".into(), "--corpus".into(), manifest.clone(), "--terms".into(), terms.clone()], vec![]),
        ("export", vec!["export".into(), "--corpus".into(), manifest.clone()], vec![]),
    ];
    for (label, args, files) in runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        outputs.push((label.to_owned(), stdout_of(&args)));
        for f in files {
            outputs.push((format!("{label} {f}"), std::fs::read(&f).unwrap()));
        }
    }
    outputs
}
