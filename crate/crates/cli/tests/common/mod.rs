#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn data(name: &str) -> String {
    workspace_root()
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Runs the binary from the workspace root so relative data paths resolve.
pub fn kmeasure(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmeasure"))
        .current_dir(workspace_root())
        .args(args)
        .output()
        .expect("binary runs")
}

/// Snapshot name and arguments for every documented golden command.
pub const GOLDEN: &[(&str, &[&str])] = &[
    (
        "measure_rankings",
        &["measure", "--rankings", "data/experts.rk"],
    ),
    (
        "measure_rankings_json",
        &[
            "measure",
            "--rankings",
            "data/experts.rk",
            "--format",
            "json",
        ],
    ),
    (
        "measure_eggs",
        &["measure", "--partitions", "data/eggs.csv"],
    ),
    (
        "measure_eggs_john",
        &[
            "measure",
            "--partitions",
            "data/eggs.csv",
            "--rater",
            "John",
        ],
    ),
    (
        "measure_eggs_tolerance",
        &[
            "measure",
            "--partitions",
            "data/eggs.csv",
            "--tolerance",
            "0.3",
        ],
    ),
    (
        "entropy_rankings",
        &["entropy", "--rankings", "data/experts.rk"],
    ),
    (
        "entropy_extremes",
        &["entropy", "--rankings", "data/extremes.rk"],
    ),
    ("rank_rankings", &["rank", "--rankings", "data/experts.rk"]),
    (
        "rank_eggs_json",
        &["rank", "--partitions", "data/eggs.csv", "--format", "json"],
    ),
    (
        "pair_alan_barbara",
        &[
            "additivity",
            "pair",
            "--n",
            "3",
            "--k",
            "0.53503",
            "--k",
            "1.0",
        ],
    ),
    (
        "pair_zero",
        &["additivity", "pair", "--n", "5", "--k", "0", "--k", "0"],
    ),
    (
        "pair_zero_json",
        &[
            "additivity",
            "pair",
            "--n",
            "5",
            "--k",
            "0",
            "--k",
            "0",
            "--format",
            "json",
        ],
    ),
    (
        "decompose_cassie",
        &[
            "additivity",
            "decompose",
            "--class",
            "x1",
            "--class",
            "x2,x3",
            "--class",
            "x4",
            "--block",
            "x1,x4",
            "--block",
            "x2,x3",
        ],
    ),
    (
        "decompose_cassie_json",
        &[
            "additivity",
            "decompose",
            "--class",
            "x1",
            "--class",
            "x2,x3",
            "--class",
            "x4",
            "--block",
            "x1,x4",
            "--block",
            "x2,x3",
            "--format",
            "json",
        ],
    ),
    (
        "dynamics_knowledge",
        &[
            "dynamics",
            "--kind",
            "knowledge",
            "--u0",
            "25",
            "--u1",
            "5",
            "--at-u",
            "9",
            "--at-v",
            "1",
        ],
    ),
    (
        "dynamics_ignorance",
        &[
            "dynamics",
            "--kind",
            "ignorance",
            "--u0",
            "5",
            "--u1",
            "25",
            "--at-u",
            "7",
        ],
    ),
    (
        "measure_rankings_precise",
        &[
            "measure",
            "--rankings",
            "data/experts.rk",
            "--precision",
            "8",
        ],
    ),
];
