#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

/// One golden invocation: file stem, arguments, expected exit code.
pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

pub const CASES: &[Case] = &[
    Case { name: "char_b2_std_spin", args: &["char", "--algebra", "B2", "--rep", "std + spin"], code: 0 },
    Case { name: "char_c3_spin", args: &["char", "--algebra", "C3", "--rep", "spin"], code: 2 },
    Case { name: "rect_b3_spin", args: &["rect", "--algebra", "B3", "--rep", "spin"], code: 0 },
    Case {
        name: "rect_a1_pair_seeded",
        args: &["rect", "--algebra", "A1", "--rep", "sym4 + sym3", "--seed", "7"],
        code: 0,
    },
    Case { name: "rect_a2_std", args: &["rect", "--algebra", "A2", "--rep", "std"], code: 3 },
    Case {
        name: "decompose_a1_a1_b3",
        args: &["decompose", "--algebra", "A1*A1*B3", "--rep", "sym4*std*spin"],
        code: 0,
    },
    Case {
        name: "decompose_d2_b2",
        args: &[
            "decompose",
            "--algebra",
            "A1*A1*B2",
            "--rep",
            "std*triv*std + std*triv*spin + triv*std*std + triv*std*spin",
        ],
        code: 0,
    },
    Case { name: "decompose_a2_std", args: &["decompose", "--algebra", "A2", "--rep", "std"], code: 3 },
    Case {
        name: "decompose_not_faithful",
        args: &["decompose", "--algebra", "A1*A1", "--rep", "std*triv"],
        code: 3,
    },
    Case { name: "enumerate_rank1", args: &["enumerate", "--max-rank", "1", "--max-dim", "12"], code: 0 },
    Case { name: "enumerate_a3", args: &["enumerate", "--algebra", "A3", "--max-dim", "256"], code: 0 },
    Case {
        name: "enumerate_dry_run",
        args: &["enumerate", "--dry-run", "--max-rank", "4", "--max-dim", "256"],
        code: 0,
    },
    Case { name: "enumerate_rank5", args: &["enumerate", "--max-rank", "5"], code: 2 },
    Case {
        name: "verify_catalogue_2_64",
        args: &["verify-catalogue", "--max-rank", "2", "--max-dim", "64"],
        code: 0,
    },
    Case {
        name: "verify_catalogue_too_large",
        args: &["verify-catalogue", "--max-rank", "2", "--max-dim", "1000"],
        code: 2,
    },
    Case { name: "verify_howe_128", args: &["verify-howe", "--max-dim", "128"], code: 0 },
    Case { name: "verify_howe_product", args: &["verify-howe", "--algebra", "A1*A1"], code: 2 },
    Case { name: "census_4", args: &["census", "--max-rank", "4"], code: 0 },
    Case { name: "census_7", args: &["census", "--max-rank", "7"], code: 2 },
    Case { name: "usage_unknown_command", args: &["bogus"], code: 2 },
    Case { name: "usage_missing_rep", args: &["char", "--algebra", "B2"], code: 2 },
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(format!("{name}.json"))
}

/// Runs the built binary; returns exit code and standard output.
pub fn run_binary(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_rectrep"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}
