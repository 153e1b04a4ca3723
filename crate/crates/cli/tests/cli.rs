use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use slchar::{KostkaMatrix, LaurentPolynomial, WeightGradedCharacter};

fn slchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slchar"))
        .args(args)
        .output()
        .expect("failed to spawn slchar")
}

fn stdout(args: &[&str]) -> String {
    let out = slchar(args);
    assert!(
        out.status.success(),
        "{args:?} exited with {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn assert_rejects(args: &[&str], code: i32) {
    let out = slchar(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}");
    assert!(out.stdout.is_empty(), "{args:?} printed to stdout on error");
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(!err.trim().is_empty(), "{args:?} gave no diagnostic");
}

#[test]
fn kostka_examples() {
    assert_eq!(stdout(&["kostka", "--rank", "3", "--lambda", "0,0,0", "--n", "1,0,1"]), "q\n");
    assert_eq!(stdout(&["kostka", "--rank", "3", "--lambda", "0,2,0", "--n", "1,2,1"]), "q + q^2\n");
    assert_eq!(stdout(&["kostka", "--rank", "2", "--lambda", "0,0", "--n", "0,0"]), "1\n");
    assert_eq!(stdout(&["kostka", "--rank", "2", "--lambda", "1,0", "--n", "0,0"]), "0\n");
    assert_eq!(stdout(&["kostka", "--rank", "3", "--lambda", "1,0,1", "--n", "1,2,1"]), "q^2\n");
}

#[test]
fn kostka_matrix_goldens() {
    let base = ["kostka-matrix", "--rank", "3", "--width", "4", "--size-max", "12", "--residue", "0"];
    assert_eq!(stdout(&base), golden("sl4_matrix.txt"));
    let mut inv = base.to_vec();
    inv.push("--inverse");
    assert_eq!(stdout(&inv), golden("sl4_inverse.txt"));
    let trivial = stdout(&["kostka-matrix", "--rank", "3", "--width", "0", "--size-max", "0"]);
    assert_eq!(trivial.lines().nth(1), Some("[ [1] ]"));
}

#[test]
fn character_goldens() {
    let vac = stdout(&["char", "--rank", "1", "--level", "1", "--lambda", "0", "--max-degree", "4"]);
    assert_eq!(vac, golden("sl2_level1_vacuum.txt"));
    assert!(vac.contains("[0]: 1 + q + 2*q^2 + 3*q^3 + 5*q^4\n"));
    assert_eq!(
        stdout(&["char", "--rank", "2", "--level", "2", "--lambda", "1,1", "--max-degree", "0"]),
        golden("sl3_adjoint_q0.txt")
    );
    assert_eq!(
        stdout(&["char", "--rank", "1", "--level", "2", "--lambda", "0", "--max-degree", "3", "--strings"]),
        golden("sl2_level2_strings.txt")
    );
    assert_eq!(
        stdout(&["char", "--rank", "3", "--level", "4", "--lambda", "1,2,1", "--max-degree", "2", "--formula", "general"]),
        golden("sl4_121_general.txt")
    );
}

#[test]
fn formula_choices_agree_on_rectangles() {
    let args = |f: &'static str| ["char", "--rank", "2", "--level", "3", "--lambda", "0,2", "--max-degree", "4", "--formula", f];
    let auto = stdout(&args("auto"));
    assert_eq!(auto, stdout(&args("rect")));
    assert_eq!(auto, stdout(&args("general")));
}

#[test]
fn fusion_goldens() {
    assert_eq!(
        stdout(&["fusion-char", "--principal", "--rank", "1", "--level", "1", "--n", "1", "--max-degree", "3"]),
        golden("sl2_fusion_principal.txt")
    );
    assert_eq!(
        stdout(&["fusion-char", "--rank", "3", "--level", "4", "--n", "1,2,1", "--max-degree", "2"]),
        golden("sl4_fusion_121.txt")
    );
    let vacuum = stdout(&["fusion-char", "--rank", "2", "--level", "2", "--n", "0,0", "--max-degree", "2"]);
    assert_eq!(
        vacuum,
        stdout(&["char", "--rank", "2", "--level", "2", "--lambda", "0,0", "--max-degree", "2"])
    );
}

#[test]
fn json_round_trips() {
    let poly = stdout(&["kostka", "--rank", "3", "--lambda", "0,2,0", "--n", "1,2,1", "--format", "json"]);
    let v: Value = serde_json::from_str(&poly).unwrap();
    assert_eq!(format!("{}\n", LaurentPolynomial::from_json(&v).unwrap().to_json()), poly);

    for inverse in [false, true] {
        let mut args = vec!["kostka-matrix", "--rank", "3", "--width", "4", "--size-max", "12", "--format", "json"];
        if inverse {
            args.push("--inverse");
        }
        let text = stdout(&args);
        let v: Value = serde_json::from_str(&text).unwrap();
        let m = KostkaMatrix::from_json(&v).unwrap();
        assert_eq!(m.is_inverse(), inverse);
        assert_eq!(format!("{}\n", m.to_json()), text);
    }

    for args in [
        vec!["char", "--rank", "2", "--level", "2", "--lambda", "1,1", "--max-degree", "3"],
        vec!["char", "--rank", "2", "--level", "3", "--lambda", "1,1", "--max-degree", "2", "--formula", "general"],
        vec!["fusion-char", "--rank", "2", "--level", "2", "--n", "1,1", "--max-degree", "3"],
        vec!["fusion-char", "--rank", "2", "--level", "2", "--n", "1,1", "--max-degree", "3", "--principal"],
    ] {
        let mut args = args;
        args.extend(["--format", "json"]);
        let text = stdout(&args);
        let v: Value = serde_json::from_str(&text).unwrap();
        let ch = WeightGradedCharacter::from_json(&v).unwrap();
        assert_eq!(format!("{}\n", ch.to_json()), text, "{args:?}");
    }

    let strings = stdout(&["char", "--rank", "1", "--level", "2", "--lambda", "0", "--max-degree", "3", "--strings", "--format", "json"]);
    let v: Value = serde_json::from_str(&strings).unwrap();
    assert_eq!(format!("{v}\n"), strings);
    assert_eq!(v["strings"][1]["frac"], serde_json::json!([1, 2]));
}

#[test]
fn outputs_are_deterministic() {
    let args = ["fusion-char", "--rank", "3", "--level", "4", "--n", "1,2,1", "--max-degree", "2", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
    let verify = ["verify", "--suite", "oracle-lr", "--max-size", "5"];
    assert_eq!(stdout(&verify), stdout(&verify));
}

#[test]
fn malformed_input_exits_2() {
    assert_rejects(&["kostka", "--rank", "3", "--lambda", "0,0", "--n", "1,0,1"], 2);
    assert_rejects(&["kostka", "--rank", "2", "--lambda", "1,x", "--n", "1,0"], 2);
    assert_rejects(&["kostka", "--rank", "2", "--lambda", "0,0", "--n", "-1,0"], 2);
    assert_rejects(&["kostka", "--rank", "0", "--lambda", "0", "--n", "0"], 2);
    assert_rejects(&["kostka", "--rank", "2", "--lambda", "0,0"], 2);
    assert_rejects(&["char", "--rank", "2", "--level", "2", "--lambda", "1,-1", "--max-degree", "2"], 2);
    assert_rejects(&["char", "--rank", "1", "--level", "1", "--lambda", "0", "--max-degree", "-1"], 2);
    assert_rejects(&["char", "--rank", "2", "--level", "3", "--lambda", "1,1", "--max-degree", "1", "--formula", "rect"], 2);
    assert_rejects(&["char", "--rank", "1", "--level", "1", "--lambda", "0", "--max-degree", "1", "--format", "yaml"], 2);
    assert_rejects(&["verify", "--suite", "nonsense"], 2);
}

#[test]
fn level_violation_exits_3() {
    assert_rejects(&["char", "--rank", "2", "--level", "1", "--lambda", "1,1", "--max-degree", "2"], 3);
    assert_rejects(&["fusion-char", "--rank", "2", "--level", "2", "--n", "2,1", "--max-degree", "2"], 3);
}

#[test]
fn verify_exit_codes() {
    let ok = slchar(&["verify", "--suite", "paper-tables", "--max-degree", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("PASS sl4 Kostka matrix: 101 passed, 0 failed"));

    let ok = slchar(&["verify", "--suite", "internal-identities", "--max-degree", "4"]);
    assert_eq!(ok.status.code(), Some(0));

    let red = slchar(&["verify", "--suite", "oracle-charge"]);
    assert_eq!(red.status.code(), Some(1));
    let text = String::from_utf8_lossy(&red.stdout);
    assert!(text.contains("FAIL duality composite vs charge oracle: 500 passed, 418 failed"));
    assert!(text.contains("first counterexample"));
    assert!(text.contains("PASS fermionic sum vs cocharge oracle: 918 passed"), "{text}");
}
