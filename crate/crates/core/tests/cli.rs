// End-to-end runs of the `bihom` binary. JSON reports are compared with the
// files in tests/golden; set BIHOM_BLESS=1 to rewrite them.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bihom"))
        .args(args)
        .current_dir(fixtures())
        .env("BIHOM_COLOR", "0")
        .output()
        .expect("binary runs")
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8(bytes.to_vec()).unwrap()
}

const GOLDEN: &[(&str, &[&str], i32)] = &[
    ("verify_nilpotent", &["verify", "nilpotent.json"], 0),
    ("verify_noncommuting", &["verify", "noncommuting.json"], 1),
    ("verify_bad_rep", &["verify", "affine_bad_rep.json"], 1),
    ("verify_lie_rep", &["verify", "affine_left_rep.json"], 0),
    ("verify_malformed", &["verify", "malformed.json"], 2),
    ("subadjacent_nilpotent", &["subadjacent", "nilpotent.json"], 0),
    ("semidirect_affine", &["semidirect", "affine_adjoint.json"], 0),
    ("induced_full", &["induced-rep", "affine_adjoint.json"], 0),
    ("induced_left", &["induced-rep", "--variant", "left", "affine_adjoint.json"], 0),
    ("twist_rep", &["twist-rep", "nil_classical_adjoint.json", "nil_twists.json"], 0),
    ("tensor_rep", &["tensor-rep", "affine_adjoint.json", "affine_adjoint.json"], 0),
    ("o_operator_identity", &["o-operator", "affine_left_rep.json", "identity2.json"], 0),
    ("rota_baxter_e11", &["rota-baxter", "affine.json", "rb_e11.json"], 0),
    ("rota_baxter_identity", &["rota-baxter", "affine.json", "identity2.json"], 1),
    ("cohomology_abelian", &["cohomology", "abelian2.json", "--degrees", "1..2"], 0),
    ("cohomology_nilpotent", &["cohomology", "nilpotent_untwisted.json", "--degrees", "1..3"], 0),
    ("cohomology_trivial", &["cohomology", "nilpotent.json", "--rep", "trivial", "--degrees", "1..2"], 0),
    ("deform_zero", &["deform-check", "nilpotent.json", "pi_zero.json"], 0),
    ("deform_affine_untwisted", &["deform-check", "nilpotent_untwisted.json", "pi_affine.json"], 0),
    ("deform_not_equivariant", &["deform-check", "nilpotent.json", "pi_affine.json"], 1),
    ("nijenhuis_scalar", &["nijenhuis", "nilpotent_untwisted.json", "nij_scalar.json"], 0),
    ("equivalence_fails", &["equivalence", "nilpotent_untwisted.json", "pi_zero.json", "pi_zero.json", "identity2.json"], 1),
    ("push_lie", &["push-lie", "nilpotent_untwisted.json", "pi_affine.json"], 0),
];

#[test]
fn json_reports_match_golden_files() {
    let golden_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var("BIHOM_BLESS").is_ok_and(|v| v == "1");
    let mut mismatches = Vec::new();
    for (name, args, code) in GOLDEN {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let out = run(&full);
        assert_eq!(out.status.code(), Some(*code), "{name}: {}", text(&out.stderr));
        let stdout = text(&out.stdout);
        let parsed: serde_json::Value = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parsed["command"], args[0], "{name}");
        let path = golden_dir.join(format!("{name}.json"));
        if bless {
            fs::write(&path, &stdout).unwrap();
        } else {
            let want = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
            if want != stdout {
                mismatches.push(name.to_string());
            }
        }
    }
    assert!(mismatches.is_empty(), "golden mismatches: {mismatches:?}");
}

#[test]
fn verify_prints_a_pass_line() {
    let out = run(&["verify", "nilpotent.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out.stdout).contains("BiHom-pre-Lie: PASS"));
}

#[test]
fn non_commuting_twists_are_named() {
    let out = run(&["verify", "noncommuting.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(text(&out.stdout).contains("alpha-beta commutation"));
}

#[test]
fn abelian_cohomology_in_text_mode() {
    let out = run(&["cohomology", "--rep", "adjoint", "--degrees", "1..2", "abelian2.json"]);
    assert_eq!(out.status.code(), Some(0));
    let s = text(&out.stdout);
    assert!(s.contains("H^1 = 4"), "{s}");
    assert!(s.contains("H^2 = 8"), "{s}");
}

#[test]
fn malformed_input_points_at_the_field() {
    let out = run(&["verify", "malformed.json"]);
    assert_eq!(out.status.code(), Some(2));
    let err = text(&out.stderr);
    assert!(err.contains("alpha[1][1]"), "{err}");
    assert!(err.contains("p/q"), "{err}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "does_not_exist.json"]).status.code(), Some(2));
    assert_eq!(run(&["cohomology", "abelian2.json", "--degrees", "3..1"]).status.code(), Some(2));
    assert_eq!(run(&["cohomology", "abelian2.json", "--degrees", "1..9"]).status.code(), Some(2));
}

#[test]
fn constructed_document_on_stdout_is_valid_json() {
    let out = run(&["subadjacent", "nilpotent.json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["dim"], 2);
    assert!(text(&out.stderr).contains("BiHom-Lie: PASS"));
}

#[test]
fn output_file_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let semi = dir.path().join("semi.json");
    let out = run(&["semidirect", "affine_adjoint.json", "--output", semi.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    assert!(text(&out.stdout).contains("wrote"));
    let out = run(&["verify", semi.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out.stdout).contains("BiHom-pre-Lie: PASS"));
}

#[test]
fn nijenhuis_output_is_a_deformation() {
    let dir = tempfile::tempdir().unwrap();
    let pi = dir.path().join("pi.json");
    let out = run(&["nijenhuis", "nilpotent_untwisted.json", "nij_scalar.json", "--output", pi.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["deform-check", "nilpotent_untwisted.json", pi.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stdout));
    let out = run(&["equivalence", "nilpotent_untwisted.json", "pi_zero.json", pi.to_str().unwrap(), "nij_scalar.json"]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stdout));
}
