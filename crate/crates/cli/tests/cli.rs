use std::path::{Path, PathBuf};

use fewlists::app::{run_args, EXIT_GUARD, EXIT_INVALID, EXIT_NO_MATCHING, EXIT_OK};
use fewlists::edgelist::serialize;
use fewlists::report::Report;
use fewlists_core::corpus;
use fewlists_core::Multigraph;

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn graph_file(dir: &Path, name: &str, g: &Multigraph) -> PathBuf {
    write(dir, name, &serialize(g))
}

fn run(args: &[&str]) -> fewlists::app::Outcome {
    run_args(std::iter::once("fewlists").chain(args.iter().copied()))
}

#[test]
fn k4_certifies_with_coefficient_six() {
    let dir = tempfile::tempdir().unwrap();
    let p = graph_file(dir.path(), "k4.txt", &corpus::k4());
    let out = run(&["analyze", p.to_str().unwrap(), "--certify", "--json"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let r: Report = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(r.totals.fours, 0);
    assert_eq!(r.components[0].certificate.status, "certified");
    assert_eq!(r.components[0].certificate.chosen_coefficient.as_deref(), Some("6"));
}

#[test]
fn dumbbell_uses_two_fours() {
    let dir = tempfile::tempdir().unwrap();
    let p = graph_file(dir.path(), "dumbbell.txt", &corpus::dumbbell());
    let out = run(&["analyze", p.to_str().unwrap(), "--certify", "--oracle", "--trials", "200", "--json"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let r: Report = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!((r.totals.b, r.totals.fours, r.totals.bound), (1, 2, 2));
    assert_eq!(r.totals.bound_check, "pass");
    let oracle = r.components[0].oracle.as_ref().unwrap();
    assert_eq!(oracle.random.successes, 200);
    assert_eq!(oracle.exhaustive_choosable, None);
}

#[test]
fn report_round_trips_through_json() {
    let dir = tempfile::tempdir().unwrap();
    let p = graph_file(dir.path(), "prism.txt", &corpus::prism());
    let out = run(&["analyze", p.to_str().unwrap(), "--certify", "--json"]);
    let r: Report = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(fewlists::report::to_json(&r), out.stdout);
}

#[test]
fn text_report_mentions_the_bound() {
    let dir = tempfile::tempdir().unwrap();
    let p = graph_file(dir.path(), "dumbbell.txt", &corpus::dumbbell());
    let out = run(&["analyze", p.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("bound"), "{}", out.stdout);
}

#[test]
fn invalid_inputs_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let path3 = graph_file(dir.path(), "path.txt", &corpus::path(3));
    assert_eq!(run(&["analyze", path3.to_str().unwrap()]).code, EXIT_INVALID);
    let junk = write(dir.path(), "junk.txt", "4 2\n0 x\n");
    let out = run(&["analyze", junk.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INVALID);
    assert!(out.stderr.contains("line"), "{}", out.stderr);
    assert_eq!(run(&["analyze", dir.path().join("missing.txt").to_str().unwrap()]).code, EXIT_INVALID);
    assert_eq!(run(&["dot", path3.to_str().unwrap()]).code, EXIT_INVALID);
}

#[test]
fn petersen_has_no_admissible_matching() {
    let dir = tempfile::tempdir().unwrap();
    let p = graph_file(dir.path(), "petersen.txt", &corpus::petersen());
    let out = run(&["analyze", p.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_NO_MATCHING);
    assert!(out.stdout.is_empty());
}

#[test]
fn coeff_of_theta() {
    let dir = tempfile::tempdir().unwrap();
    let g = graph_file(dir.path(), "theta.txt", &corpus::theta());
    let w = write(dir.path(), "w.txt", "2 2 2\n");
    let out = run(&["coeff", g.to_str().unwrap(), w.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.starts_with("coefficient: -6\n"), "{}", out.stdout);
    let wrong = write(dir.path(), "wrong.txt", "1 1 1\n");
    let out = run(&["coeff", g.to_str().unwrap(), wrong.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["coefficient"], "0");
    let short = write(dir.path(), "short.txt", "2 2\n");
    assert_eq!(run(&["coeff", g.to_str().unwrap(), short.to_str().unwrap()]).code, EXIT_INVALID);
}

#[test]
fn coeff_respects_the_edge_guard() {
    let dir = tempfile::tempdir().unwrap();
    let g = graph_file(dir.path(), "k4.txt", &corpus::k4());
    let w = write(dir.path(), "w.txt", "2 2 2 2 2 2\n");
    assert_eq!(run(&["coeff", g.to_str().unwrap(), w.to_str().unwrap(), "--guard-edges", "3"]).code, EXIT_GUARD);
    let out = run(&["coeff", g.to_str().unwrap(), w.to_str().unwrap(), "--workers", "3"]);
    assert!(out.stdout.starts_with("coefficient: 6\n"), "{}", out.stdout);
}

#[test]
fn dot_blocks_of_dumbbell() {
    let dir = tempfile::tempdir().unwrap();
    let p = graph_file(dir.path(), "dumbbell.txt", &corpus::dumbbell());
    let out = run(&["dot", p.to_str().unwrap(), "--what", "blocks"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.matches("[label=\"").count(), 3, "{}", out.stdout);
    assert_eq!(out.stdout.matches(" -- ").count(), 1);
    let derived = run(&["dot", p.to_str().unwrap(), "--what", "derived"]);
    assert!(derived.stdout.starts_with("graph fewlists {"));
    assert_eq!(run(&["dot", p.to_str().unwrap(), "--what"]).code, EXIT_INVALID);
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p = graph_file(dir.path(), "k4.txt", &corpus::k4());
    let status = std::process::Command::new(env!("CARGO_BIN_EXE_fewlists")).args(["analyze", p.to_str().unwrap()]).output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK));
    let status = std::process::Command::new(env!("CARGO_BIN_EXE_fewlists")).arg("nonsense").output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_INVALID));
}
