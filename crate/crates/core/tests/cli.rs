use std::fs;
use std::path::Path;

use serde_json::Value;
use tolcomplex::cli::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn tolcx(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("tolcx").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let (code, out, err) = tolcx(&all);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn analyze_reports_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let blocks = write(dir.path(), "blocks.scx", "0 1\n2 3\n");
    let v = json(&["analyze", &blocks]);
    assert_eq!((v["C"].as_u64(), v["L"].as_u64(), v["h"].as_u64()), (Some(1), Some(1), Some(1)));

    let sphere = write(dir.path(), "sphere.scx", "0 1\n1 2\n0 2\n");
    let v = json(&["analyze", &sphere]);
    assert_eq!((v["L"].as_u64(), v["h"].as_u64()), (Some(2), Some(2)));
    assert_eq!(v["betti"]["1"], 1);
    assert_eq!(v["missing_faces"], serde_json::json!([[0, 1, 2]]));

    let empty = write(dir.path(), "empty.scx", "");
    let v = json(&["analyze", &empty]);
    assert_eq!(v["void"], true);
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.scx", "0 1\n0 x\n");
    let (code, _, err) = tolcx(&["analyze", &bad]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, _) = tolcx(&["analyze", "/no/such/file.scx"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn tolerance_writes_the_sphere() {
    let dir = tempfile::tempdir().unwrap();
    let blocks = write(dir.path(), "blocks.scx", "0 1\n2 3\n");
    let out = dir.path().join("t1.scx");
    let (code, _, _) = tolcx(&["tolerance", "-t", "1", &blocks, "-o", out.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let k = tolcomplex::format::read_complex(&out).unwrap();
    assert_eq!(k, tolcomplex::SimplicialComplex::simplex_boundary(tolcomplex::VertexSet::range(4)));
}

#[test]
fn collapse_certificate_replays() {
    let dir = tempfile::tempdir().unwrap();
    let sphere = write(dir.path(), "sphere.scx", "0 1\n1 2\n0 2\n");
    let cert = dir.path().join("cert.json");
    let (code, out, _) = tolcx(&["collapse", &sphere, "--d", "2", "--certificate", cert.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{out}");
    let parsed: tolcomplex::collapse::CollapseCertificate = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    let k = tolcomplex::format::read_complex(&sphere).unwrap();
    parsed.replay(&k, 2).unwrap();
    let raw: Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    assert!(raw[0]["sigma"].is_array() && raw[0]["unique_max"].is_array());

    let (code, out, _) = tolcx(&["collapse", &sphere, "--d", "1"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("no"));
}

#[test]
fn leray_caps_and_decides() {
    let dir = tempfile::tempdir().unwrap();
    let sphere = write(dir.path(), "sphere.scx", "0 1\n1 2\n0 2\n");
    assert_eq!(tolcx(&["leray", &sphere, "--d", "2"]).0, EXIT_OK);
    assert_eq!(tolcx(&["leray", &sphere, "--d", "1"]).0, EXIT_FAIL);
    assert_eq!(json(&["leray", &sphere])["leray_number"], 2);

    let path: String = (0..15).map(|i| format!("{i} {}\n", i + 1)).collect();
    let big = write(dir.path(), "path.scx", &path);
    let (code, _, err) = tolcx(&["leray", &big]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--force"));
    assert_eq!(json(&["leray", &big, "--force"])["leray_number"], 1);
}

#[test]
fn cover_nerve_and_generators() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.hg", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    let v = json(&["cover", &c5, "--critical", "3"]);
    assert_eq!(v["covering_number"], 3);
    assert_eq!(v["critical"], true);

    let boxes = write(dir.path(), "f.boxes", "0 1\n2 3\n0 3\n");
    let (code, out, _) = tolcx(&["nerve", &boxes]);
    assert_eq!(code, EXIT_OK);
    let n = tolcomplex::format::parse_complex(&out).unwrap();
    assert_eq!(n.maximal_faces(), &[tolcomplex::VertexSet::from([0, 2]), tolcomplex::VertexSet::from([1, 2])]);

    let (_, a, _) = tolcx(&["gen", "boxes", "--d", "2", "--n", "6", "--seed", "9"]);
    let (_, b, _) = tolcx(&["--seed", "9", "gen", "boxes", "--d", "2", "--n", "6"]);
    assert_eq!(a, b);
    assert_eq!(tolcomplex::geometry::BoxFamily::parse(&a).unwrap().0.len(), 6);

    let (code, out, _) = tolcx(&["gen", "two-block", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(tolcomplex::format::parse_complex(&out).unwrap(), tolcomplex::geometry::two_block_complex(2).unwrap());
    assert_eq!(tolcx(&["gen", "two-block", "0"]).0, EXIT_USAGE);
}

#[test]
fn colorful_verify_modes() {
    let dir = tempfile::tempdir().unwrap();
    let sphere = write(dir.path(), "sphere.scx", "0 1\n1 2\n0 2\n");
    let classes = write(dir.path(), "classes.json", "[[0,1],[2]]");
    let v = json(&["colorful", "verify", "--mode", "plain", "--classes", &classes, &sphere]);
    assert!(v["rank"].as_u64().unwrap() <= 2);
    let v = json(&["colorful", "verify", "--mode", "d2t1", "--classes", &classes, &sphere]);
    assert_eq!(v["bound"], 5);
    assert_eq!(tolcx(&["colorful", "verify", "--mode", "nope", "--classes", &classes, &sphere]).0, EXIT_USAGE);
    // not 1-Leray: refused without --assume
    assert_eq!(tolcx(&["colorful", "verify", "--mode", "plain", "--d", "1", "--classes", &classes, &sphere]).0, EXIT_USAGE);
    assert_eq!(tolcx(&["colorful", "verify", "--mode", "plain", "--d", "1", "--assume", "--classes", &classes, &sphere]).0, EXIT_OK);
}

#[test]
fn documented_verify_runs_pass() {
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("cx");
    let d = dump.to_str().unwrap();
    for args in [
        vec!["verify", "thm1.5", "--t", "1", "--d", "1", "--trials", "200", "--seed", "7"],
        vec!["verify", "lemma4.1", "--trials", "500", "--seed", "1"],
        vec!["verify", "km-union", "--trials", "200"],
    ] {
        let mut args = args;
        args.extend(["--dump-dir", d]);
        let (code, out, err) = tolcx(&args);
        assert_eq!(code, EXIT_OK, "{out}{err}");
        assert!(out.contains("result: PASS"));
    }
    assert!(!dump.exists(), "no dump directory without failures");
}

#[test]
fn verify_is_deterministic() {
    let args = ["--json", "verify", "thm1.6", "--trials", "60", "--seed", "42", "--no-dump"];
    let (_, a, _) = tolcx(&args);
    let (_, b, _) = tolcx(&args);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["trials"], 60);
}

#[test]
fn failing_trials_dump_and_replay() {
    // d = 0 is the degenerate range where the bound breaks on extra vertices
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("cx");
    let (code, out, _) = tolcx(&["verify", "thm1.5", "--d", "0", "--trials", "30", "--seed", "3", "--dump-dir", dump.to_str().unwrap()]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("note: d = 0"));
    let files: Vec<_> = fs::read_dir(&dump).unwrap().map(|e| e.unwrap().path()).collect();
    assert!(!files.is_empty());
    for f in &files {
        let (code, out, _) = tolcx(&["verify", "--replay", f.to_str().unwrap()]);
        assert_eq!(code, EXIT_FAIL, "{out}");
        assert!(out.contains("exceeds h(")); // the same assertion fails again
        // dumps are valid complex files too
        assert_eq!(tolcx(&["analyze", f.to_str().unwrap()]).0, EXIT_OK);
    }
}

#[test]
fn replay_of_a_hand_written_instance() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.scx", "# @suite union-bound\n# @complex X0 0 1 2 | 0 1; 2\n# @complex X1 0 1 2 | 1 2\n");
    assert_eq!(tolcx(&["verify", "--replay", &good]).0, EXIT_OK);
    let unnamed = write(dir.path(), "unnamed.scx", "0 1\n");
    assert_eq!(tolcx(&["verify", "--replay", &unnamed]).0, EXIT_USAGE);
}

#[test]
fn suite_guard_rails_are_usage_errors() {
    assert_eq!(tolcx(&["verify", "lemma4.1", "--n", "12", "--trials", "1"]).0, EXIT_USAGE);
    assert_eq!(tolcx(&["verify", "lemma4.1", "--n", "9", "--trials", "1", "--force", "--no-dump"]).0, EXIT_OK);
    assert_eq!(tolcx(&["verify", "thm1.5", "--d", "-1"]).0, EXIT_USAGE);
    assert_eq!(tolcx(&["verify"]).0, EXIT_USAGE);
}
