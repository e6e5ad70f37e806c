use std::path::Path;

use quiver_core::{io, is_isomorphic};
use tsp4_cli::fixtures::{fixture, Fixture, FIXTURE_NAMES};
use tsp4_cli::run;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn tsp4(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        std::iter::once("tsp4").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write_fixture(dir: &Path, name: &str) -> String {
    let path = dir.join(format!("{name}.json"));
    let p = path.to_str().unwrap().to_string();
    assert_eq!(tsp4(&["fixtures", "--name", name, "--out", &p]).code, 0);
    p
}

#[test]
fn shadow_counts_on_stdout() {
    assert_eq!(
        tsp4(&["shadows", "--n", "4", "--mode", "essential"]).stdout,
        "7\n"
    );
    assert_eq!(
        tsp4(&["shadows", "--n", "1", "--mode", "basic"]).stdout,
        "1\n"
    );
    assert_eq!(
        tsp4(&["shadows", "--n", "5", "--mode", "essential"]).stdout,
        "26\n"
    );
}

#[test]
fn argument_errors_exit_with_two() {
    assert_eq!(tsp4(&["classify", "--n", "6"]).code, 2);
    assert_eq!(tsp4(&["shadows", "--n", "7"]).code, 2);
    assert_eq!(tsp4(&["classify", "--n", "4", "--mode", "wild"]).code, 2);
    assert_eq!(tsp4(&["frobnicate"]).code, 2);
    assert_eq!(tsp4(&["shadows", "--n", "3", "--format", "dot"]).code, 2);
    assert_eq!(tsp4(&["--help"]).code, 0);
}

#[test]
fn classify_verifies_against_reference_lists() {
    let r = tsp4(&["classify", "--n", "4", "--mode", "tsp4", "--verify"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.starts_with("n=4 mode=tsp4: 6 quivers"));
    let r = tsp4(&["classify", "--n", "5", "--mode", "gqt", "--verify"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("undecided: n5-q17-loopless"));
}

#[test]
fn classify_writes_document_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c4.json");
    let o = out.to_str().unwrap();
    assert_eq!(
        tsp4(&["classify", "--n", "4", "--out", o, "--threads", "2"]).code,
        0
    );
    let doc: serde_json::Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(doc["survivor_quivers"].as_array().unwrap().len(), 6);
    assert_eq!(doc["mode"], "tsp4");
    let m: serde_json::Value =
        serde_json::from_slice(&std::fs::read(dir.path().join("c4.json.manifest.json")).unwrap())
            .unwrap();
    assert_eq!(m["command"], "classify");
    assert_eq!(m["threads"], 2);

    let again = dir.path().join("c4b.json");
    assert_eq!(
        tsp4(&[
            "classify",
            "--n",
            "4",
            "--out",
            again.to_str().unwrap(),
            "--threads",
            "1"
        ])
        .code,
        0
    );
    let m2: serde_json::Value =
        serde_json::from_slice(&std::fs::read(dir.path().join("c4b.json.manifest.json")).unwrap())
            .unwrap();
    assert_eq!(m["input_hash"], m2["input_hash"]);
    assert_eq!(m["output_hash"], m2["output_hash"]);
}

#[test]
fn mutate_q17_at_x1_gives_q13() {
    let dir = tempfile::tempdir().unwrap();
    let q17 = write_fixture(dir.path(), "q17");
    let r = tsp4(&["mutate", "--quiver", &q17, "--vertex", "3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let Some(Fixture::Quiver(q13)) = fixture("q13") else {
        unreachable!()
    };
    assert!(is_isomorphic(&io::from_json(r.stdout.trim()).unwrap(), &q13).unwrap());
}

#[test]
fn mutate_reports_domain_errors() {
    let dir = tempfile::tempdir().unwrap();
    let q17 = write_fixture(dir.path(), "q17");
    let markov = write_fixture(dir.path(), "markov3");
    assert_eq!(tsp4(&["mutate", "--quiver", &q17, "--vertex", "5"]).code, 4);
    assert_eq!(
        tsp4(&["mutate", "--quiver", &markov, "--vertex", "1"]).code,
        4
    );
    assert_eq!(tsp4(&["mutate", "--quiver", &q17, "--vertex", "9"]).code, 4);
}

#[test]
fn recognize_q17_as_blocks_one_and_five() {
    let dir = tempfile::tempdir().unwrap();
    let q17 = write_fixture(dir.path(), "q17");
    let r = tsp4(&["recognize", "--quiver", &q17]);
    assert_eq!(r.code, 0);
    let d: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    let kinds: Vec<&str> = d["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["type"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, ["I", "V"]);
}

#[test]
fn canon_is_stable_and_exports_dot() {
    let dir = tempfile::tempdir().unwrap();
    let markov = write_fixture(dir.path(), "markov3");
    let first = tsp4(&["canon", "--quiver", &markov]).stdout;
    let canon_path = dir.path().join("canon.json");
    std::fs::write(&canon_path, &first).unwrap();
    assert_eq!(
        tsp4(&["canon", "--quiver", canon_path.to_str().unwrap()]).stdout,
        first
    );
    assert_eq!(tsp4(&["canon", "--quiver", &markov]).stdout, first);
    let dot = tsp4(&["canon", "--quiver", &markov, "--format", "dot"]).stdout;
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 6);
}

#[test]
fn reconstruct_reports_every_candidate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.json");
    let a = shadow_engine::reference_shadow(5, "Q25").unwrap();
    std::fs::write(&path, shadow_engine::shadow::to_json(a)).unwrap();
    let r = tsp4(&[
        "reconstruct",
        "--shadow",
        path.to_str().unwrap(),
        "--report",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(doc["survivors"].as_array().unwrap().len(), 1);
    assert_eq!(
        doc["reports"].as_array().unwrap().len(),
        doc["candidates"].as_u64().unwrap() as usize
    );
}

#[test]
fn unreadable_or_malformed_input_exits_with_three() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        tsp4(&["canon", "--quiver", "/definitely/not/here.json"]).code,
        3
    );
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\":2,\"arrows\":[[1,3,1]]}").unwrap();
    assert_eq!(tsp4(&["canon", "--quiver", bad.to_str().unwrap()]).code, 3);
    let out = dir.path().join("missing-dir/out.json");
    assert_eq!(
        tsp4(&["shadows", "--n", "3", "--out", out.to_str().unwrap()]).code,
        3
    );
}

#[test]
fn every_fixture_prints_valid_json() {
    for name in FIXTURE_NAMES {
        let r = tsp4(&["fixtures", "--name", name]);
        assert_eq!(r.code, 0);
        serde_json::from_str::<serde_json::Value>(&r.stdout).unwrap();
    }
    assert_eq!(
        tsp4(&["fixtures"]).stdout.lines().count(),
        FIXTURE_NAMES.len()
    );
    assert_eq!(tsp4(&["fixtures", "--name", "nope"]).code, 2);
}
