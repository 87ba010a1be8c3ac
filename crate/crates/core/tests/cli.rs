//! End-to-end runs of the `pillowcase` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pillowcase")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_str(p: &std::path::Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_splice_is_not_abelian() {
    let o = run(&["analyze", path_str(&data("trefoil_splice.json"))]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("|H1| = 1"), "{s}");
    assert!(s.contains("NotAbelian"), "{s}");
}

#[test]
fn analyze_sphere_is_abelian() {
    let o = run(&["analyze", path_str(&data("sphere_from_solid_tori.json"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Abelian"));
    assert!(!stdout(&o).contains("NotAbelian"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["analyze", path_str(&data("s2_times_s1.json"))]).status.code(), Some(3));
    assert_eq!(run(&["homology", path_str(&data("s2_times_s1.json"))]).status.code(), Some(3));
    assert_eq!(run(&["analyze", "/nonexistent/doc.json"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(run(&["analyze", path_str(&bad)]).status.code(), Some(2));
    let det = dir.path().join("det.json");
    std::fs::write(
        &det,
        r#"{"pieces":[{"id":"a","type":"solid_torus","coefficients":[[1,0]]},{"id":"b","type":"solid_torus","coefficients":[[1,0]]}],
           "gluings":[{"from":["a",0],"to":["b",0],"matrix":[[2,0],[0,1]]}]}"#,
    )
    .unwrap();
    assert_eq!(run(&["analyze", path_str(&det)]).status.code(), Some(2));
    assert_eq!(run(&["analyze", path_str(&data("trefoil_piece.json"))]).status.code(), Some(2));
}

#[test]
fn json_output_mirrors_input() {
    let o = run(&["analyze", "--json", path_str(&data("trefoil_splice.json"))]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert!(v["pieces"].is_array());
    assert!(v["gluings"].is_array());
    assert!(v["result"].is_object());
    let input: Value = serde_json::from_str(&std::fs::read_to_string(data("trefoil_splice.json")).unwrap()).unwrap();
    assert_eq!(v["pieces"], input["pieces"]);
}

#[test]
fn output_is_deterministic() {
    let three = data("planar_three_trefoils.json");
    let splice = data("trefoil_splice.json");
    let cases: [&[&str]; 4] = [
        &["tables"],
        &["tables", "--format", "tsv"],
        &["analyze", "--json", path_str(&three)],
        &["oracle-check", path_str(&splice)],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn plot_respects_force() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("trefoil.svg");
    let src = data("trefoil_piece.json");
    let first = run(&["plot", path_str(&src), "--out", path_str(&out)]);
    assert_eq!(first.status.code(), Some(0));
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<?xml") || svg.starts_with("<svg"), "{}", &svg[..40.min(svg.len())]);
    assert!(svg.contains("viewBox=\"0 0 512 512\""));
    let again = run(&["plot", path_str(&src), "--out", path_str(&out)]);
    assert_eq!(again.status.code(), Some(1));
    let forced = run(&["plot", path_str(&src), "--out", path_str(&out), "--force"]);
    assert_eq!(forced.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), svg);
}

#[test]
fn decompose_round_trip_keeps_verdict() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["trefoil_splice.json", "planar_three_trefoils.json", "mobius_and_disk.json", "trefoil_filled.json"] {
        let src = data(name);
        let d = run(&["decompose", path_str(&src)]);
        assert_eq!(d.status.code(), Some(0), "{name}");
        let expanded = dir.path().join(name);
        std::fs::write(&expanded, &d.stdout).unwrap();
        let a: Value = serde_json::from_slice(&run(&["analyze", "--json", path_str(&src)]).stdout).unwrap();
        let b: Value = serde_json::from_slice(&run(&["analyze", "--json", path_str(&expanded)]).stdout).unwrap();
        assert_eq!(a["result"]["status"], b["result"]["status"], "{name}");
        assert_eq!(a["result"]["h1"], b["result"]["h1"], "{name}");
    }
}

#[test]
fn weight_and_fill() {
    let o = run(&["weight", path_str(&data("trefoil_piece.json"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2/3"), "{}", stdout(&o));
    let f = run(&["analyze", path_str(&data("trefoil_piece.json")), "--fill", "1/0"]);
    assert_eq!(f.status.code(), Some(0));
    assert!(stdout(&f).contains("|H1| = 5"), "{}", stdout(&f));
}

#[test]
fn oracle_check_passes_on_witness() {
    let o = run(&["oracle-check", path_str(&data("mobius_and_disk.json"))]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS"));
}
