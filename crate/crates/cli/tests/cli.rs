use std::fs;
use std::process::{Command, Output};

fn aalpha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aalpha"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn eigenvalues(json: &str) -> Vec<f64> {
    let start = json.find("\"eigenvalues\":[").unwrap() + "\"eigenvalues\":[".len();
    let end = start + json[start..].find(']').unwrap();
    json[start..end].split(',').map(|s| s.parse().unwrap()).collect()
}

fn assert_close(got: &[f64], want: &[f64]) {
    assert_eq!(got.len(), want.len(), "{got:?}");
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() < 1e-9, "{got:?} vs {want:?}");
    }
}

#[test]
fn complete_four_adjacency() {
    let o = aalpha(&["spectrum", "--graph", "complete:4", "--alpha", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_close(&eigenvalues(&stdout(&o)), &[3.0, -1.0, -1.0, -1.0]);
}

#[test]
fn cyclic_nine_power_graph() {
    let o = aalpha(&["powergraph", "--group", "cyclic:9", "--alpha", "0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let mut want = vec![8.0];
    want.extend([3.5; 8]);
    assert_close(&eigenvalues(&stdout(&o)), &want);
}

#[test]
fn power_cyclic_thirty_verifies() {
    let o = aalpha(&["verify", "--family", "power_cyclic", "--n", "30", "--alpha", "0.25"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"matched\": true"));
}

#[test]
fn params_and_inline_forms_agree() {
    let a = aalpha(&["verify", "--family", "cone", "--params", "5,2", "--format", "csv"]);
    let b = aalpha(&["verify", "--family", "cone:5,2", "--format", "csv"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).starts_with("case,n,alpha,matched,max_error,fixed_dim,aux_dim\n"));
}

#[test]
fn complete_split_reports_printed_pair() {
    let o = aalpha(&["verify", "--family", "complete_split", "--params", "3,7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("printed pair differs"));
}

#[test]
fn edge_list_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("q8.txt");
    let out = dir.path().join("spec.json");
    let o = aalpha(&[
        "powergraph",
        "--group",
        "dicyclic:8",
        "--alpha",
        "0.3",
        "--edges",
        edges.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let from_group = eigenvalues(&fs::read_to_string(&out).unwrap());
    let o = aalpha(&["spectrum", "--graph", edges.to_str().unwrap(), "--alpha", "0.3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_close(&eigenvalues(&stdout(&o)), &from_group);
    assert_eq!(from_group.len(), 8);
}

#[test]
fn sweep_is_deterministic() {
    let args = ["sweep", "--suite", "joined_union_random", "--alpha", "0,0.5", "--seed", "7", "--format", "csv"];
    let a = aalpha(&args);
    let b = aalpha(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a).lines().count(), 1 + 2 * 50);
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["spectrum", "--graph", "bogus:3"][..],
        &["spectrum", "--graph", "/definitely/missing"],
        &["spectrum", "--graph", "complete:4", "--alpha", "1.5"],
        &["spectrum", "--graph", "complete:4", "--format", "xml"],
        &["verify", "--family", "power_cyclic"],
        &["verify", "--family", "wheel:5", "--n", "6"],
        &["sweep", "--suite", "nonexistent"],
        &["frobnicate"],
    ] {
        let o = aalpha(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn malformed_edge_list_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "3 2\n0 1\n1 x\n").unwrap();
    let o = aalpha(&["spectrum", "--graph", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
