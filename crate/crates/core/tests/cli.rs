mod common;

use std::io::Write;
use std::process::{Command, Stdio};

use linkdim::{all_pairs_distances, link_dimension, Graph, SearchOptions};
use serde_json::Value;

fn linkdim(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_linkdim"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str], stdin: &str) -> String {
    let (code, out, err) = linkdim(args, stdin);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn kv(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("missing {key} in\n{text}"))
        .to_string()
}

#[test]
fn dims_on_standard_families() {
    let c7 = ok(&["gen", "--family", "cycle", "--n", "7"], "");
    let out = ok(&["dims", "-"], &c7);
    assert_eq!(kv(&out, "beta"), "2");
    assert_eq!(kv(&out, "gamma"), "2");
    assert_eq!(kv(&out, "sdim"), "4");

    let k4 = ok(&["gen", "--family", "complete", "--n", "4"], "");
    let out = ok(&["dims", "-"], &k4);
    assert_eq!((kv(&out, "beta"), kv(&out, "gamma"), kv(&out, "sdim")), ("3".into(), "3".into(), "3".into()));

    let p5 = ok(&["gen", "--family", "path", "--n", "5"], "");
    let out = ok(&["dims", "-", "--skip-strong"], &p5);
    assert_eq!(kv(&out, "gamma"), "1");
    assert!(!out.contains("sdim"));
}

#[test]
fn dims_json_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c5.txt");
    std::fs::write(&file, "# five-cycle\n1 2\n2 3\n3 4\n4 5\n5 1\n").unwrap();
    let out = ok(&["--json", "--threads", "2", "dims", file.to_str().unwrap()], "");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["gamma"]["value"], 3);
    assert_eq!(v["gamma"]["witness"], serde_json::json!(["1", "2", "3"]));
    assert_eq!(v["beta"]["method"], "exact");
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "--family", "er", "--n", "10", "--p", "0.3", "--seed", "42"];
    let a = ok(&args, "");
    assert_eq!(a, ok(&args, ""));
    assert!(Graph::parse(&a).unwrap().is_connected());
}

#[test]
fn pipes_compose_for_every_family() {
    for g in common::families(8).iter().chain(&common::er_corpus(12, 4, 10)) {
        let edges = g.to_edge_list();
        let h = all_pairs_distances(g).unwrap();
        let w = link_dimension(g, &h, SearchOptions::exact()).unwrap().witness;
        let list = w.labels(g.labels()).join(",");
        let check = ok(&["check-set", "-", "--landmarks", &list], &edges);
        assert!(check.contains("construction: true"));
        let csv = ok(&["coords", "-", "--landmarks", &list], &edges);
        let back = ok(&["reconstruct", "-"], &csv);
        assert_eq!(&Graph::parse(&back).unwrap(), g);
    }
}

#[test]
fn upgrade_then_reconstruct() {
    let c5 = "1 2\n2 3\n3 4\n4 5\n5 1\n";
    assert_eq!(ok(&["upgrade", "-", "--landmarks", "1,2"], c5), "1,2,3\n");
    let c7 = ok(&["gen", "--family", "cycle", "--n", "7"], "");
    assert_eq!(ok(&["upgrade", "-", "--landmarks", "1,3"], &c7), "1,3\n");
    let csv = ok(&["coords", "-", "--landmarks", "1,2,3"], c5);
    assert_eq!(Graph::parse(&ok(&["reconstruct", "-"], &csv)).unwrap(), Graph::parse(c5).unwrap());
}

#[test]
fn coords_with_all_landmarks_is_the_distance_matrix() {
    let c5 = "1 2\n2 3\n3 4\n4 5\n5 1\n";
    let csv = ok(&["coords", "-", "--landmarks", "1,2,3,4,5"], c5);
    assert_eq!(
        csv,
        "node,1,2,3,4,5\n1,0,1,2,2,1\n2,1,0,1,2,2\n3,2,1,0,1,2\n4,2,2,1,0,1\n5,1,2,2,1,0\n"
    );
}

#[test]
fn enumerate_lists_candidates() {
    let fig1 = "node,1,2\n1,0,1\n2,1,0\n3,2,1\n4,2,2\n5,1,2\n";
    let out = ok(&["reconstruct", "-", "--enumerate"], fig1);
    assert!(out.starts_with("# count: 2 (limit 10)\n"));
    assert_eq!(out.matches("# candidate").count(), 2);
    let out = ok(&["--json", "reconstruct", "-", "--enumerate", "--limit", "1"], fig1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 1);
    let (code, out, _) = linkdim(&["reconstruct", "-"], fig1);
    assert_eq!((code, out.as_str()), (3, ""));
}

#[test]
fn bounds_output() {
    let out = ok(&["bounds", "-", "--m", "1"], "1 2\n2 3\n3 4\n4 5\n5 1\n");
    assert_eq!(kv(&out, "link_lower_bound"), "2");
    assert_eq!(kv(&out, "metric-dimension.holds_at_m"), "false");
    let out = ok(&["--json", "bounds", "--n", "5", "--l", "10", "--d", "1", "--ndmax", "4"], "");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["bounds"][3]["name"], "landmark-degree");
    assert_eq!(v["bounds"][3]["minimal_m"], 3);
}

#[test]
fn exit_code_contract() {
    let c5 = "1 2\n2 3\n3 4\n4 5\n5 1\n";
    let cases: &[(&[&str], &str, i32)] = &[
        (&["gen", "--family", "er", "--n", "10"], "", 1),
        (&["gen", "--family", "cycle", "--n", "2"], "", 1),
        (&["dims"], "", 1),
        (&["bounds"], "", 1),
        (&["dims", "-"], "a b\nc d\n", 2),
        (&["check-set", "-", "--landmarks", "1"], "x y z\n", 2),
        (&["coords", "-", "--landmarks", "6"], c5, 2),
        (&["reconstruct", "-"], "node,1\n1,0\n2,0\n", 2),
        (&["upgrade", "-", "--landmarks", "1"], c5, 3),
        (&["reconstruct", "-"], "node,1\n1,0\n2,1\n3,3\n", 3),
        (&["check-set", "-", "--landmarks", "1"], c5, 0),
    ];
    for (args, input, want) in cases {
        let (code, _, err) = linkdim(args, input);
        assert_eq!(code, *want, "{args:?}: {err}");
    }
}
