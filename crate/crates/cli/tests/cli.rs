use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::NamedTempFile;

fn tree_span(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tree-span"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // the process may exit before reading its input
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

const STAR: &str = "4\n0 1\n0 2\n0 3\n";
const SPIDER_222: &str = "7\n0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n";

#[test]
fn span_of_star_text_and_json() {
    let o = tree_span(&["span"], STAR);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("span: 1"));
    assert!(text.contains("kind: triod"));
    assert!(text.contains("witness_vertex: 0"));

    let o = tree_span(&["span", "--json"], STAR);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["span"], 1);
    assert_eq!(v["kind"], "triod");
    assert_eq!(v["witness_vertex"], 0);
    assert_eq!(v["eta"], 1);
    assert_eq!(v["radius"], 1);
}

#[test]
fn span_of_edge_and_single_vertex() {
    let v: Value = serde_json::from_str(&stdout(&tree_span(&["span", "--json"], "2\n0 1\n"))).unwrap();
    assert_eq!((v["span"].as_u64(), v["kind"].as_str()), (Some(1), Some("path")));
    let v: Value = serde_json::from_str(&stdout(&tree_span(&["span", "--json"], "1\n"))).unwrap();
    assert_eq!((v["span"].as_u64(), v["kind"].as_str()), (Some(0), Some("trivial")));
    assert!(v["witness_vertex"].is_null());
}

#[test]
fn edge_span_matches_vertex_span() {
    let f = file(SPIDER_222);
    let path = f.path().to_str().unwrap();
    let a = stdout(&tree_span(&["span", "--json", "--input", path], ""));
    let b = stdout(&tree_span(&["edge-span", "--json", "--input", path], ""));
    assert_eq!(a, b);
}

#[test]
fn bad_input_exits_with_2() {
    let o = tree_span(&["span"], "3\n0 1\n0 1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("duplicate edge"));
    let o = tree_span(&["span"], "3\n0 1\n1 2\n2 0\n");
    assert_eq!(o.status.code(), Some(2));
    let o = tree_span(&["span", "--input", "/nonexistent/tree.txt"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn witness_for_single_edge() {
    let o = tree_span(&["witness"], "2\n0 1\n");
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), r#"{"claimed_span":1,"A":[0,1],"B":[1,0]}"#);
}

#[test]
fn witness_round_trips_through_verify() {
    for (tree, span) in [(STAR, 1), (SPIDER_222, 2)] {
        let o = tree_span(&["witness"], tree);
        assert!(o.status.success());
        let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(doc["claimed_span"], span);

        let g = file(tree);
        let o = tree_span(&["verify", "--input", g.path().to_str().unwrap(), "--json"], &stdout(&o));
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(report["min_distance"], span);
    }
}

#[test]
fn witness_replayed_on_other_tree_fails() {
    let w = stdout(&tree_span(&["witness"], STAR));
    let walk = file(&w);
    let o = tree_span(&["verify", "--walk", walk.path().to_str().unwrap()], "4\n0 1\n1 2\n2 3\n");
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("result: fail"));
    assert!(text.contains("violation"));
}

#[test]
fn truncated_walk_fails_surjectivity() {
    let walk = file(r#"{"claimed_span":1,"A":[0],"B":[1]}"#);
    let o = tree_span(&["verify", "--walk", walk.path().to_str().unwrap(), "--json"], "3\n0 1\n1 2\n");
    assert_eq!(o.status.code(), Some(1));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["surjective_a"], false);
}

#[test]
fn verify_rejects_malformed_json_and_ids() {
    let walk = file(r#"{"claimed_span":1,"A":[0,1]"#);
    let o = tree_span(&["verify", "--walk", walk.path().to_str().unwrap()], "2\n0 1\n");
    assert_eq!(o.status.code(), Some(2));
    let walk = file(r#"{"claimed_span":1,"A":[0,7],"B":[1,0]}"#);
    let o = tree_span(&["verify", "--walk", walk.path().to_str().unwrap()], "2\n0 1\n");
    assert_eq!(o.status.code(), Some(2));
    let o = tree_span(&["verify"], "2\n0 1\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_subcommand() {
    let o = tree_span(&["oracle"], SPIDER_222);
    assert_eq!(stdout(&o).trim(), "span: 2");
    // C_6 is not a tree; the oracle still applies
    let o = tree_span(&["oracle", "--json"], "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    assert_eq!(stdout(&o).trim(), r#"{"span":3}"#);
    let o = tree_span(&["oracle", "--cap", "3"], SPIDER_222);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_is_deterministic_and_parses() {
    let a = stdout(&tree_span(&["gen", "--n", "10", "--seed", "7"], ""));
    let b = stdout(&tree_span(&["gen", "--n", "10", "--seed", "7"], ""));
    assert_eq!(a, b);
    let o = tree_span(&["span"], &a);
    assert!(o.status.success());
    let c = stdout(&tree_span(&["gen", "--n", "10", "--seed", "8"], ""));
    assert_ne!(a, c);
    assert_eq!(tree_span(&["gen"], "").status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let o = tree_span(&["enumerate", "--n", "3"], "");
    assert_eq!(stdout(&o).matches("# tree").count(), 3);
    let o = tree_span(&["enumerate", "--n", "4", "--json"], "");
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 16);
    assert!(lines.iter().all(|t| t["edges"].as_array().unwrap().len() == 3));
    assert_eq!(tree_span(&["enumerate", "--n", "9"], "").status.code(), Some(2));
}

#[test]
fn enumerated_trees_each_parse() {
    let o = tree_span(&["enumerate", "--n", "5"], "");
    let text = stdout(&o);
    let trees: Vec<&str> = text.split("# tree").skip(1).collect();
    assert_eq!(trees.len(), 125);
    for chunk in trees {
        let body = chunk.split_once('\n').unwrap().1;
        assert!(tree_span(&["span"], body).status.success());
    }
}

#[test]
fn bench_rows_and_ratios() {
    let o = tree_span(&["bench", "--sizes", "1000,2000,4000", "--trials", "1", "--json"], "");
    let rows: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows[0]["ratio"].is_null());
    assert!(rows[1]["ratio"].is_number() && rows[2]["ratio"].is_number());

    let o = tree_span(&["bench", "--sizes", "500", "--trials", "1"], "");
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().nth(1).unwrap().trim_end().ends_with('-'));

    let o = tree_span(&["bench", "--sizes", "2000,1000"], "");
    assert_eq!(o.status.code(), Some(2));
}
