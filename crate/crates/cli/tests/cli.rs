use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn chipfire(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chipfire"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (i32, Vec<Value>) {
    let out = chipfire(args);
    let records = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is one JSON object"))
        .collect();
    (out.status.code().unwrap(), records)
}

fn path(name: &str) -> String {
    data(name).to_str().unwrap().to_owned()
}

#[test]
fn group_of_fan() {
    let (code, records) = run(&["group", &path("fan.txt")]);
    assert_eq!(code, 0);
    let r = &records[0]["result"];
    assert_eq!(r["group"]["invariant_factors"], serde_json::json!([55]));
    assert_eq!(r["group"]["order"], "55");
    assert_eq!(r["spanning_trees"], "55");
    assert_eq!(r["vertices"], 6);
}

#[test]
fn group_of_k4_and_k1() {
    let (_, records) = run(&["group", &path("k4.txt")]);
    assert_eq!(records[0]["result"]["group"]["invariant_factors"], serde_json::json!([4, 4]));
    assert_eq!(records[0]["result"]["group"]["order"], "16");

    let (code, records) = run(&["group", &path("k1.txt")]);
    assert_eq!(code, 0);
    let r = &records[0]["result"];
    assert_eq!(r["group"]["invariant_factors"], serde_json::json!([]));
    assert_eq!(r["group"]["order"], "1");
    assert_eq!(r["char_poly_text"], "1");
}

#[test]
fn cone_and_join_commands() {
    let (_, records) = run(&["cone", &path("p5.txt"), "1"]);
    assert_eq!(records[0]["result"]["group"]["order"], "55");

    let (_, records) = run(&["cone", &path("k1.txt"), "5"]);
    assert_eq!(records[0]["result"]["vertices"], 6);
    assert_eq!(
        records[0]["result"]["group"]["invariant_factors"],
        serde_json::json!([6, 6, 6, 6])
    );

    let (code, records) = run(&["join", &path("k1.txt"), &path("k1.txt")]);
    assert_eq!(code, 0);
    assert_eq!(records[0]["result"]["vertices"], 2);
    assert_eq!(records[0]["result"]["group"]["order"], "1");

    let out = chipfire(&["join", &path("k1.txt")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cone_flag_composes() {
    let (_, direct) = run(&["cone", &path("goel.txt"), "3"]);
    let (_, flagged) = run(&["--cone", "2", "cone", &path("goel.txt"), "1"]);
    assert_eq!(direct[0]["result"], flagged[0]["result"]);
    let (_, grouped) = run(&["group", "--cone", "1", &path("p5.txt")]);
    assert_eq!(grouped[0]["result"]["group"]["order"], "55");
}

#[test]
fn removed_vertex_changes_nothing_observable_but_the_field() {
    let (_, a) = run(&["group", &path("goel.txt")]);
    let (_, b) = run(&["group", "--remove-vertex", "4", &path("goel.txt")]);
    assert_eq!(a[0]["result"]["group"], b[0]["result"]["group"]);
    assert_eq!(b[0]["result"]["removed_vertex"], 4);
    let out = chipfire(&["group", "--remove-vertex", "9", &path("goel.txt")]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_goel_cone() {
    let (code, records) = run(&["verify", &path("goel.txt"), "--n", "3", "--which", "cone"]);
    assert_eq!(code, 0);
    let r = &records[0]["result"];
    assert_eq!(r["pic0"]["invariant_factors"], serde_json::json!([144, 8208]));
    assert_eq!(r["subgroup"]["invariant_factors"], serde_json::json!([9, 9]));
    assert_eq!(r["order_formula_holds"], true);
    assert_eq!(r["subgroup_is_expected"], true);
    assert_eq!(r["splits"], false);
}

#[test]
fn verify_tree_and_eigen() {
    let (code, records) = run(&["verify", &path("three_leaf_tree.txt"), "--n", "1", "--which", "tree"]);
    assert_eq!(code, 0);
    let r = &records[0]["result"];
    assert_eq!(r["leaf_count"], 3);
    assert_eq!(r["h_generators"], 1);
    assert_eq!(r["holds"], true);

    let (code, records) = run(&["verify", &path("p2.txt"), "--n", "1", "--which", "eigen"]);
    assert_eq!(code, 0);
    assert_eq!(records[0]["result"]["holds"], true);

    let out = chipfire(&["verify", &path("goel.txt"), "--which", "tree"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_join_uses_all_files() {
    let (code, records) = run(&["verify", &path("goel.txt"), &path("p5.txt"), &path("k1.txt"), "--which", "join"]);
    assert_eq!(code, 0);
    assert_eq!(records.len(), 1);
    let r = &records[0]["result"];
    assert_eq!(r["factor_vertex_counts"], serde_json::json!([6, 5, 1]));
    assert_eq!(r["lhs"], r["rhs"]);
}

#[test]
fn verify_many_files_keeps_input_order() {
    let files = ["k4.txt", "goel.txt", "fan.txt", "p2.txt", "k1.txt", "three_leaf_tree.txt"];
    let mut args: Vec<String> = vec!["verify".into()];
    args.extend(files.iter().map(|f| path(f)));
    args.extend(["--n".into(), "2".into(), "--which".into(), "cone".into()]);
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let (code, records) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(records.len(), files.len());
    for (record, file) in records.iter().zip(files) {
        assert!(record["input_summary"].as_str().unwrap().contains(file));
        assert_eq!(record["result"]["holds"], true);
    }
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 2\n0 1\n").unwrap();
    let out = chipfire(&["group", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("expected 2 edges"));

    let out = chipfire(&["group", dir.path().join("missing.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = chipfire(&["group", &path("disconnected.txt")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not connected"));

    let out = chipfire(&["cone", &path("p5.txt"), "0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["verify", "--which", "cone", "--n", "3"],
        vec!["group", "--format", "table"],
    ] {
        let mut args = args;
        let goel = path("goel.txt");
        args.push(&goel);
        let first = chipfire(&args).stdout;
        assert_eq!(first, chipfire(&args).stdout);
    }
}

#[test]
fn table_format() {
    let out = chipfire(&["group", "--format", "table", &path("k4.txt")]);
    let text = String::from_utf8(out.stdout).unwrap();
    let first = text.lines().next().unwrap();
    assert!(first.starts_with("command"));
    assert!(text.contains("result.group.order"));
    assert!(text.lines().any(|l| l.starts_with("result.group.invariant_factors") && l.ends_with("[4,4]")));
}

#[test]
fn sample_is_seeded() {
    let args = ["--seed", "11", "sample", "--which", "cone", "--count", "30", "--n", "3"];
    let (code, a) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(a[0]["result"]["instances"], 90);
    assert_eq!(a[0]["result"]["failures"], 0);
    let (_, b) = run(&args);
    assert_eq!(a, b);
    for which in ["tree", "join", "eigen"] {
        let (code, r) = run(&["sample", "--which", which, "--count", "20", "--max-vertices", "5"]);
        assert_eq!(code, 0, "{which}");
        assert_eq!(r[0]["result"]["holds"], true);
    }
}

#[test]
fn huge_orders_are_exact() {
    // K_1 coned 29 times is K_30 with Pic⁰ = (Z/30)^28; order 30^28 overflows u64
    let (_, records) = run(&["cone", &path("k1.txt"), "29"]);
    let r = &records[0]["result"];
    assert_eq!(r["group"]["order"], format!("22876792454961{}", "0".repeat(28)));
    let factors = r["group"]["invariant_factors"].as_array().unwrap();
    assert_eq!(factors.len(), 28);
    assert!(factors.iter().all(|f| f == 30));
}
