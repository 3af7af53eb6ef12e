mod support;

use serde_json::Value;

use support::{fixture, mwidth};

fn report(args: &[&str]) -> (Option<i32>, Value) {
    let out = mwidth(args);
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code(), json)
}

#[test]
fn disjoint_triple_widths() {
    let (code, r) = report(&["--deterministic", "widths", &fixture("disjoint_triple.json")]);
    assert_eq!(code, Some(0));
    for key in ["w", "mw", "iw", "imw"] {
        assert_eq!(r[key], 3, "{key}");
    }
    assert_eq!(r["witness_valid"], true);
}

#[test]
fn empty_family_is_all_zeros() {
    let (code, r) = report(&["--deterministic", "widths", &fixture("empty_intervals.json")]);
    assert_eq!(code, Some(0));
    for key in ["w", "mw", "iw", "imw"] {
        assert_eq!(r[key], 0, "{key}");
    }
}

#[test]
fn interval_cert_on_overlapping_chain() {
    let (_, r) = report(&["--deterministic", "interval-cert", &fixture("chain.json")]);
    assert_eq!((r["width"].clone(), r["R"].clone(), r["C"].clone()), (1.into(), serde_json::json!([0]), serde_json::json!([2])));
}

#[test]
fn ptree_three_edge_fixture() {
    let (_, r) = report(&["--deterministic", "ptree", &fixture("ptree_three_edges.json")]);
    assert_eq!((r["sigma"].as_u64(), r["nu"].as_u64(), r["certificate_size"].as_u64()), (Some(2), Some(2), Some(2)));
    assert_eq!(r["witness_valid"], true);
}

#[test]
fn power_on_p4() {
    let (_, r) = report(&["--deterministic", "power", "--k", "2", &fixture("p4.json")]);
    assert_eq!((r["gamma"].as_u64(), r["rho"].as_u64()), (Some(2), Some(2)));
}

#[test]
fn timing_only_without_deterministic() {
    let (_, r) = report(&["widths", &fixture("chain.json")]);
    assert!(r["elapsed_ms"].is_number());
    let (_, r) = report(&["--deterministic", "widths", &fixture("chain.json")]);
    assert!(r.get("elapsed_ms").is_none());
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = mwidth(&["--deterministic", "--out", path.to_str().unwrap(), "interval-iw", &fixture("staggered.json")]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let stdout = mwidth(&["--deterministic", "interval-iw", &fixture("staggered.json")]).stdout;
    assert_eq!(std::fs::read(&path).unwrap(), stdout);
}

#[test]
fn exit_code_contract() {
    assert_eq!(mwidth(&["widths", &fixture("malformed.json")]).status.code(), Some(1));
    assert_eq!(mwidth(&["widths", "/nonexistent/instance.json"]).status.code(), Some(1));
    assert_eq!(mwidth(&["widths", &fixture("poset.json")]).status.code(), Some(1));
    assert_eq!(mwidth(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(mwidth(&["check", "no-such-theorem"]).status.code(), Some(1));
    assert_eq!(mwidth(&["--cap", "2", "widths", &fixture("disjoint_triple.json")]).status.code(), Some(2));
    assert_eq!(mwidth(&["--cap", "1", "check", "tree-equality", "--trials", "5"]).status.code(), Some(2));
    assert_eq!(mwidth(&["check", "konig", "--replay", &fixture("chain.json")]).status.code(), Some(1));
    assert_eq!(mwidth(&["--help"]).status.code(), Some(0));
}

#[test]
fn violation_writes_a_replayable_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cx.json");
    let path = path.to_str().unwrap();
    let out = mwidth(&["--deterministic", "check", "imw-iw-literal", "--trials", "60", "--seed", "1", "--counterexample", path]);
    assert_eq!(out.status.code(), Some(4));
    let summary: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(summary["failed"].as_u64().unwrap() > 0);
    assert_eq!(summary["failures"][0]["kind"], "violation");
    assert_eq!(std::fs::read_to_string(path).map(|t| serde_json::from_str::<Value>(&t).unwrap()).unwrap(), summary["failures"][0]["instance"]);
    assert_eq!(mwidth(&["check", "imw-iw-literal", "--replay", path]).status.code(), Some(4));
    assert_eq!(mwidth(&["check", "imw-iw", "--replay", path]).status.code(), Some(0));
    assert_eq!(mwidth(&["interval-iw", path]).status.code(), Some(0));
}

#[test]
fn sequential_and_parallel_reports_match() {
    let args = ["--deterministic", "check", "sigma-nu", "--trials", "30", "--seed", "4"];
    let par = mwidth(&args).stdout;
    let mut seq_args = args.to_vec();
    seq_args.push("--sequential");
    assert_eq!(mwidth(&seq_args).stdout, par);
}

#[test]
fn generated_instances_feed_the_solvers() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, cmd) in [("subtree", "tree-reduce"), ("intervals", "interval-cert"), ("point-tree", "ptree"), ("poset", "power"), ("family", "widths")] {
        let path = dir.path().join(format!("{kind}.json"));
        let p = path.to_str().unwrap();
        assert!(mwidth(&["--out", p, "gen", kind, "--seed", "3"]).status.success());
        let (code, r) = report(&["--deterministic", cmd, p]);
        assert_eq!(code, Some(0), "{kind}");
        assert_eq!(r["witness_valid"], true, "{kind}");
    }
}
