#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn fixture(name: &str) -> String {
    fixtures().join(name).to_string_lossy().into_owned()
}

pub fn mwidth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mwidth"))
        .args(args)
        .current_dir(std::env::temp_dir())
        .output()
        .expect("binary runs")
}

/// A shipped fixture run: golden file stem, subcommand arguments (fixture
/// names are resolved against the fixtures directory).
pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
}

pub const CASES: &[Case] = &[
    Case { name: "widths_disjoint_triple", args: &["widths", "@disjoint_triple.json"] },
    Case { name: "widths_empty", args: &["widths", "@empty_intervals.json"] },
    Case { name: "widths_staggered", args: &["widths", "@staggered.json"] },
    Case { name: "widths_rational", args: &["widths", "@rational.json"] },
    Case { name: "widths_path_subtrees", args: &["widths", "@path_subtrees.json"] },
    Case { name: "widths_custom_relation", args: &["widths", "@custom_relation.json"] },
    Case { name: "widths_ptree", args: &["widths", "@ptree_three_edges.json"] },
    Case { name: "widths_family", args: &["widths", "@family.json"] },
    Case { name: "tree_reduce_path", args: &["tree-reduce", "@path_subtrees.json"] },
    Case { name: "tree_reduce_star", args: &["tree-reduce", "@star_disjoint.json"] },
    Case { name: "interval_cert_chain", args: &["interval-cert", "@chain.json"] },
    Case { name: "interval_cert_rational", args: &["interval-cert", "@rational.json"] },
    Case { name: "interval_iw_nested", args: &["interval-iw", "@nested.json"] },
    Case { name: "interval_iw_staggered", args: &["interval-iw", "@staggered.json"] },
    Case { name: "ptree_three_edges", args: &["ptree", "@ptree_three_edges.json"] },
    Case { name: "ptree_konig", args: &["ptree", "@ptree_konig.json"] },
    Case { name: "power_p4_k2", args: &["power", "--k", "2", "@p4.json"] },
    Case { name: "power_poset_k1", args: &["power", "--k", "1", "@poset.json"] },
    Case { name: "power_poset_k2", args: &["power", "--k", "2", "@poset.json"] },
    Case { name: "power_chain_k2", args: &["power", "--k", "2", "@chain.json"] },
    Case { name: "check_tree_equality", args: &["check", "tree-equality", "--trials", "25", "--seed", "7"] },
    Case { name: "check_imw_iw", args: &["check", "imw-iw", "--trials", "25", "--seed", "7"] },
    Case { name: "check_replay", args: &["check", "imw-iw", "--replay", "@staggered.json"] },
    Case { name: "gen_tree", args: &["gen", "tree", "--seed", "5"] },
    Case { name: "gen_subtree", args: &["gen", "subtree", "--seed", "5", "--relation", "custom"] },
    Case { name: "gen_intervals", args: &["gen", "intervals", "--seed", "5"] },
    Case { name: "gen_point_tree", args: &["gen", "point-tree", "--seed", "5"] },
    Case { name: "gen_poset", args: &["gen", "poset", "--seed", "5"] },
    Case { name: "gen_family", args: &["gen", "family", "--seed", "5"] },
];

impl Case {
    pub fn argv(&self) -> Vec<String> {
        let mut argv = vec!["--deterministic".to_string()];
        argv.extend(self.args.iter().map(|a| match a.strip_prefix('@') {
            Some(file) => fixture(file),
            None => a.to_string(),
        }));
        argv
    }

    pub fn run(&self) -> Output {
        let argv = self.argv();
        mwidth(&argv.iter().map(String::as_str).collect::<Vec<_>>())
    }

    pub fn golden_path(&self) -> PathBuf {
        fixtures().join("golden").join(format!("{}.json", self.name))
    }
}

/// Names of the cases whose output differs from the stored golden file.
/// With `MWIDTH_UPDATE_GOLDEN` set, rewrites the golden files instead.
pub fn golden_mismatches() -> Vec<String> {
    let update = std::env::var_os("MWIDTH_UPDATE_GOLDEN").is_some();
    let mut bad = Vec::new();
    for case in CASES {
        let out = case.run();
        if !out.status.success() {
            bad.push(format!("{} exited with {:?}", case.name, out.status.code()));
            continue;
        }
        if update {
            std::fs::write(case.golden_path(), &out.stdout).expect("golden file writable");
            continue;
        }
        match std::fs::read(case.golden_path()) {
            Ok(expected) if expected == out.stdout => {}
            Ok(_) => bad.push(format!("{} differs from its golden file", case.name)),
            Err(e) => bad.push(format!("{}: {e}", case.name)),
        }
    }
    bad
}
