//! `mwidth`: widths, certificates and theorem checks on JSON instances.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mwidth::checks::Theorem;
use mwidth::generators::{
    random_hypergraph_family, random_intervals, random_point_tree, random_poset, random_subtree_instance,
    random_tree, FamilyParams, IntervalParams, PointTreeParams, RelationKind, SubtreeParams,
};
use mwidth::powers::DEFAULT_GRAPH_CAP;
use mwidth::{Caps, Error, Execution, Instance};

use report::{CheckArgs, CmdResult, Outcome, Status};

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  1  malformed input or usage error
  2  an instance exceeds a size cap (raise it with --cap)
  3  some width is undefined because no admissible cover exists
  4  a property or certificate check failed (counterexample written)";

#[derive(Parser)]
#[command(name = "mwidth", version, about = "Width parameters of intersection systems", after_help = EXIT_CODES)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Emit JSON (the only format; accepted for scripts that pass it).
    #[arg(long, global = true)]
    json: bool,
    /// Leave out timing so output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Override every exhaustive-search size guard.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// w, mw, iw and imw with witnesses.
    Widths { file: PathBuf },
    /// Reduce h1 of a subtree instance to a matching of equal width.
    TreeReduce { file: PathBuf },
    /// Greedy 2-remote set and cover of equal size for intervals.
    IntervalCert { file: PathBuf },
    /// Matching M with iw(M, F) = iw(F) for intervals.
    IntervalIw { file: PathBuf },
    /// σ, ν and the constructive cover of a point-tree hypergraph.
    Ptree { file: PathBuf },
    /// γ_k, ρ_k and the power graph of a tree, poset or interval order.
    Power {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Run a seeded batch of randomized theorem checks.
    Check(CheckOpts),
    /// Print a random instance.
    Gen(GenOpts),
}

#[derive(Args)]
struct CheckOpts {
    /// Theorem id, e.g. tree-equality or imw-iw.
    theorem: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long)]
    max_size: Option<usize>,
    /// Check a single instance file instead of generating a batch.
    #[arg(long, value_name = "FILE")]
    replay: Option<PathBuf>,
    /// Where to write the first failing instance.
    #[arg(long, value_name = "FILE")]
    counterexample: Option<PathBuf>,
    /// Run trials on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Tree,
    Subtree,
    Intervals,
    PointTree,
    Poset,
    Family,
}

#[derive(Args)]
struct GenOpts {
    #[arg(value_enum)]
    kind: GenKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Main size: vertices, intervals, edges, poset elements or members.
    #[arg(long)]
    size: Option<usize>,
    /// Relation of a subtree instance.
    #[arg(long, value_enum, default_value = "total")]
    relation: GenRelation,
    /// Point-tree edges use single-vertex trees.
    #[arg(long)]
    singleton: bool,
    /// Comparability density of a poset.
    #[arg(long, default_value_t = 0.3)]
    density: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenRelation {
    Total,
    Disjointness,
    Custom,
}

fn read_instance(path: &Path) -> Result<Instance, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
    Instance::from_json(&text)
}

fn caps(global: &GlobalOpts) -> Caps {
    global.cap.map(Caps::uniform).unwrap_or_default()
}

fn generate(opts: &GenOpts) -> Instance {
    let size = |default: usize| opts.size.unwrap_or(default);
    match opts.kind {
        GenKind::Tree => Instance::Tree(random_tree(opts.seed, size(9).max(1))),
        GenKind::Subtree => {
            let relation = match opts.relation {
                GenRelation::Total => RelationKind::Total,
                GenRelation::Disjointness => RelationKind::Disjointness,
                GenRelation::Custom => RelationKind::Custom,
            };
            let params = SubtreeParams {
                n: size(9),
                h2_size: 8,
                h1_fraction: 1.0,
                relation,
            };
            Instance::Subtree(random_subtree_instance(opts.seed, &params))
        }
        GenKind::Intervals => {
            let params = IntervalParams {
                count: size(11),
                coord_range: 24,
                max_len: 6,
                tie_bias: 0.25,
            };
            Instance::Intervals(random_intervals(opts.seed, &params))
        }
        GenKind::PointTree => {
            let params = PointTreeParams {
                x_count: 3,
                n: 7,
                edge_count: size(9),
                singleton_only: opts.singleton,
            };
            Instance::PointTree(random_point_tree(opts.seed, &params))
        }
        GenKind::Poset => Instance::Poset(random_poset(opts.seed, size(9), opts.density.clamp(0.0, 1.0))),
        GenKind::Family => {
            let params = FamilyParams {
                vertices: 6,
                members: size(6),
                max_edges: 4,
                max_edge_size: 3,
            };
            Instance::Family(random_hypergraph_family(opts.seed, &params))
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    let g = &cli.global;
    match &cli.command {
        Command::Widths { file } => report::widths(&read_instance(file)?, caps(g)),
        Command::TreeReduce { file } => report::tree_reduce(&read_instance(file)?, caps(g)),
        Command::IntervalCert { file } => report::interval_cert(&read_instance(file)?),
        Command::IntervalIw { file } => report::interval_iw(&read_instance(file)?, caps(g)),
        Command::Ptree { file } => report::ptree(&read_instance(file)?, caps(g)),
        Command::Power { file, k } => {
            report::power(&read_instance(file)?, *k, g.cap.unwrap_or(DEFAULT_GRAPH_CAP))
        }
        Command::Check(opts) => {
            let theorem = Theorem::from_id(&opts.theorem).ok_or_else(|| {
                let known: Vec<&str> = Theorem::ALL.iter().map(|t| t.id()).collect();
                Error::Malformed(format!("unknown theorem {:?}; known: {}", opts.theorem, known.join(", ")))
            })?;
            let caps = g.cap.map(Caps::uniform);
            if let Some(file) = &opts.replay {
                let inst = read_instance(file)?;
                if inst.kind() != theorem.instance_kind() {
                    return Err(Error::Malformed(format!(
                        "{} is checked on {} instances, not {}",
                        theorem.id(),
                        theorem.instance_kind(),
                        inst.kind()
                    )));
                }
                return Ok(report::replay(theorem, &inst, caps));
            }
            Ok(report::check(&CheckArgs {
                theorem,
                seed: opts.seed,
                trials: opts.trials,
                max_size: opts.max_size,
                caps,
                exec: if opts.sequential {
                    Execution::Sequential
                } else {
                    Execution::Parallel
                },
            }))
        }
        Command::Gen(opts) => Ok(Outcome {
            report: generate(opts).to_value(),
            status: Status::Ok,
            counterexample: None,
        }),
    }
}

fn emit(global: &GlobalOpts, value: &Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).expect("values serialize") + "\n";
    match &global.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn counterexample_path(cli: &Cli) -> PathBuf {
    match &cli.command {
        Command::Check(opts) => opts
            .counterexample
            .clone()
            .unwrap_or_else(|| PathBuf::from(format!("counterexample-{}.json", opts.theorem))),
        _ => PathBuf::from("counterexample.json"),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SizeCapExceeded { .. } => 2,
        Error::Uncoverable => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            let report = json!({ "error": e.to_string() });
            if let Err(msg) = emit(&cli.global, &report) {
                eprintln!("mwidth: {msg}");
            }
            eprintln!("mwidth: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let mut report = outcome.report;
    if !cli.global.deterministic && !matches!(cli.command, Command::Gen(_)) {
        if let Value::Object(map) = &mut report {
            map.insert("elapsed_ms".into(), json!(start.elapsed().as_secs_f64() * 1e3));
        }
    }
    if let Some(instance) = &outcome.counterexample {
        let path = counterexample_path(&cli);
        let text = serde_json::to_string_pretty(instance).expect("values serialize") + "\n";
        match fs::write(&path, text) {
            Ok(()) => eprintln!("mwidth: counterexample written to {}", path.display()),
            Err(e) => eprintln!("mwidth: cannot write {}: {e}", path.display()),
        }
    }
    if let Err(msg) = emit(&cli.global, &report) {
        eprintln!("mwidth: {msg}");
        return ExitCode::from(1);
    }
    match outcome.status {
        Status::Ok => ExitCode::SUCCESS,
        Status::Uncoverable => ExitCode::from(3),
        Status::Violated => ExitCode::from(4),
        Status::Failed(e) => ExitCode::from(exit_code(&e)),
    }
}
