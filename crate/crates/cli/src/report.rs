use serde_json::{json, Map, Value};

use mwidth::certificate::{covers, is_matching, validate_cover, validate_matching_width};
use mwidth::checks::{self, CheckConfig, CheckFailure, CheckSummary, Theorem};
use mwidth::intervals::{greedy_certificates, is_two_remote, iw_witness_matching, radius1_partition};
use mwidth::model::{IntersectionSystem, IntervalFamily, Poset, Relation, SimpleGraph};
use mwidth::oracle::{
    cover_width, enumerate_matchings, independent_matching_width, independent_width, matching_width,
};
use mwidth::point_tree::{pool, sigma, sigma_certificate, PoolElement};
use mwidth::powers::{
    gamma_k, graph_power, incomparability_graph, interval_order, is_diameter_cover, is_k_independent,
    rho_k, star_order,
};
use mwidth::reduction::reduce_to_matching;
use mwidth::{Caps, Error, Execution, Instance, WidthCertificate, WidthQuery};

/// What a subcommand produced: the report and the exit status it implies.
pub struct Outcome {
    pub report: Value,
    pub status: Status,
    /// Instance to store when a property fails.
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Ok,
    Uncoverable,
    Violated,
    /// A batch trial stopped on a solver error.
    Failed(Error),
}

impl Outcome {
    fn checked(report: Value, valid: bool) -> Self {
        Outcome {
            report,
            status: if valid { Status::Ok } else { Status::Violated },
            counterexample: None,
        }
    }
}

pub type CmdResult = Result<Outcome, Error>;

fn wrong_kind(cmd: &str, inst: &Instance) -> Error {
    Error::Malformed(format!("{cmd} does not accept a {} instance", inst.kind()))
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

type Solver = fn(&WidthQuery<'_>) -> mwidth::Result<WidthCertificate>;

/// `w`, `mw`, `iw`, `imw` with witnesses. An uncoverable parameter is
/// reported as `null` and listed under `"uncoverable"`.
fn width_report(kind: &str, query: &WidthQuery<'_>) -> CmdResult {
    // (name, solver, disjointness relation, matching-width certificate)
    let solvers: [(&str, Solver, bool, bool); 4] = [
        ("w", cover_width, false, false),
        ("mw", matching_width, false, true),
        ("iw", independent_width, true, false),
        ("imw", independent_matching_width, true, true),
    ];
    let mut report = Map::new();
    let mut witnesses = Map::new();
    let mut uncoverable = Vec::new();
    let mut valid = true;
    for (name, solve, independent, over_matchings) in solvers {
        let relation = if independent {
            Relation::Disjointness
        } else {
            query.relation.clone()
        };
        match solve(query) {
            Ok(cert) => {
                valid &= if over_matchings {
                    validate_matching_width(query.system, &query.targets, &query.pool, &relation, &cert)
                } else {
                    let cover = cert.cover.clone().unwrap_or_default();
                    validate_cover(query.system, &query.targets, &query.pool, &relation, cert.value, &cover)
                };
                report.insert(name.into(), json!(cert.value));
                witnesses.insert(name.into(), to_value(&cert));
            }
            Err(Error::Uncoverable) => {
                report.insert(name.into(), Value::Null);
                uncoverable.push(name);
            }
            Err(e) => return Err(e),
        }
    }
    report.insert("kind".into(), json!(kind));
    report.insert("witnesses".into(), Value::Object(witnesses));
    report.insert("witness_valid".into(), json!(valid));
    let status = if !valid {
        Status::Violated
    } else if uncoverable.is_empty() {
        Status::Ok
    } else {
        report.insert("uncoverable".into(), json!(uncoverable));
        Status::Uncoverable
    };
    Ok(Outcome {
        report: Value::Object(report),
        status,
        counterexample: None,
    })
}

pub fn widths(inst: &Instance, caps: Caps) -> CmdResult {
    match inst {
        Instance::Intervals(f) => {
            let system = IntersectionSystem::from_intervals(f);
            width_report("intervals", &WidthQuery::whole(&system, Relation::Total).with_caps(caps))
        }
        Instance::Subtree(s) => {
            let system = s.system();
            let q = WidthQuery::new(&system, s.h1().to_vec(), (0..s.h2().len()).collect(), s.relation().clone());
            width_report("subtree", &q.with_caps(caps))
        }
        Instance::PointTree(h) => {
            let p = pool(h);
            let q = WidthQuery::new(&p.system, p.targets.clone(), p.pool.clone(), Relation::Total);
            width_report("point_tree", &q.with_caps(caps))
        }
        Instance::Family(f) => {
            let fam = f.to_hypergraph_family()?;
            width_report("family", &WidthQuery::whole(&fam.system, Relation::Total).with_caps(caps))
        }
        other => Err(wrong_kind("widths", other)),
    }
}

pub fn tree_reduce(inst: &Instance, caps: Caps) -> CmdResult {
    let Instance::Subtree(s) = inst else {
        return Err(wrong_kind("tree-reduce", inst));
    };
    let red = reduce_to_matching(s, caps)?;
    let system = s.system();
    let q = WidthQuery::new(&system, red.matching.clone(), (0..s.h2().len()).collect(), s.relation().clone())
        .with_caps(caps);
    let full = cover_width(&q.with_targets(s.h1().to_vec()))?;
    let reduced = cover_width(&q)?;
    let cover = reduced.cover.clone().unwrap_or_default();
    let valid = red.matching.iter().all(|e| s.h1().contains(e))
        && is_matching(&system, &red.matching)
        && reduced.value == red.width
        && full.value == red.width
        && validate_cover(&system, &q.targets, &q.pool, &q.relation, reduced.value, &cover);
    let report = json!({
        "matching": red.matching,
        "width": red.width,
        "cover": cover,
        "trace": to_value(&red.trace),
        "witness_valid": valid,
    });
    Ok(Outcome::checked(report, valid))
}

fn intervals_of<'a>(cmd: &str, inst: &'a Instance) -> Result<&'a IntervalFamily, Error> {
    match inst {
        Instance::Intervals(f) => Ok(f),
        other => Err(wrong_kind(cmd, other)),
    }
}

pub fn interval_cert(inst: &Instance) -> CmdResult {
    let f = intervals_of("interval-cert", inst)?;
    let g = greedy_certificates(f)?;
    let groups = radius1_partition(f)?;
    let system = IntersectionSystem::from_intervals(f);
    let all: Vec<usize> = (0..f.len()).collect();
    let line = SimpleGraph::line_graph(&system);
    let valid = g.remote.len() == g.cover.len()
        && is_two_remote(&system, &g.remote)
        && covers(&system, &all, &g.cover)
        && groups.len() == g.cover.len()
        && is_diameter_cover(&line, &groups, 2);
    let report = json!({
        "width": g.width(),
        "R": g.remote,
        "C": g.cover,
        "groups": groups,
        "witness_valid": valid,
    });
    Ok(Outcome::checked(report, valid))
}

pub fn interval_iw(inst: &Instance, caps: Caps) -> CmdResult {
    let f = intervals_of("interval-iw", inst)?;
    let m = iw_witness_matching(f)?;
    let system = IntersectionSystem::from_intervals(f);
    let q = WidthQuery::whole(&system, Relation::Total).with_caps(caps);
    let iw = independent_width(&q)?;
    let iw_m = independent_width(&q.with_targets(m.clone()))?;
    let all: Vec<usize> = (0..f.len()).collect();
    let property_p = enumerate_matchings(&system, &all, iw.value.saturating_sub(1))
        .filter(|z| z.len() + 1 == iw.value)
        .all(|z| m.iter().any(|&d| z.iter().all(|&e| !system.meets(d, e))));
    let valid = is_matching(&system, &m) && iw_m.value == iw.value && property_p;
    let report = json!({
        "M": m,
        "iw": iw.value,
        "iw_M": iw_m.value,
        "cover": iw_m.cover,
        "property_p": property_p,
        "witness_valid": valid,
    });
    Ok(Outcome::checked(report, valid))
}

pub fn ptree(inst: &Instance, caps: Caps) -> CmdResult {
    let Instance::PointTree(h) = inst else {
        return Err(wrong_kind("ptree", inst));
    };
    let p = pool(h);
    let s = sigma(h, caps)?;
    let cert = sigma_certificate(h, caps)?;
    let elements: Vec<&PoolElement> = cert.cover.iter().map(|&i| p.element(i)).collect();
    let valid = cert.cover.iter().all(|i| p.pool.contains(i))
        && covers(&p.system, &p.targets, &cert.cover)
        && cert.cover.len() <= cert.nu
        && s.value <= cert.nu;
    let report = json!({
        "sigma": s.value,
        "nu": cert.nu,
        "certificate_size": cert.cover.len(),
        "certificate": to_value(&elements),
        "deficiency": cert.deficiency,
        "y": cert.y,
        "k_width": cert.k_width,
        "witness_valid": valid,
    });
    Ok(Outcome::checked(report, valid))
}

pub fn power(inst: &Instance, k: usize, cap: usize) -> CmdResult {
    let (graph, order): (SimpleGraph, Option<Poset>) = match inst {
        Instance::Tree(t) => (SimpleGraph::from_edges(t.n(), t.edges())?, None),
        Instance::Poset(p) => (incomparability_graph(p), Some(p.clone())),
        Instance::Intervals(f) => {
            let p = interval_order(f);
            (incomparability_graph(&p), Some(p))
        }
        other => return Err(wrong_kind("power", other)),
    };
    let powered = graph_power(&graph, k)?;
    let (gamma, independent) = gamma_k(&graph, k, cap)?;
    let (rho, parts) = rho_k(&graph, k, cap)?;
    let mut valid = is_k_independent(&graph, &independent, k)
        && independent.len() == gamma
        && is_diameter_cover(&graph, &parts, k)
        && parts.len() == rho;
    let mut report = json!({
        "k": k,
        "power_edges": powered.edges(),
        "gamma": gamma,
        "gamma_witness": independent,
        "rho": rho,
        "rho_witness": parts,
    });
    if let Some(p) = order {
        match star_order(&p, &graph, k) {
            Ok(star) => report["star_order"] = json!(star.pairs()),
            Err(e @ (Error::PosetMismatch | Error::LemmaViolation(_))) => {
                valid = false;
                report["star_order_error"] = json!(e.to_string());
            }
            Err(e) => return Err(e),
        }
    }
    report["witness_valid"] = json!(valid);
    Ok(Outcome::checked(report, valid))
}

pub struct CheckArgs {
    pub theorem: Theorem,
    pub seed: u64,
    pub trials: u64,
    pub max_size: Option<usize>,
    pub caps: Option<Caps>,
    pub exec: Execution,
}

fn summary_report(s: &CheckSummary) -> Value {
    to_value(s)
}

pub fn check(args: &CheckArgs) -> Outcome {
    let mut cfg = CheckConfig::new(args.theorem, args.seed, args.trials);
    cfg.max_size = args.max_size;
    cfg.exec = args.exec;
    if let Some(caps) = args.caps {
        cfg.caps = caps;
    }
    let summary = checks::run_check(&cfg);
    let violation = summary.first_violation();
    let status = match (violation, summary.failures.first()) {
        (Some(_), _) => Status::Violated,
        (None, Some(f)) => Status::Failed(f.error.clone().expect("non-violations carry their error")),
        (None, None) => Status::Ok,
    };
    Outcome {
        report: summary_report(&summary),
        status,
        counterexample: violation.map(|f| f.instance.clone()),
    }
}

pub fn replay(theorem: Theorem, inst: &Instance, caps: Option<Caps>) -> Outcome {
    let verdict = checks::verify(theorem, inst, caps.unwrap_or(theorem.default_caps()));
    let report = json!({
        "theorem": theorem.id(),
        "passed": verdict.is_ok(),
        "detail": verdict.as_ref().err().map(|f| f.to_string()),
    });
    let status = match verdict {
        Ok(()) => Status::Ok,
        Err(CheckFailure::Violation(_)) => Status::Violated,
        Err(CheckFailure::Solver(e)) => Status::Failed(e),
    };
    Outcome {
        report,
        status,
        counterexample: None,
    }
}
