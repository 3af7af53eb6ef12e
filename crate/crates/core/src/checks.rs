//! Randomized theorem checks: generate seeded instances, run the relevant
//! solvers, and validate every claimed equality and certificate.

use serde::Serialize;
use serde_json::Value;

use crate::certificate::{covers, is_matching, validate_cover, validate_matching_width};
use crate::error::Error;
use crate::exec::{map_indexed, Execution};
use crate::generators::{
    random_hypergraph_family, random_intervals, random_point_tree, random_poset,
    random_subtree_instance, FamilyParams, IntervalParams, PointTreeParams, RelationKind,
    SubtreeParams,
};
use crate::intervals::{
    greedy_certificates, is_two_remote, iw_witness_matching, iw_witness_matching_literal, radius1_partition, zeta_k,
};
use crate::json::Instance;
use crate::model::{IntersectionSystem, IntervalFamily, Poset, Relation, SimpleGraph, SubtreeInstance};
use crate::oracle::{
    cover_width, enumerate_matchings, independent_matching_width, independent_width, matching_number,
    matching_width, Caps, WidthQuery,
};
use crate::point_tree::{
    deficiency, disjoint_choice, pool, sigma, sigma_certificate, smallest_exclusion,
    union_matching_width, HypergraphFamily, SetFamily,
};
use crate::powers::{
    gamma_k, incomparability_graph, is_diameter_cover, is_k_independent, rho_k, star_order,
    DEFAULT_GRAPH_CAP,
};
use crate::reduction::reduce_to_matching;
use crate::rng::{trial_seed, SplitMix64};

/// Checkable statements, by command-line id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `mw(H₁,H₂,∼) = w(H₁,H₂,∼)` for subtrees, plus the reduction.
    TreeEquality,
    /// One of two intersecting edges can be dropped without losing width.
    TreeLemma,
    /// `ζ₂ = mw = w = |R| = |C|` for intervals.
    IntervalEquality,
    /// `ζ₂ <= mw <= w` (with equality) on intervals.
    ZetaChain,
    /// `imw = iw` for intervals and the witness matching `M`.
    ImwIw,
    /// The witness matching with `L_j`-freeness for all `j <= i`; known to
    /// fail, kept to reproduce its counterexamples.
    ImwIwLiteral,
    /// `σ(H) <= ν(H)` with the constructive cover.
    SigmaNu,
    /// `σ = ν` when every tree is a single vertex.
    Konig,
    /// `ρ_k = γ_k` on incomparability graphs, `k = 1, 2, 3`.
    RhoGamma,
    /// `G^{*k}` of an incomparability graph is one, via `⊐`.
    StarOrder,
    /// Disjoint choices under the Hall-type and deficiency conditions.
    DeficiencyChoice,
    /// Endpoint relabeling keeps the intersection pattern.
    Perturbation,
}

impl Theorem {
    pub const ALL: [Theorem; 12] = [
        Theorem::TreeEquality,
        Theorem::TreeLemma,
        Theorem::IntervalEquality,
        Theorem::ZetaChain,
        Theorem::ImwIw,
        Theorem::ImwIwLiteral,
        Theorem::SigmaNu,
        Theorem::Konig,
        Theorem::RhoGamma,
        Theorem::StarOrder,
        Theorem::DeficiencyChoice,
        Theorem::Perturbation,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::TreeEquality => "tree-equality",
            Theorem::TreeLemma => "tree-lemma",
            Theorem::IntervalEquality => "interval-equality",
            Theorem::ZetaChain => "zeta-chain",
            Theorem::ImwIw => "imw-iw",
            Theorem::ImwIwLiteral => "imw-iw-literal",
            Theorem::SigmaNu => "sigma-nu",
            Theorem::Konig => "konig",
            Theorem::RhoGamma => "rho-gamma",
            Theorem::StarOrder => "star-order",
            Theorem::DeficiencyChoice => "deficiency-choice",
            Theorem::Perturbation => "perturbation",
        }
    }

    pub fn from_id(id: &str) -> Option<Theorem> {
        Theorem::ALL.into_iter().find(|t| t.id() == id)
    }

    /// Main size parameter used when none is given: tree vertices,
    /// interval count, point-tree edges, poset size or family size.
    pub fn default_max_size(self) -> usize {
        match self {
            Theorem::TreeEquality | Theorem::TreeLemma => 9,
            Theorem::IntervalEquality
            | Theorem::ZetaChain
            | Theorem::ImwIw
            | Theorem::ImwIwLiteral
            | Theorem::Perturbation => 11,
            Theorem::SigmaNu | Theorem::Konig => 9,
            Theorem::RhoGamma | Theorem::StarOrder => 9,
            Theorem::DeficiencyChoice => 6,
        }
    }

    /// The [`Instance::kind`] this statement is checked on.
    pub fn instance_kind(self) -> &'static str {
        match self {
            Theorem::TreeEquality | Theorem::TreeLemma => "subtree",
            Theorem::IntervalEquality
            | Theorem::ZetaChain
            | Theorem::ImwIw
            | Theorem::ImwIwLiteral
            | Theorem::Perturbation => "intervals",
            Theorem::SigmaNu | Theorem::Konig => "point_tree",
            Theorem::RhoGamma | Theorem::StarOrder => "poset",
            Theorem::DeficiencyChoice => "family",
        }
    }

    /// Size guards for a batch. Families of six hypergraphs with four edges
    /// each can reach 24 distinct edges, past the default target cap.
    pub fn default_caps(self) -> Caps {
        match self {
            Theorem::DeficiencyChoice => Caps::uniform(24),
            _ => Caps::default(),
        }
    }
}

/// Instance for trial `trial` with per-trial seed `seed`.
pub fn generate(theorem: Theorem, trial: u64, seed: u64, max_size: usize) -> Instance {
    let mut rng = SplitMix64::new(seed);
    let max = max_size.max(1);
    match theorem {
        Theorem::TreeEquality | Theorem::TreeLemma => {
            let params = SubtreeParams {
                n: rng.range_inclusive(1, max),
                h2_size: rng.range_inclusive(1, 8),
                h1_fraction: [1.0, 0.75, 0.5][rng.below(3)],
                relation: RelationKind::ALL[(trial % 3) as usize],
            };
            Instance::Subtree(random_subtree_instance(rng.next_u64(), &params))
        }
        Theorem::IntervalEquality | Theorem::ZetaChain | Theorem::ImwIw | Theorem::ImwIwLiteral => {
            let params = IntervalParams {
                count: rng.range_inclusive(1, max),
                coord_range: 24,
                max_len: rng.range_inclusive(0, 10) as i64,
                tie_bias: 0.25,
            };
            Instance::Intervals(random_intervals(rng.next_u64(), &params))
        }
        Theorem::Perturbation => {
            let params = IntervalParams {
                count: rng.range_inclusive(2, max.max(2)),
                coord_range: 12,
                max_len: rng.range_inclusive(0, 4) as i64,
                tie_bias: 0.7,
            };
            Instance::Intervals(random_intervals(rng.next_u64(), &params))
        }
        Theorem::SigmaNu | Theorem::Konig => {
            let params = PointTreeParams {
                x_count: rng.range_inclusive(1, 5),
                n: rng.range_inclusive(1, 7),
                edge_count: rng.range_inclusive(0, max),
                singleton_only: theorem == Theorem::Konig,
            };
            Instance::PointTree(random_point_tree(rng.next_u64(), &params))
        }
        Theorem::RhoGamma | Theorem::StarOrder => {
            let n = rng.range_inclusive(1, max);
            let density = rng.unit();
            Instance::Poset(random_poset(rng.next_u64(), n, density))
        }
        Theorem::DeficiencyChoice => {
            let params = FamilyParams {
                vertices: rng.range_inclusive(3, 7),
                members: rng.range_inclusive(0, max),
                max_edges: 4,
                max_edge_size: 3,
            };
            Instance::Family(random_hypergraph_family(rng.next_u64(), &params))
        }
    }
}

/// Why a trial did not pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckFailure {
    /// The statement or a certificate failed on the instance.
    Violation(String),
    /// A solver gave up (size cap, uncoverable input) before deciding.
    Solver(Error),
}

impl std::fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckFailure::Violation(msg) => f.write_str(msg),
            CheckFailure::Solver(e) => write!(f, "solver error: {e}"),
        }
    }
}

type Verdict = std::result::Result<(), CheckFailure>;

fn fail<T>(msg: impl Into<String>) -> std::result::Result<T, CheckFailure> {
    Err(CheckFailure::Violation(msg.into()))
}

fn solver<T>(r: crate::error::Result<T>) -> std::result::Result<T, CheckFailure> {
    r.map_err(CheckFailure::Solver)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(CheckFailure::Violation(msg()))
    }
}

/// Runs the statement on one instance.
pub fn verify(theorem: Theorem, instance: &Instance, caps: Caps) -> Verdict {
    match (theorem, instance) {
        (Theorem::TreeEquality, Instance::Subtree(s)) => verify_tree_equality(s, caps),
        (Theorem::TreeLemma, Instance::Subtree(s)) => verify_tree_lemma(s, caps),
        (Theorem::IntervalEquality, Instance::Intervals(f)) => verify_interval_equality(f, caps),
        (Theorem::ZetaChain, Instance::Intervals(f)) => verify_zeta_chain(f, caps),
        (Theorem::ImwIw, Instance::Intervals(f)) => verify_imw_iw(f, caps, iw_witness_matching),
        (Theorem::ImwIwLiteral, Instance::Intervals(f)) => verify_imw_iw(f, caps, iw_witness_matching_literal),
        (Theorem::Perturbation, Instance::Intervals(f)) => verify_perturbation(f),
        (Theorem::SigmaNu, Instance::PointTree(h)) => verify_sigma_nu(h, caps, false),
        (Theorem::Konig, Instance::PointTree(h)) => verify_sigma_nu(h, caps, true),
        (Theorem::RhoGamma, Instance::Poset(p)) => verify_rho_gamma(p),
        (Theorem::StarOrder, Instance::Poset(p)) => verify_star_order(p),
        (Theorem::DeficiencyChoice, Instance::Family(f)) => verify_deficiency_choice(f, caps),
        (t, i) => fail(format!("{} does not apply to a {} instance", t.id(), i.kind())),
    }
}

fn subtree_query<'a>(s: &SubtreeInstance, system: &'a IntersectionSystem, caps: Caps) -> WidthQuery<'a> {
    WidthQuery::new(system, s.h1().to_vec(), (0..s.h2().len()).collect(), s.relation().clone()).with_caps(caps)
}

fn verify_tree_equality(s: &SubtreeInstance, caps: Caps) -> Verdict {
    let system = s.system();
    let q = subtree_query(s, &system, caps);
    let w = solver(cover_width(&q))?;
    let cover = w.cover.clone().unwrap_or_default();
    ensure(validate_cover(&system, &q.targets, &q.pool, &q.relation, w.value, &cover), || {
        format!("invalid cover certificate {cover:?}")
    })?;
    let mw = solver(matching_width(&q))?;
    ensure(validate_matching_width(&system, &q.targets, &q.pool, &q.relation, &mw), || {
        format!("invalid matching-width certificate {mw:?}")
    })?;
    ensure(mw.value == w.value, || format!("mw = {} but w = {}", mw.value, w.value))?;

    let red = solver(reduce_to_matching(s, caps))?;
    ensure(red.matching.iter().all(|e| s.h1().contains(e)), || "reduction left h1".into())?;
    ensure(is_matching(&system, &red.matching), || {
        format!("reduction output {:?} is not a matching", red.matching)
    })?;
    let wm = solver(cover_width(&q.with_targets(red.matching.clone())))?;
    ensure(wm.value == w.value, || {
        format!("w(M) = {} for reduced M but w(h1) = {}", wm.value, w.value)
    })
}

fn verify_tree_lemma(s: &SubtreeInstance, caps: Caps) -> Verdict {
    let system = s.system();
    let q = subtree_query(s, &system, caps);
    let w = solver(cover_width(&q))?.value;
    let h1 = s.h1();
    for (a, &c) in h1.iter().enumerate() {
        for &d in &h1[a + 1..] {
            if !system.meets(c, d) {
                continue;
            }
            let without = |e: usize| h1.iter().copied().filter(|&x| x != e).collect::<Vec<_>>();
            let wc = solver(cover_width(&q.with_targets(without(c))))?.value;
            let wd = solver(cover_width(&q.with_targets(without(d))))?.value;
            ensure(wc.max(wd) == w, || {
                format!("pair ({c},{d}): w(h1-c) = {wc}, w(h1-d) = {wd}, w(h1) = {w}")
            })?;
        }
    }
    Ok(())
}

fn verify_interval_equality(f: &IntervalFamily, caps: Caps) -> Verdict {
    let system = IntersectionSystem::from_intervals(f);
    let q = WidthQuery::whole(&system, Relation::Total).with_caps(caps);
    let w = solver(cover_width(&q))?.value;
    let mw = solver(matching_width(&q))?.value;
    let (zeta, remote) = solver(zeta_k(&system, 2, DEFAULT_GRAPH_CAP))?;
    let greedy = solver(greedy_certificates(f))?;
    ensure(is_two_remote(&system, &remote), || "ζ₂ witness is not 2-remote".into())?;
    ensure(is_two_remote(&system, &greedy.remote), || {
        format!("R = {:?} is not 2-remote", greedy.remote)
    })?;
    ensure(covers(&system, &q.targets, &greedy.cover), || {
        format!("C = {:?} does not cover", greedy.cover)
    })?;
    let (r, c) = (greedy.remote.len(), greedy.cover.len());
    ensure(zeta == mw && mw == w && w == r && r == c, || {
        format!("ζ₂ = {zeta}, mw = {mw}, w = {w}, |R| = {r}, |C| = {c}")
    })?;

    let groups = solver(radius1_partition(f))?;
    ensure(groups.len() == c, || format!("{} groups for |C| = {c}", groups.len()))?;
    let mut seen: Vec<usize> = groups.iter().flatten().copied().collect();
    seen.sort_unstable();
    ensure(seen == (0..f.len()).collect::<Vec<_>>(), || "groups do not partition".into())?;
    for (g, &center) in groups.iter().zip(&greedy.cover) {
        ensure(!g.is_empty() && g.iter().all(|&i| system.meets(i, center)), || {
            format!("group {g:?} is not a radius-1 ball around {center}")
        })?;
    }
    let line = SimpleGraph::line_graph(&system);
    ensure(is_diameter_cover(&line, &groups, 2), || "groups are not a ρ₂ witness".into())
}

fn verify_zeta_chain(f: &IntervalFamily, caps: Caps) -> Verdict {
    let system = IntersectionSystem::from_intervals(f);
    let q = WidthQuery::whole(&system, Relation::Total).with_caps(caps);
    let w = solver(cover_width(&q))?.value;
    let mw = solver(matching_width(&q))?.value;
    let (z2, _) = solver(zeta_k(&system, 2, DEFAULT_GRAPH_CAP))?;
    let (z1, _) = solver(zeta_k(&system, 1, DEFAULT_GRAPH_CAP))?;
    let (nu, _) = solver(matching_number(&system, &q.targets))?;
    ensure(z1 == nu, || format!("ζ₁ = {z1} but ν = {nu}"))?;
    ensure(z2 <= mw && mw <= w, || format!("chain broken: ζ₂ = {z2}, mw = {mw}, w = {w}"))?;
    ensure(z2 == w, || format!("ζ₂ = {z2} < w = {w} on intervals"))
}

fn verify_imw_iw(
    f: &IntervalFamily,
    caps: Caps,
    witness: fn(&IntervalFamily) -> crate::error::Result<Vec<usize>>,
) -> Verdict {
    let system = IntersectionSystem::from_intervals(f);
    let q = WidthQuery::whole(&system, Relation::Total).with_caps(caps);
    let iw = solver(independent_width(&q))?.value;
    let imw = solver(independent_matching_width(&q))?.value;
    ensure(imw == iw, || format!("imw = {imw} but iw = {iw}"))?;

    let m = solver(witness(f))?;
    ensure(is_matching(&system, &m), || format!("M = {m:?} is not a matching"))?;
    let iw_m = solver(independent_width(&q.with_targets(m.clone())))?.value;
    ensure(iw_m == iw, || format!("iw(M,F) = {iw_m} but iw(F) = {iw} for M = {m:?}"))?;
    let all: Vec<usize> = (0..f.len()).collect();
    for z in enumerate_matchings(&system, &all, iw.saturating_sub(1)) {
        if z.len() + 1 != iw {
            continue;
        }
        ensure(m.iter().any(|&d| z.iter().all(|&e| !system.meets(d, e))), || {
            format!("matching {z:?} of size iw-1 meets every member of M = {m:?}")
        })?;
    }
    Ok(())
}

fn verify_perturbation(f: &IntervalFamily) -> Verdict {
    let g = f.make_endpoints_distinct();
    ensure(g.endpoints_distinct(), || "endpoints still collide".into())?;
    ensure(g.len() == f.len(), || "length changed".into())?;
    let (a, b) = (IntersectionSystem::from_intervals(f), IntersectionSystem::from_intervals(&g));
    for i in 0..f.len() {
        for j in 0..f.len() {
            ensure(a.meets(i, j) == b.meets(i, j), || {
                format!("pair ({i},{j}) changed: {} -> {}", a.meets(i, j), b.meets(i, j))
            })?;
        }
    }
    Ok(())
}

fn verify_sigma_nu(h: &crate::model::PointTreeHypergraph, caps: Caps, konig: bool) -> Verdict {
    if konig && h.edges().iter().any(|e| e.t.vertices().len() != 1) {
        return fail("König check needs single-vertex trees");
    }
    let s = solver(sigma(h, caps))?.value;
    let (nu, _) = solver(crate::point_tree::nu(h, caps))?;
    ensure(s <= nu, || format!("σ = {s} > ν = {nu}"))?;
    if konig {
        ensure(s == nu, || format!("σ = {s} but ν = {nu} in the bipartite case"))?;
    }
    let cert = solver(sigma_certificate(h, caps))?;
    let p = pool(h);
    ensure(cert.nu == nu, || "certificate reports a different ν".into())?;
    ensure(cert.cover.iter().all(|i| p.pool.contains(i)), || "cover leaves F(H)".into())?;
    ensure(covers(&p.system, &p.targets, &cert.cover), || {
        format!("certificate {:?} does not cover H", cert.cover)
    })?;
    ensure(cert.cover.len() <= nu, || {
        format!("certificate has {} elements, ν = {nu}", cert.cover.len())
    })
}

fn verify_rho_gamma(p: &Poset) -> Verdict {
    let g = incomparability_graph(p);
    for k in 1..=3 {
        let (gamma, indep) = solver(gamma_k(&g, k, DEFAULT_GRAPH_CAP))?;
        let (rho, cover) = solver(rho_k(&g, k, DEFAULT_GRAPH_CAP))?;
        ensure(is_k_independent(&g, &indep, k) && indep.len() == gamma, || {
            format!("bad γ_{k} witness {indep:?}")
        })?;
        ensure(is_diameter_cover(&g, &cover, k) && cover.len() == rho, || {
            format!("bad ρ_{k} witness {cover:?}")
        })?;
        ensure(rho == gamma, || format!("k = {k}: ρ = {rho}, γ = {gamma}"))?;
    }
    Ok(())
}

fn verify_star_order(p: &Poset) -> Verdict {
    let g = incomparability_graph(p);
    for k in 1..=3 {
        match star_order(p, &g, k) {
            Ok(_) => {}
            Err(e @ (Error::PosetMismatch | Error::LemmaViolation(_))) => return fail(format!("k = {k}: {e}")),
            Err(e) => return Err(CheckFailure::Solver(e)),
        }
    }
    Ok(())
}

fn verify_deficiency_choice(f: &SetFamily, caps: Caps) -> Verdict {
    let fam: HypergraphFamily = solver(f.to_hypergraph_family())?;
    let n = fam.len();
    let mut hall = true;
    for mask in 1u64..(1 << n) {
        let b: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if solver(union_matching_width(&fam, &b, caps))? < b.len() {
            hall = false;
            break;
        }
    }
    let check_choice = |excluded: &[usize], choice: &[(usize, usize)]| -> Verdict {
        let members: Vec<usize> = choice.iter().map(|&(m, _)| m).collect();
        let expected: Vec<usize> = (0..n).filter(|i| !excluded.contains(i)).collect();
        let edges: Vec<usize> = choice.iter().map(|&(_, e)| e).collect();
        ensure(
            members == expected
                && choice.iter().all(|&(m, e)| fam.members[m].contains(&e))
                && is_matching(&fam.system, &edges),
            || format!("invalid choice {choice:?} excluding {excluded:?}"),
        )
    };
    if hall {
        match solver(disjoint_choice(&fam, &[]))? {
            Some(choice) => check_choice(&[], &choice)?,
            None => return fail("mw(∪B) >= |B| for all B, yet no disjoint choice"),
        }
    }
    let def = solver(deficiency(&fam, caps))?.value;
    let (excluded, choice) = solver(smallest_exclusion(&fam))?;
    check_choice(&excluded, &choice)?;
    ensure(excluded.len() <= def, || {
        format!("smallest exclusion has size {} > def = {def}", excluded.len())
    })
}

#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub theorem: Theorem,
    pub seed: u64,
    pub trials: u64,
    pub max_size: Option<usize>,
    pub caps: Caps,
    pub exec: Execution,
}

impl CheckConfig {
    pub fn new(theorem: Theorem, seed: u64, trials: u64) -> Self {
        CheckConfig {
            theorem,
            seed,
            trials,
            max_size: None,
            caps: theorem.default_caps(),
            exec: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub trial: u64,
    pub seed: u64,
    /// `"violation"` or `"solver_error"`.
    pub kind: &'static str,
    pub detail: String,
    #[serde(skip)]
    pub error: Option<Error>,
    pub instance: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSummary {
    pub theorem: &'static str,
    pub seed: u64,
    pub trials: u64,
    pub passed: u64,
    pub failed: u64,
    pub failures: Vec<Failure>,
}

impl CheckSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// First trial where the statement itself failed.
    pub fn first_violation(&self) -> Option<&Failure> {
        self.failures.iter().find(|f| f.error.is_none())
    }
}

/// Runs `trials` independent trials; trial `i` uses `trial_seed(seed, i)`.
/// Failures are reported in trial order whatever the execution mode.
pub fn run_check(cfg: &CheckConfig) -> CheckSummary {
    let max = cfg.max_size.unwrap_or(cfg.theorem.default_max_size());
    let results = map_indexed(cfg.trials, cfg.exec, |i| {
        let seed = trial_seed(cfg.seed, i);
        let instance = generate(cfg.theorem, i, seed, max);
        verify(cfg.theorem, &instance, cfg.caps).err().map(|failure| Failure {
            trial: i,
            seed,
            kind: match failure {
                CheckFailure::Violation(_) => "violation",
                CheckFailure::Solver(_) => "solver_error",
            },
            detail: failure.to_string(),
            error: match failure {
                CheckFailure::Solver(e) => Some(e),
                CheckFailure::Violation(_) => None,
            },
            instance: instance.to_value(),
        })
    });
    let failures: Vec<Failure> = results.into_iter().flatten().collect();
    CheckSummary {
        theorem: cfg.theorem.id(),
        seed: cfg.seed,
        trials: cfg.trials,
        passed: cfg.trials - failures.len() as u64,
        failed: failures.len() as u64,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(Theorem::from_id(t.id()), Some(t));
        }
        assert_eq!(Theorem::from_id("nope"), None);
    }

    #[test]
    fn small_batches_pass() {
        for t in Theorem::ALL.into_iter().filter(|&t| t != Theorem::ImwIwLiteral) {
            let s = run_check(&CheckConfig::new(t, 11, 8));
            assert!(s.all_passed(), "{}: {:?}", t.id(), s.failures);
        }
    }

    #[test]
    fn generated_kinds_match() {
        for t in Theorem::ALL {
            assert_eq!(generate(t, 0, 5, t.default_max_size()).kind(), t.instance_kind());
        }
    }

    #[test]
    fn literal_witness_fails_on_staggered_family() {
        let inst = Instance::Intervals(IntervalFamily::from_ints(&[(2, 3), (1, 5), (4, 7), (6, 8)]));
        assert!(verify(Theorem::ImwIw, &inst, Caps::default()).is_ok());
        let err = verify(Theorem::ImwIwLiteral, &inst, Caps::default()).unwrap_err();
        assert!(matches!(err, CheckFailure::Violation(_)), "{err}");
    }

    #[test]
    fn mismatched_instance_is_reported() {
        let inst = Instance::Intervals(IntervalFamily::from_ints(&[(0, 1)]));
        assert!(verify(Theorem::SigmaNu, &inst, Caps::default()).is_err());
    }
}
