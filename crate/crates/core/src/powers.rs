//! Graph powers, `k`-independence, diameter-`k` covers and the
//! incomparability-graph machinery.

use crate::error::{Error, Result};
use crate::model::{IntervalFamily, Poset, SimpleGraph};
use crate::oracle::{max_independent, HARD_LIMIT};

pub const DEFAULT_GRAPH_CAP: usize = 24;

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidInstance("k must be at least 1".into()));
    }
    Ok(())
}

fn check_cap(g: &SimpleGraph, cap: usize) -> Result<()> {
    let cap = cap.min(HARD_LIMIT);
    if g.n() > cap {
        return Err(Error::SizeCapExceeded {
            what: "graph",
            size: g.n(),
            cap,
        });
    }
    Ok(())
}

/// `G^{*k}`: `u ~ v` iff `1 <= dist_G(u, v) <= k`.
pub fn graph_power(g: &SimpleGraph, k: usize) -> Result<SimpleGraph> {
    check_k(k)?;
    let mut edges = Vec::new();
    for u in 0..g.n() {
        for (v, d) in g.distances_from(u).into_iter().enumerate() {
            if v > u && matches!(d, Some(d) if d <= k) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(g.n(), &edges)
}

fn closed_neighborhoods(g: &SimpleGraph) -> Vec<u64> {
    (0..g.n())
        .map(|u| g.neighbors(u).fold(1u64 << u, |m, v| m | (1 << v)))
        .collect()
}

/// Maximum independent set of `g`.
pub fn independence_number(g: &SimpleGraph, cap: usize) -> Result<(usize, Vec<usize>)> {
    check_cap(g, cap)?;
    let conflict = closed_neighborhoods(g);
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = Vec::new();
    max_independent(&conflict, all, &mut Vec::new(), &mut best);
    Ok((best.len(), best))
}

/// `γ_k(G)`: largest vertex set with pairwise distance above `k`.
pub fn gamma_k(g: &SimpleGraph, k: usize, cap: usize) -> Result<(usize, Vec<usize>)> {
    independence_number(&graph_power(g, k)?, cap)
}

/// Minimum clique cover of `g`, as a partition into cliques.
///
/// Searches partition sizes upward from the independence number, which
/// bounds the clique cover number from below.
pub fn clique_cover(g: &SimpleGraph, cap: usize) -> Result<(usize, Vec<Vec<usize>>)> {
    check_cap(g, cap)?;
    let n = g.n();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let (lower, _) = independence_number(g, cap)?;
    for c in lower.max(1)..=n {
        let mut groups: Vec<Vec<usize>> = Vec::new();
        if place(g, 0, c, &mut groups) {
            return Ok((groups.len(), groups));
        }
    }
    unreachable!("singletons always form a clique cover")
}

fn place(g: &SimpleGraph, v: usize, limit: usize, groups: &mut Vec<Vec<usize>>) -> bool {
    if v == g.n() {
        return true;
    }
    for i in 0..groups.len() {
        if groups[i].iter().all(|&u| g.adjacent(u, v)) {
            groups[i].push(v);
            if place(g, v + 1, limit, groups) {
                return true;
            }
            groups[i].pop();
        }
    }
    if groups.len() < limit {
        groups.push(vec![v]);
        if place(g, v + 1, limit, groups) {
            return true;
        }
        groups.pop();
    }
    false
}

/// `ρ_k(G)`: fewest vertex sets of `G`-diameter at most `k` covering `V(G)`.
pub fn rho_k(g: &SimpleGraph, k: usize, cap: usize) -> Result<(usize, Vec<Vec<usize>>)> {
    clique_cover(&graph_power(g, k)?, cap)
}

/// True iff every pair in `set` is at distance greater than `k` in `g`.
pub fn is_k_independent(g: &SimpleGraph, set: &[usize], k: usize) -> bool {
    set.iter().enumerate().all(|(a, &u)| {
        let dist = g.distances_from(u);
        set[a + 1..]
            .iter()
            .all(|&v| u != v && dist[v].is_none_or(|d| d > k))
    })
}

/// True iff `sets` cover `V(g)` and each has pairwise distance at most `k`.
pub fn is_diameter_cover(g: &SimpleGraph, sets: &[Vec<usize>], k: usize) -> bool {
    let mut seen = vec![false; g.n()];
    for set in sets {
        if set.is_empty() {
            return false;
        }
        for (a, &u) in set.iter().enumerate() {
            seen[u] = true;
            let dist = g.distances_from(u);
            if !set[a + 1..].iter().all(|&v| matches!(dist[v], Some(d) if d <= k)) {
                return false;
            }
        }
    }
    seen.into_iter().all(|b| b)
}

/// Edges are exactly the incomparable pairs.
pub fn incomparability_graph(poset: &Poset) -> SimpleGraph {
    let n = poset.n();
    let edges: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !poset.comparable(u, v))
        .collect();
    SimpleGraph::from_edges(n, &edges).expect("poset pairs are in range")
}

/// `i ≻ j` iff interval `i` lies entirely to the right of interval `j`.
pub fn interval_order(family: &IntervalFamily) -> Poset {
    let ivs = family.intervals();
    let pairs = (0..ivs.len())
        .flat_map(|i| (0..ivs.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| ivs[i].lo() > ivs[j].hi());
    Poset::new(ivs.len(), pairs).expect("lying to the right is a strict order")
}

/// Builds `x ⊐ y ⇔ x ≻ y ∧ xy ∉ E(G^{*k})` for an order `≻` realizing `g`,
/// then checks that `⊐` is a strict order whose incomparability graph is
/// `G^{*k}`. A failed check is reported as [`Error::LemmaViolation`].
pub fn star_order(poset: &Poset, g: &SimpleGraph, k: usize) -> Result<Poset> {
    check_k(k)?;
    if poset.n() != g.n() || incomparability_graph(poset) != *g {
        return Err(Error::PosetMismatch);
    }
    let power = graph_power(g, k)?;
    let pairs: Vec<(usize, usize)> = poset
        .pairs()
        .iter()
        .copied()
        .filter(|&(x, y)| !power.adjacent(x, y))
        .collect();
    let star = Poset::new(g.n(), pairs).map_err(|e| {
        Error::LemmaViolation(format!("derived relation is not a strict order: {e}"))
    })?;
    if incomparability_graph(&star) != power {
        return Err(Error::LemmaViolation(
            "incomparability graph of the derived order differs from the power graph".into(),
        ));
    }
    Ok(star)
}
