//! Seeded random instances. Every generator is a pure function of its seed
//! and parameters; see [`crate::rng`] for the pinned PRNG.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use serde::{Deserialize, Serialize};

use crate::model::{
    Interval, IntervalFamily, PointTreeEdge, PointTreeHypergraph, Poset,
    Relation, Subtree, SubtreeInstance, Tree,
};
use crate::point_tree::SetFamily;
use crate::rng::SplitMix64;

/// Uniform labeled tree on `n >= 1` vertices via Prüfer decoding.
pub fn random_tree(seed: u64, n: usize) -> Tree {
    tree_from(&mut SplitMix64::new(seed), n)
}

fn tree_from(rng: &mut SplitMix64, n: usize) -> Tree {
    assert!(n >= 1, "a tree needs a vertex");
    if n <= 2 {
        return Tree::path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.below(n)).collect();
    Tree::new(n, &prufer_decode(n, &code)).expect("Prüfer decoding yields a tree")
}

/// Edges of the tree with Prüfer sequence `code` (length `n - 2`).
pub fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    edges
}

/// Grows a subtree from a uniform root by adding uniform frontier vertices
/// until it has `size` vertices (or the tree is exhausted).
pub fn random_subtree(rng: &mut SplitMix64, tree: &Tree, size: usize) -> Subtree {
    let mut set = BTreeSet::from([rng.below(tree.n())]);
    while set.len() < size {
        let frontier: BTreeSet<usize> = set
            .iter()
            .flat_map(|&v| tree.neighbors(v).iter().copied())
            .filter(|u| !set.contains(u))
            .collect();
        if frontier.is_empty() {
            break;
        }
        let pick = *frontier.iter().nth(rng.below(frontier.len())).expect("in range");
        set.insert(pick);
    }
    Subtree::new(tree, set).expect("grown sets are connected")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    Total,
    Disjointness,
    Custom,
}

impl RelationKind {
    pub const ALL: [RelationKind; 3] = [RelationKind::Total, RelationKind::Disjointness, RelationKind::Custom];
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubtreeParams {
    pub n: usize,
    pub h2_size: usize,
    pub h1_fraction: f64,
    pub relation: RelationKind,
}

/// Subtree sizes are uniform in `1..=max(1, n/2 + 1)`. A custom relation
/// holds every disjoint pair plus each meeting pair with probability 1/2.
pub fn random_subtree_instance(seed: u64, params: &SubtreeParams) -> SubtreeInstance {
    let mut rng = SplitMix64::new(seed);
    let tree = tree_from(&mut rng, params.n.max(1));
    let max_size = tree.n() / 2 + 1;
    let h2: Vec<Subtree> = (0..params.h2_size)
        .map(|_| {
            let size = rng.range_inclusive(1, max_size);
            random_subtree(&mut rng, &tree, size)
        })
        .collect();
    let h1: Vec<usize> = (0..h2.len())
        .filter(|_| params.h1_fraction >= 1.0 || rng.chance(params.h1_fraction))
        .collect();
    let relation = match params.relation {
        RelationKind::Total => Relation::Total,
        RelationKind::Disjointness => Relation::Disjointness,
        RelationKind::Custom => {
            let mut pairs = Vec::new();
            for i in 0..h2.len() {
                for j in i + 1..h2.len() {
                    if !h2[i].meets(&h2[j]) || rng.chance(0.5) {
                        pairs.push((i, j));
                    }
                }
            }
            Relation::custom(pairs)
        }
    };
    SubtreeInstance::new(tree, h2, h1, relation).expect("generated instance is valid")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalParams {
    pub count: usize,
    /// Endpoints fall in `0..=coord_range`.
    pub coord_range: i64,
    pub max_len: i64,
    /// Probability that a left endpoint copies an earlier endpoint value.
    pub tie_bias: f64,
}

pub fn random_intervals(seed: u64, params: &IntervalParams) -> IntervalFamily {
    let mut rng = SplitMix64::new(seed);
    let range = params.coord_range.max(0) as usize;
    let mut used: Vec<i64> = Vec::new();
    let mut out = Vec::with_capacity(params.count);
    for _ in 0..params.count {
        let lo = if !used.is_empty() && rng.chance(params.tie_bias) {
            used[rng.below(used.len())]
        } else {
            rng.below(range + 1) as i64
        };
        let len = rng.below(params.max_len.max(0) as usize + 1) as i64;
        let hi = (lo + len).min(params.coord_range.max(0));
        used.extend([lo, hi]);
        out.push(Interval::int(lo, hi));
    }
    IntervalFamily::new(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointTreeParams {
    pub x_count: usize,
    pub n: usize,
    pub edge_count: usize,
    /// Every subtree is a single vertex (bipartite-graph case).
    pub singleton_only: bool,
}

pub fn random_point_tree(seed: u64, params: &PointTreeParams) -> PointTreeHypergraph {
    let mut rng = SplitMix64::new(seed);
    let tree = tree_from(&mut rng, params.n.max(1));
    let x_count = params.x_count.max(1);
    let max_size = if params.singleton_only { 1 } else { tree.n() / 2 + 1 };
    let edges = (0..params.edge_count)
        .map(|_| {
            let x = rng.below(x_count);
            let size = rng.range_inclusive(1, max_size);
            PointTreeEdge {
                x,
                t: random_subtree(&mut rng, &tree, size),
            }
        })
        .collect();
    PointTreeHypergraph::new(x_count, tree, edges).expect("generated hypergraph is valid")
}

/// Random DAG on a random vertex permutation, transitively closed.
/// Density 0 gives an antichain, density 1 a chain.
pub fn random_poset(seed: u64, n: usize, density: f64) -> Poset {
    let mut rng = SplitMix64::new(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut perm);
    let mut above = vec![vec![false; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            if rng.chance(density) {
                above[perm[b]][perm[a]] = true;
            }
        }
    }
    // Warshall closure
    for k in 0..n {
        let through = above[k].clone();
        for row in above.iter_mut().filter(|row| row[k]) {
            for (cell, &reach) in row.iter_mut().zip(&through) {
                *cell |= reach;
            }
        }
    }
    let pairs = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| above[i][j]);
    Poset::new(n, pairs).expect("closure of a DAG is a strict order")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub vertices: usize,
    pub members: usize,
    pub max_edges: usize,
    pub max_edge_size: usize,
}

/// Hypergraphs over vertices `0..vertices`; each member gets between 0 and
/// `max_edges` random edges. Identical edges are stored once.
pub fn random_hypergraph_family(seed: u64, params: &FamilyParams) -> SetFamily {
    let mut rng = SplitMix64::new(seed);
    let vertices = params.vertices.max(1);
    let mut edges: Vec<BTreeSet<usize>> = Vec::new();
    let mut members = Vec::with_capacity(params.members);
    for _ in 0..params.members {
        let count = rng.below(params.max_edges + 1);
        let mut member = BTreeSet::new();
        for _ in 0..count {
            let size = rng.range_inclusive(1, params.max_edge_size.clamp(1, vertices));
            let mut verts: Vec<usize> = (0..vertices).collect();
            rng.shuffle(&mut verts);
            let edge: BTreeSet<usize> = verts[..size].iter().copied().collect();
            let idx = match edges.iter().position(|e| *e == edge) {
                Some(i) => i,
                None => {
                    edges.push(edge);
                    edges.len() - 1
                }
            };
            member.insert(idx);
        }
        members.push(member.into_iter().collect());
    }
    SetFamily { edges, members }
}

/// Arcs (cyclic runs of vertices) of the cycle `0..n`; not subtrees of a
/// tree, used as a host where `mw = w` may fail.
pub fn random_cycle_arcs(seed: u64, n: usize, count: usize) -> Vec<BTreeSet<usize>> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            let start = rng.below(n);
            let len = rng.range_inclusive(1, n.saturating_sub(1).max(1));
            (0..len).map(|i| (start + i) % n).collect()
        })
        .collect()
}
