//! Point-tree hypergraphs: `σ(H) <= ν(H)` with a constructive cover, plus
//! deficiency and disjoint-choice machinery for families of hypergraphs.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::certificate::WidthCertificate;
use crate::error::{Error, Result};
use crate::model::{IntersectionSystem, PointTreeHypergraph, Relation, Subtree, SubtreeInstance};
use crate::oracle::{cover_width, matching_number, matching_width, Caps, WidthQuery};
use crate::reduction::reduce_to_matching;

/// Member of the pool `F(H)`: a point singleton or the vertex set of a tree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PoolElement {
    Point(usize),
    Tree(BTreeSet<usize>),
}

/// `H` and `F(H)` in one system: indices `0..|H|` are the edges of `H`,
/// the rest are pool elements (deduplicated, points first).
#[derive(Debug, Clone)]
pub struct PointTreePool {
    pub system: IntersectionSystem,
    pub targets: Vec<usize>,
    pub pool: Vec<usize>,
    pub elements: Vec<PoolElement>,
}

impl PointTreePool {
    pub fn element(&self, system_index: usize) -> &PoolElement {
        &self.elements[system_index - self.targets.len()]
    }

    pub fn index_of(&self, element: &PoolElement) -> Option<usize> {
        self.elements
            .iter()
            .position(|e| e == element)
            .map(|p| p + self.targets.len())
    }
}

/// Builds `F(H) = {{x(e)}} ∪ {V(t(e))}` next to the edges of `H`.
///
/// Points are encoded as extra vertices after the tree's, so every
/// meets relation is plain set intersection on `{x} ∪ V(t)`.
pub fn pool(h: &PointTreeHypergraph) -> PointTreePool {
    let n = h.tree().n();
    let mut sets: Vec<BTreeSet<usize>> = Vec::new();
    let mut labels = Vec::new();
    for e in h.edges() {
        let mut s = e.t.vertices().clone();
        s.insert(n + e.x);
        sets.push(s);
        labels.push(PointTreeHypergraph::edge_label(e));
    }
    let points: BTreeSet<usize> = h.edges().iter().map(|e| e.x).collect();
    let trees: BTreeSet<BTreeSet<usize>> = h.edges().iter().map(|e| e.t.vertices().clone()).collect();
    let elements: Vec<PoolElement> = points
        .into_iter()
        .map(PoolElement::Point)
        .chain(trees.into_iter().map(PoolElement::Tree))
        .collect();
    for el in &elements {
        match el {
            PoolElement::Point(x) => {
                sets.push(BTreeSet::from([n + x]));
                labels.push(format!("x{x}"));
            }
            PoolElement::Tree(t) => {
                sets.push(t.clone());
                labels.push(format!("t{t:?}"));
            }
        }
    }
    let m = h.edges().len();
    let system = IntersectionSystem::from_sets(labels, &sets).expect("edges and pool elements are nonempty");
    PointTreePool {
        system,
        targets: (0..m).collect(),
        pool: (m..m + elements.len()).collect(),
        elements,
    }
}

/// `σ(H) = w(H, F(H))`.
pub fn sigma(h: &PointTreeHypergraph, caps: Caps) -> Result<WidthCertificate> {
    let p = pool(h);
    cover_width(&WidthQuery::new(&p.system, p.targets.clone(), p.pool.clone(), Relation::Total).with_caps(caps))
}

/// `ν(H)` with a witness matching (edge indices).
pub fn nu(h: &PointTreeHypergraph, caps: Caps) -> Result<(usize, Vec<usize>)> {
    Caps::check("edges", h.edges().len(), caps.targets)?;
    let all: Vec<usize> = (0..h.edges().len()).collect();
    matching_number(&h.system(), &all)
}

/// Hypergraphs sharing one edge system; `members[i]` lists edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergraphFamily {
    pub system: IntersectionSystem,
    pub members: Vec<Vec<usize>>,
}

/// A family of hypergraphs over explicit vertex sets: `edges[i]` is a
/// vertex set and `members[j]` lists the edges of hypergraph `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    pub edges: Vec<BTreeSet<usize>>,
    pub members: Vec<Vec<usize>>,
}

impl SetFamily {
    pub fn to_hypergraph_family(&self) -> Result<HypergraphFamily> {
        let labels = self.edges.iter().map(|e| format!("{e:?}")).collect();
        HypergraphFamily::new(IntersectionSystem::from_sets(labels, &self.edges)?, self.members.clone())
    }
}

/// Family sizes beyond this are refused by the subfamily searches.
pub const FAMILY_CAP: usize = 16;

impl HypergraphFamily {
    pub fn new(system: IntersectionSystem, members: Vec<Vec<usize>>) -> Result<Self> {
        if let Some(&i) = members.iter().flatten().find(|&&i| i >= system.m()) {
            return Err(Error::InvalidInstance(format!("edge index {i} outside the system")));
        }
        Ok(HypergraphFamily { system, members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Edge indices of `⋃B` for the subfamily `b`.
    pub fn union(&self, b: &[usize]) -> Vec<usize> {
        let set: BTreeSet<usize> = b.iter().flat_map(|&i| self.members[i].iter().copied()).collect();
        set.into_iter().collect()
    }

    fn check_size(&self) -> Result<()> {
        Caps::check("family", self.len(), FAMILY_CAP)
    }
}

fn members_of(mask: u64, len: usize) -> Vec<usize> {
    (0..len).filter(|&i| mask & (1 << i) != 0).collect()
}

/// `mw(⋃B)` with the union as its own pool and the total relation.
pub fn union_matching_width(fam: &HypergraphFamily, b: &[usize], caps: Caps) -> Result<usize> {
    let edges = fam.union(b);
    let q = WidthQuery::new(&fam.system, edges.clone(), edges, Relation::Total).with_caps(caps);
    Ok(matching_width(&q)?.value)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Deficiency {
    pub value: usize,
    /// A subfamily attaining `mw(⋃B) = |B| - value`.
    pub witness: Vec<usize>,
}

/// `def(A) = max_B (|B| - mw(⋃B))`, at least 0 (attained by `B = ∅`).
pub fn deficiency(fam: &HypergraphFamily, caps: Caps) -> Result<Deficiency> {
    fam.check_size()?;
    let mut best = Deficiency {
        value: 0,
        witness: Vec::new(),
    };
    for mask in 1u64..(1 << fam.len()) {
        let b = members_of(mask, fam.len());
        let mw = union_matching_width(fam, &b, caps)?;
        if b.len() > mw && b.len() - mw > best.value {
            best = Deficiency {
                value: b.len() - mw,
                witness: b,
            };
        }
    }
    Ok(best)
}

/// `(member, edge)` pairs, one per chosen hypergraph.
pub type Choice = Vec<(usize, usize)>;

/// One pairwise disjoint edge per non-excluded hypergraph, or `None` when
/// no such choice exists.
pub fn disjoint_choice(fam: &HypergraphFamily, excluded: &[usize]) -> Result<Option<Choice>> {
    fam.check_size()?;
    let order: Vec<usize> = (0..fam.len()).filter(|i| !excluded.contains(i)).collect();
    let mut chosen = Vec::new();
    Ok(choose(fam, &order, &mut chosen).then_some(chosen))
}

fn choose(fam: &HypergraphFamily, order: &[usize], chosen: &mut Vec<(usize, usize)>) -> bool {
    let Some((&member, rest)) = order.split_first() else {
        return true;
    };
    for &e in &fam.members[member] {
        if chosen.iter().all(|&(_, f)| !fam.system.meets(e, f)) {
            chosen.push((member, e));
            if choose(fam, rest, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Smallest exclusion (by size, then lexicographically) after which a
/// disjoint choice exists, together with that choice.
pub fn smallest_exclusion(fam: &HypergraphFamily) -> Result<(Vec<usize>, Choice)> {
    fam.check_size()?;
    let mut masks: Vec<u64> = (0u64..(1 << fam.len())).collect();
    masks.sort_by_key(|m| (m.count_ones(), members_of(*m, fam.len())));
    for mask in masks {
        let excluded = members_of(mask, fam.len());
        if let Some(choice) = disjoint_choice(fam, &excluded)? {
            return Ok((excluded, choice));
        }
    }
    unreachable!("excluding every hypergraph leaves the empty choice")
}

/// Output of the constructive `σ(H) <= ν(H)` pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaCertificate {
    /// System indices into [`PointTreePool::system`], all pool elements.
    pub cover: Vec<usize>,
    pub nu: usize,
    /// Deficiency of the family `{K(x)}`.
    pub deficiency: usize,
    /// Points whose tree families are covered by trees.
    pub y: Vec<usize>,
    /// `mw(K)` for `K = ⋃_{y ∈ Y} K(y)`, equal to `w(K)`.
    pub k_width: usize,
}

/// Builds an `H`-cover from `F(H)` of size at most `ν(H)`:
///
/// 1. `K(x) = {V(t(e)) : x(e) = x}` for every point `x`;
/// 2. pick `Y ⊆ X`, largest first, with `mw(K) <= |Y| - (|X| - ν(H))`
///    where `K = ⋃_{y ∈ Y} K(y)`;
/// 3. reduce `K` to a matching of the same width, so `w(K) = mw(K)`;
/// 4. cover `K` optimally by trees of `K` and add the points of `X ∖ Y`.
pub fn sigma_certificate(h: &PointTreeHypergraph, caps: Caps) -> Result<SigmaCertificate> {
    let p = pool(h);
    let x_count = h.x_count();
    Caps::check("points", x_count, FAMILY_CAP)?;
    let (nu, _) = nu(h, caps)?;

    let trees: Vec<Subtree> = h.edges().iter().map(|e| e.t.clone()).collect();
    let tree_system = IntersectionSystem::from_subtrees(&trees);
    let k_of: Vec<Vec<usize>> = (0..x_count)
        .map(|x| (0..trees.len()).filter(|&e| h.edges()[e].x == x).collect())
        .collect();
    let fam = HypergraphFamily::new(tree_system, k_of)?;
    let def = deficiency(&fam, caps)?;

    let mut subsets: Vec<u64> = (0u64..(1 << x_count)).collect();
    subsets.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), members_of(*m, x_count)));
    for mask in subsets {
        let y = members_of(mask, x_count);
        let target = y.len() as i64 - (x_count as i64 - nu as i64);
        if target < 0 {
            continue;
        }
        let mw = union_matching_width(&fam, &y, caps)?;
        if mw as i64 > target {
            continue;
        }

        let k_edges = fam.union(&y);
        let k_trees: Vec<Subtree> = k_edges.iter().map(|&e| trees[e].clone()).collect();
        let instance = SubtreeInstance::new(
            h.tree().clone(),
            k_trees.clone(),
            (0..k_trees.len()).collect(),
            Relation::Total,
        )?;
        let reduction = reduce_to_matching(&instance, caps)?;
        if reduction.width != mw {
            return Err(Error::LemmaViolation(format!(
                "w(K) = {} but mw(K) = {mw}",
                reduction.width
            )));
        }
        let k_system = instance.system();
        let all: Vec<usize> = (0..k_trees.len()).collect();
        let k_cover = cover_width(&WidthQuery::new(&k_system, all.clone(), all, Relation::Total).with_caps(caps))?;

        let mut cover: BTreeSet<usize> = BTreeSet::new();
        for local in k_cover.cover.unwrap_or_default() {
            let el = PoolElement::Tree(k_trees[local].vertices().clone());
            cover.insert(p.index_of(&el).expect("every edge tree is in the pool"));
        }
        for x in (0..x_count).filter(|x| !y.contains(x)) {
            // points without edges are not pool elements and cover nothing
            if let Some(i) = p.index_of(&PoolElement::Point(x)) {
                cover.insert(i);
            }
        }
        return Ok(SigmaCertificate {
            cover: cover.into_iter().collect(),
            nu,
            deficiency: def.value,
            y,
            k_width: mw,
        });
    }
    Err(Error::LemmaViolation(
        "no point subset Y meets the matching-width bound".into(),
    ))
}
