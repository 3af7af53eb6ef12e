use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::interval::IntervalFamily;
use crate::model::tree::{Subtree, Tree};

/// Pairwise "edge `i` meets edge `j`" structure over `m` abstract edges.
///
/// Every solver works on this representation, whatever the edges were
/// originally (subtrees, intervals, point-tree edges, plain vertex sets).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionSystem {
    m: usize,
    meets: Vec<bool>,
    labels: Vec<String>,
}

impl IntersectionSystem {
    /// Builds a system from an explicit meets matrix. The matrix must be
    /// square, symmetric and have a true diagonal.
    pub fn from_matrix(labels: Vec<String>, matrix: Vec<Vec<bool>>) -> Result<Self> {
        let m = matrix.len();
        if labels.len() != m {
            return Err(Error::InvalidInstance(format!(
                "{} labels for {m} edges",
                labels.len()
            )));
        }
        let mut meets = vec![false; m * m];
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidInstance("meets matrix is not square".into()));
            }
            for (j, &b) in row.iter().enumerate() {
                meets[i * m + j] = b;
            }
        }
        for i in 0..m {
            if !meets[i * m + i] {
                return Err(Error::InvalidInstance(format!("edge {i} does not meet itself")));
            }
            for j in 0..i {
                if meets[i * m + j] != meets[j * m + i] {
                    return Err(Error::InvalidInstance(format!(
                        "meets is not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(IntersectionSystem { m, meets, labels })
    }

    fn from_predicate(labels: Vec<String>, meets: impl Fn(usize, usize) -> bool) -> Self {
        let m = labels.len();
        let mut cells = vec![false; m * m];
        for i in 0..m {
            for j in 0..m {
                cells[i * m + j] = i == j || meets(i, j);
            }
        }
        IntersectionSystem {
            m,
            meets: cells,
            labels,
        }
    }

    /// Edges given as finite vertex sets; two edges meet iff they share a
    /// vertex. Empty sets are rejected, since an empty edge cannot meet itself.
    pub fn from_sets(labels: Vec<String>, sets: &[BTreeSet<usize>]) -> Result<Self> {
        if labels.len() != sets.len() {
            return Err(Error::InvalidInstance("label count mismatch".into()));
        }
        if let Some(i) = sets.iter().position(|s| s.is_empty()) {
            return Err(Error::InvalidInstance(format!("edge {i} is empty")));
        }
        Ok(Self::from_predicate(labels, |i, j| !sets[i].is_disjoint(&sets[j])))
    }

    pub fn from_subtrees(subtrees: &[Subtree]) -> Self {
        let labels = subtrees.iter().map(|t| format!("{:?}", t.vertices())).collect();
        Self::from_predicate(labels, |i, j| subtrees[i].meets(&subtrees[j]))
    }

    pub fn from_intervals(family: &IntervalFamily) -> Self {
        let ivs = family.intervals();
        let labels = ivs.iter().map(|iv| iv.to_string()).collect();
        Self::from_predicate(labels, |i, j| ivs[i].meets(&ivs[j]))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn meets(&self, i: usize, j: usize) -> bool {
        self.meets[i * self.m + j]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The sub-system induced on `indices`, in the given order.
    pub fn restrict(&self, indices: &[usize]) -> IntersectionSystem {
        let labels = indices.iter().map(|&i| self.labels[i].clone()).collect();
        Self::from_predicate(labels, |a, b| self.meets(indices[a], indices[b]))
    }

    pub fn is_matching(&self, indices: &[usize]) -> bool {
        indices.iter().enumerate().all(|(a, &i)| {
            indices[a + 1..].iter().all(|&j| !self.meets(i, j))
        })
    }
}

/// A symmetric relation `∼` on edges of a system.
///
/// Custom pairs are stored unordered; reflexive pairs are irrelevant (a
/// single edge is always related to itself) and dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    Total,
    Disjointness,
    Custom(BTreeSet<(usize, usize)>),
}

impl Relation {
    pub fn custom(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Relation::Custom(
            pairs
                .into_iter()
                .filter(|(i, j)| i != j)
                .map(|(i, j)| (i.min(j), i.max(j)))
                .collect(),
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Relation::Total => "total",
            Relation::Disjointness => "disjointness",
            Relation::Custom(_) => "custom",
        }
    }

    pub fn related(&self, system: &IntersectionSystem, i: usize, j: usize) -> bool {
        if i == j {
            return true;
        }
        match self {
            Relation::Total => true,
            Relation::Disjointness => !system.meets(i, j),
            Relation::Custom(pairs) => pairs.contains(&(i.min(j), i.max(j))),
        }
    }

    /// Checks that every disjoint pair among `indices` is related and that
    /// custom pairs reference only those indices.
    pub fn validate(&self, system: &IntersectionSystem, indices: &[usize]) -> Result<()> {
        if let Relation::Custom(pairs) = self {
            let allowed: BTreeSet<usize> = indices.iter().copied().collect();
            if let Some(&(i, j)) = pairs
                .iter()
                .find(|(i, j)| !allowed.contains(i) || !allowed.contains(j))
            {
                return Err(Error::InvalidRelation(format!(
                    "pair ({i},{j}) references an unknown edge"
                )));
            }
            for (a, &i) in indices.iter().enumerate() {
                for &j in &indices[a + 1..] {
                    if !system.meets(i, j) && !self.related(system, i, j) {
                        return Err(Error::InvalidRelation(format!(
                            "disjoint pair ({i},{j}) is not related"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Host tree, a family `h2` of subtrees, a subfamily `h1` given by indices
/// into `h2`, and a relation on `h2` containing disjointness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreeInstance {
    tree: Tree,
    h2: Vec<Subtree>,
    h1: Vec<usize>,
    relation: Relation,
}

impl SubtreeInstance {
    pub fn new(tree: Tree, h2: Vec<Subtree>, h1: Vec<usize>, relation: Relation) -> Result<Self> {
        for t in &h2 {
            if !tree.is_subtree(t.vertices())? {
                return Err(Error::InvalidSubtree(format!("{:?}", t.vertices())));
            }
        }
        let mut sorted = h1.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != h1.len() {
            return Err(Error::InvalidInstance("h1 lists an index twice".into()));
        }
        if let Some(&i) = h1.iter().find(|&&i| i >= h2.len()) {
            return Err(Error::InvalidInstance(format!(
                "h1 index {i} outside h2 (size {})",
                h2.len()
            )));
        }
        let instance = SubtreeInstance {
            tree,
            h2,
            h1: sorted,
            relation,
        };
        let all: Vec<usize> = (0..instance.h2.len()).collect();
        instance.relation.validate(&instance.system(), &all)?;
        Ok(instance)
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn h2(&self) -> &[Subtree] {
        &self.h2
    }

    pub fn h1(&self) -> &[usize] {
        &self.h1
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    /// System over `h2`; indices coincide with `h2` positions.
    pub fn system(&self) -> IntersectionSystem {
        IntersectionSystem::from_subtrees(&self.h2)
    }
}

/// One edge `{x} ∪ V(t)` of a point-tree hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointTreeEdge {
    pub x: usize,
    pub t: Subtree,
}

/// Edges `{x(e)} ∪ V(t(e))` with `x(e)` from the point set `0..x_count`
/// and `t(e)` a subtree of `tree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointTreeHypergraph {
    x_count: usize,
    tree: Tree,
    edges: Vec<PointTreeEdge>,
}

impl PointTreeHypergraph {
    pub fn new(x_count: usize, tree: Tree, edges: Vec<PointTreeEdge>) -> Result<Self> {
        for e in &edges {
            if e.x >= x_count {
                return Err(Error::InvalidInstance(format!(
                    "point {} outside 0..{x_count}",
                    e.x
                )));
            }
            if !tree.is_subtree(e.t.vertices())? {
                return Err(Error::InvalidSubtree(format!("{:?}", e.t.vertices())));
            }
        }
        Ok(PointTreeHypergraph {
            x_count,
            tree,
            edges,
        })
    }

    pub fn x_count(&self) -> usize {
        self.x_count
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn edges(&self) -> &[PointTreeEdge] {
        &self.edges
    }

    pub fn edge_label(e: &PointTreeEdge) -> String {
        format!("x{}+{:?}", e.x, e.t.vertices())
    }

    /// System over the edges alone: equal points or intersecting subtrees.
    pub fn system(&self) -> IntersectionSystem {
        let labels = self.edges.iter().map(Self::edge_label).collect();
        IntersectionSystem::from_predicate(labels, |i, j| {
            let (a, b) = (&self.edges[i], &self.edges[j]);
            a.x == b.x || a.t.meets(&b.t)
        })
    }
}
