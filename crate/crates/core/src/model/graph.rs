use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::model::system::IntersectionSystem;

/// Undirected loopless graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![vec![false; n]; n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::empty(n);
        for u in 0..n {
            for v in 0..u {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, &(1..n).map(|v| (v - 1, v)).collect::<Vec<_>>())
            .expect("path edges are in range")
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInstance(format!("edge ({u},{v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidInstance(format!("loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Line graph of a hypergraph: one vertex per edge, adjacent iff the
    /// edges meet.
    pub fn line_graph(system: &IntersectionSystem) -> Self {
        let mut g = SimpleGraph::empty(system.m());
        for i in 0..system.m() {
            for j in 0..i {
                if system.meets(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u][v] = true;
        self.adj[v][u] = true;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u]
            .iter()
            .enumerate()
            .filter_map(|(v, &b)| b.then_some(v))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| ((u + 1)..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.adj[u][v])
            .collect()
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices have a distance");
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.n);
        for u in 0..self.n {
            for v in 0..u {
                if !self.adj[u][v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

/// Strict partial order on `0..n`; a pair `(i, j)` means `i ≻ j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    greater: BTreeSet<(usize, usize)>,
}

impl Poset {
    /// Validates irreflexivity and transitivity (cubic check).
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let greater: BTreeSet<(usize, usize)> = pairs.into_iter().collect();
        for &(i, j) in &greater {
            if i >= n || j >= n {
                return Err(Error::NotAPartialOrder(format!("pair ({i},{j}) outside 0..{n}")));
            }
            if i == j {
                return Err(Error::NotAPartialOrder(format!("{i} ≻ {i}")));
            }
        }
        let poset = Poset { n, greater };
        for &(a, b) in &poset.greater {
            for c in 0..n {
                if poset.gt(b, c) && !poset.gt(a, c) {
                    return Err(Error::NotAPartialOrder(format!(
                        "{a} ≻ {b} ≻ {c} but not {a} ≻ {c}"
                    )));
                }
            }
        }
        Ok(poset)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True iff `i ≻ j`.
    pub fn gt(&self, i: usize, j: usize) -> bool {
        self.greater.contains(&(i, j))
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.gt(i, j) || self.gt(j, i)
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bfs_distances_on_path() {
        let g = SimpleGraph::path(4);
        assert_eq!(g.distances_from(0), vec![Some(0), Some(1), Some(2), Some(3)]);
        let h = SimpleGraph::empty(2);
        assert_eq!(h.distances_from(0), vec![Some(0), None]);
    }

    #[test]
    fn poset_validation() {
        assert!(Poset::new(3, [(2, 1), (1, 0), (2, 0)]).is_ok());
        assert!(matches!(
            Poset::new(3, [(2, 1), (1, 0)]),
            Err(Error::NotAPartialOrder(_))
        ));
        assert!(Poset::new(2, [(0, 0)]).is_err());
        // a 2-cycle breaks transitivity via the missing loop
        assert!(Poset::new(2, [(0, 1), (1, 0)]).is_err());
    }
}
