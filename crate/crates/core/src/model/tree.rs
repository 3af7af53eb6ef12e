use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// A finite tree on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Tree {
    /// Validates `edges` as a spanning tree on `n` vertices.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotATree("a tree needs at least one vertex".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} edges on {} vertices, expected {}",
                edges.len(),
                n,
                n - 1
            )));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::NotATree(format!("edge ({u},{v}) leaves 0..{n}")));
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::NotATree(format!("duplicate edge ({u},{v})")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let tree = Tree {
            n,
            edges: edges.to_vec(),
            adjacency,
        };
        // n - 1 distinct edges plus connectivity rules out cycles.
        if tree.component_size(0, |_| true) != n {
            return Err(Error::NotATree("graph is disconnected".into()));
        }
        Ok(tree)
    }

    pub fn single_vertex() -> Self {
        Tree::new(1, &[]).expect("single vertex is a tree")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Tree::new(n, &edges).expect("path is a tree")
    }

    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Tree::new(leaves + 1, &edges).expect("star is a tree")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    fn component_size(&self, start: usize, allowed: impl Fn(usize) -> bool) -> usize {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut count = 0;
        while let Some(v) = queue.pop_front() {
            count += 1;
            for &u in &self.adjacency[v] {
                if !seen[u] && allowed(u) {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        count
    }

    /// True iff `vertices` is nonempty and induces a connected subgraph.
    pub fn is_subtree(&self, vertices: &BTreeSet<usize>) -> Result<bool> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let Some(&start) = vertices.iter().next() else {
            return Ok(false);
        };
        Ok(self.component_size(start, |u| vertices.contains(&u)) == vertices.len())
    }
}

/// The vertex set of a subtree of some host [`Tree`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subtree(BTreeSet<usize>);

impl Subtree {
    pub fn new(tree: &Tree, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = vertices.into_iter().collect();
        if !tree.is_subtree(&set)? {
            return Err(Error::InvalidSubtree(format!(
                "{set:?} is empty or disconnected"
            )));
        }
        Ok(Subtree(set))
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.0
    }

    pub fn meets(&self, other: &Subtree) -> bool {
        !self.0.is_disjoint(&other.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn validates_trees() {
        assert!(Tree::new(1, &[]).is_ok());
        assert!(Tree::new(3, &[(0, 1), (1, 2)]).is_ok());
        assert!(matches!(
            Tree::new(3, &[(0, 1), (1, 2), (0, 2)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(Tree::new(0, &[]), Err(Error::NotATree(_))));
        assert!(matches!(Tree::new(2, &[(1, 1)]), Err(Error::NotATree(_))));
        assert!(matches!(
            Tree::new(4, &[(0, 1), (0, 1), (2, 3)]),
            Err(Error::NotATree(_))
        ));
        // right edge count, but a cycle plus an isolated vertex
        assert!(matches!(
            Tree::new(4, &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::NotATree(_))
        ));
    }

    #[test]
    fn subtree_membership() {
        let path = Tree::path(3);
        assert!(!path.is_subtree(&set(&[0, 2])).unwrap());
        assert!(path.is_subtree(&set(&[0, 1])).unwrap());
        assert!(!path.is_subtree(&set(&[])).unwrap());
        let star = Tree::star(3);
        assert!(!star.is_subtree(&set(&[1, 2, 3])).unwrap());
        assert!(star.is_subtree(&set(&[0, 2, 3])).unwrap());
        assert_eq!(
            path.is_subtree(&set(&[5])),
            Err(Error::VertexOutOfRange { vertex: 5, n: 3 })
        );
    }
}
