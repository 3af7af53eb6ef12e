//! Exact width parameters by bounded exhaustive search.
//!
//! `w`, `mw`, `iw`, `imw` and the matching number are computed over an
//! [`IntersectionSystem`] with targets and pool given as index lists.
//! Covers are found by iterative deepening over pool subsets in
//! lexicographic order, so witnesses are reproducible.

use crate::certificate::WidthCertificate;
use crate::error::{Error, Result};
use crate::model::{IntersectionSystem, Relation};

/// Bitmask searches cannot go beyond this many elements.
pub const HARD_LIMIT: usize = 64;

/// Instance-size guards for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub pool: usize,
    pub targets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            pool: 24,
            targets: 20,
        }
    }
}

impl Caps {
    /// One cap for everything, as set by `--cap`.
    pub fn uniform(cap: usize) -> Self {
        Caps {
            pool: cap,
            targets: cap,
        }
    }

    pub(crate) fn check(what: &'static str, size: usize, cap: usize) -> Result<()> {
        let cap = cap.min(HARD_LIMIT);
        if size > cap {
            return Err(Error::SizeCapExceeded { what, size, cap });
        }
        Ok(())
    }
}

/// "Cover `targets` with a pairwise `∼`-related subset of `pool`."
#[derive(Debug, Clone)]
pub struct WidthQuery<'a> {
    pub system: &'a IntersectionSystem,
    pub targets: Vec<usize>,
    pub pool: Vec<usize>,
    pub relation: Relation,
    pub caps: Caps,
}

impl<'a> WidthQuery<'a> {
    pub fn new(
        system: &'a IntersectionSystem,
        targets: Vec<usize>,
        pool: Vec<usize>,
        relation: Relation,
    ) -> Self {
        WidthQuery {
            system,
            targets,
            pool,
            relation,
            caps: Caps::default(),
        }
    }

    /// `w(H)`-style query: every edge is both target and pool.
    pub fn whole(system: &'a IntersectionSystem, relation: Relation) -> Self {
        let all: Vec<usize> = (0..system.m()).collect();
        WidthQuery::new(system, all.clone(), all, relation)
    }

    pub fn with_caps(mut self, caps: Caps) -> Self {
        self.caps = caps;
        self
    }

    pub fn with_targets(&self, targets: Vec<usize>) -> Self {
        WidthQuery {
            targets,
            ..self.clone()
        }
    }

    pub fn with_relation(&self, relation: Relation) -> Self {
        WidthQuery {
            relation,
            ..self.clone()
        }
    }

    fn check_indices(&self) -> Result<()> {
        let m = self.system.m();
        if let Some(&i) = self.targets.iter().chain(&self.pool).find(|&&i| i >= m) {
            return Err(Error::InvalidInstance(format!("edge index {i} outside 0..{m}")));
        }
        Ok(())
    }
}

struct CoverSearch {
    pool_len: usize,
    full: u64,
    // per pool position: targets it meets
    reach: Vec<u64>,
    // per pool position: pool positions it is related to
    compat: Vec<u64>,
    // per target position: pool positions meeting it
    coverers: Vec<u64>,
}

impl CoverSearch {
    fn new(query: &WidthQuery<'_>) -> Self {
        let sys = query.system;
        let (targets, pool) = (&query.targets, &query.pool);
        let reach = pool
            .iter()
            .map(|&p| mask_where(targets.len(), |t| sys.meets(p, targets[t])))
            .collect();
        let compat = pool
            .iter()
            .map(|&p| mask_where(pool.len(), |q| query.relation.related(sys, p, pool[q])))
            .collect();
        let coverers = targets
            .iter()
            .map(|&t| mask_where(pool.len(), |q| sys.meets(t, pool[q])))
            .collect();
        CoverSearch {
            pool_len: pool.len(),
            full: low_bits(targets.len()),
            reach,
            compat,
            coverers,
        }
    }

    fn dfs(
        &self,
        slots: usize,
        start: usize,
        covered: u64,
        allowed: u64,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if covered == self.full {
            return true;
        }
        if slots == 0 {
            return false;
        }
        let first_uncovered = (!covered & self.full).trailing_zeros() as usize;
        let needed = self.coverers[first_uncovered];
        for p in start..self.pool_len {
            let later = allowed & !low_bits(p);
            // the lowest uncovered target must be hit by p or a later pick
            if later & needed == 0 {
                return false;
            }
            if allowed & (1 << p) == 0 {
                continue;
            }
            chosen.push(p);
            if self.dfs(
                slots - 1,
                p + 1,
                covered | self.reach[p],
                allowed & self.compat[p],
                chosen,
            ) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_where(n: usize, pred: impl Fn(usize) -> bool) -> u64 {
    (0..n).filter(|&i| pred(i)).fold(0, |m, i| m | (1 << i))
}

/// Minimum size of a pairwise-related subset of the pool covering the
/// targets: `w(H₁, H₂, ∼)`.
pub fn cover_width(query: &WidthQuery<'_>) -> Result<WidthCertificate> {
    query.check_indices()?;
    Caps::check("pool", query.pool.len(), query.caps.pool)?;
    Caps::check("targets", query.targets.len(), query.caps.targets)?;
    if query.targets.is_empty() {
        return Ok(WidthCertificate {
            value: 0,
            cover: Some(Vec::new()),
            matching: None,
        });
    }
    let search = CoverSearch::new(query);
    if search.coverers.contains(&0) {
        return Err(Error::Uncoverable);
    }
    let mut chosen = Vec::new();
    for size in 1..=search.pool_len {
        if search.dfs(size, 0, 0, low_bits(search.pool_len), &mut chosen) {
            let cover: Vec<usize> = chosen.iter().map(|&p| query.pool[p]).collect();
            return Ok(WidthCertificate {
                value: cover.len(),
                cover: Some(cover),
                matching: None,
            });
        }
    }
    Err(Error::Uncoverable)
}

/// `cover_width` with the covering set required to be a matching.
pub fn independent_width(query: &WidthQuery<'_>) -> Result<WidthCertificate> {
    cover_width(&query.with_relation(Relation::Disjointness))
}

/// Maximum of `cover_width(M)` over matchings `M` inside the targets.
///
/// Width is monotone under adding targets, so only maximal matchings are
/// evaluated; the empty matching stands in when there are no targets.
pub fn matching_width(query: &WidthQuery<'_>) -> Result<WidthCertificate> {
    query.check_indices()?;
    Caps::check("targets", query.targets.len(), query.caps.targets)?;
    Caps::check("pool", query.pool.len(), query.caps.pool)?;
    let mut best = WidthCertificate {
        value: 0,
        cover: Some(Vec::new()),
        matching: Some(Vec::new()),
    };
    let cap = query.targets.len();
    for m in enumerate_matchings(query.system, &query.targets, cap) {
        if m.is_empty() || !is_maximal(query.system, &query.targets, &m) {
            continue;
        }
        let cert = cover_width(&query.with_targets(m.clone()))?;
        if cert.value > best.value {
            best = WidthCertificate {
                value: cert.value,
                cover: cert.cover,
                matching: Some(m),
            };
        }
    }
    Ok(best)
}

/// `matching_width` with covering sets required to be matchings.
pub fn independent_matching_width(query: &WidthQuery<'_>) -> Result<WidthCertificate> {
    matching_width(&query.with_relation(Relation::Disjointness))
}

fn is_maximal(system: &IntersectionSystem, targets: &[usize], matching: &[usize]) -> bool {
    targets
        .iter()
        .all(|&t| matching.iter().any(|&e| system.meets(t, e)))
}

/// Maximum matching inside `targets` with a witness (`ν`).
pub fn matching_number(system: &IntersectionSystem, targets: &[usize]) -> Result<(usize, Vec<usize>)> {
    Caps::check("targets", targets.len(), HARD_LIMIT)?;
    let n = targets.len();
    let conflict: Vec<u64> = (0..n)
        .map(|a| mask_where(n, |b| system.meets(targets[a], targets[b])))
        .collect();
    let mut best = Vec::new();
    let mut current = Vec::new();
    max_independent(&conflict, low_bits(n), &mut current, &mut best);
    Ok((best.len(), best.iter().map(|&p| targets[p]).collect()))
}

/// Branch and bound for a maximum independent set; `conflict[v]` must
/// contain `v` itself. Leaves the first maximum found (include-first
/// branching on the lowest candidate) in `best`.
pub(crate) fn max_independent(
    conflict: &[u64],
    candidates: u64,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if candidates == 0 {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    if current.len() + candidates.count_ones() as usize <= best.len() {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    current.push(v);
    max_independent(conflict, candidates & !conflict[v], current, best);
    current.pop();
    max_independent(conflict, candidates & !(1 << v), current, best);
}

/// Lazily yields every matching inside `targets` of size at most
/// `size_cap`, ordered by size and then lexicographically by position in
/// `targets`. Items are lists of system indices.
pub fn enumerate_matchings<'a>(
    system: &'a IntersectionSystem,
    targets: &'a [usize],
    size_cap: usize,
) -> MatchingEnumerator<'a> {
    MatchingEnumerator {
        system,
        targets,
        size_cap: size_cap.min(targets.len()),
        size: 0,
        current: Vec::new(),
        state: CursorState::Fresh,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CursorState {
    Fresh,
    Active,
    Done,
}

/// Cursor over matchings; owned by a single consumer.
pub struct MatchingEnumerator<'a> {
    system: &'a IntersectionSystem,
    targets: &'a [usize],
    size_cap: usize,
    size: usize,
    current: Vec<usize>,
    state: CursorState,
}

impl MatchingEnumerator<'_> {
    fn compatible(&self, p: usize) -> bool {
        let e = self.targets[p];
        self.current
            .iter()
            .all(|&q| !self.system.meets(e, self.targets[q]))
    }

    // Extends `current` to `size` elements using positions >= `next`,
    // backtracking as needed. Returns false once the size is exhausted.
    fn fill(&mut self, mut next: usize) -> bool {
        let n = self.targets.len();
        loop {
            if self.current.len() == self.size {
                return true;
            }
            let need = self.size - self.current.len();
            match (next..n).find(|&p| self.compatible(p)) {
                Some(p) if n - p >= need => {
                    self.current.push(p);
                    next = p + 1;
                }
                _ => match self.current.pop() {
                    Some(q) => next = q + 1,
                    None => return false,
                },
            }
        }
    }
}

impl Iterator for MatchingEnumerator<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let found = match self.state {
            CursorState::Done => return None,
            CursorState::Fresh => {
                self.state = CursorState::Active;
                self.fill(0)
            }
            CursorState::Active => match self.current.pop() {
                Some(q) => self.fill(q + 1),
                None => false,
            },
        };
        let found = found || loop {
            self.size += 1;
            if self.size > self.size_cap {
                break false;
            }
            self.current.clear();
            if self.fill(0) {
                break true;
            }
        };
        if !found {
            self.state = CursorState::Done;
            return None;
        }
        Some(self.current.iter().map(|&p| self.targets[p]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{validate_cover, validate_matching_width};
    use crate::model::{IntervalFamily, Subtree, Tree};

    fn intervals(pairs: &[(i64, i64)]) -> IntersectionSystem {
        IntersectionSystem::from_intervals(&IntervalFamily::from_ints(pairs))
    }

    #[test]
    fn disjoint_triple_needs_three() {
        let s = intervals(&[(0, 1), (2, 3), (4, 5)]);
        let q = WidthQuery::whole(&s, Relation::Total);
        assert_eq!(cover_width(&q).unwrap().value, 3);
        assert_eq!(matching_width(&q).unwrap().value, 3);
    }

    #[test]
    fn empty_targets_give_zero() {
        let s = intervals(&[(0, 1)]);
        let q = WidthQuery::new(&s, vec![], vec![0], Relation::Total);
        let c = cover_width(&q).unwrap();
        assert_eq!((c.value, c.cover), (0, Some(vec![])));
        let mw = matching_width(&q).unwrap();
        assert_eq!((mw.value, mw.matching), (0, Some(vec![])));
    }

    #[test]
    fn overlapping_chain_has_width_one() {
        let s = intervals(&[(0, 2), (1, 3), (2, 4)]);
        let q = WidthQuery::whole(&s, Relation::Total);
        let c = cover_width(&q).unwrap();
        assert_eq!(c.value, 1);
        // lexicographically first single coverer
        assert_eq!(c.cover, Some(vec![0]));
        assert!(validate_cover(&s, &q.targets, &q.pool, &q.relation, 1, &[0]));
        let mw = matching_width(&q).unwrap();
        assert_eq!(mw.value, 1);
        assert!(validate_matching_width(&s, &q.targets, &q.pool, &q.relation, &mw));
    }

    #[test]
    fn single_edge_widths() {
        let s = intervals(&[(3, 7)]);
        let q = WidthQuery::whole(&s, Relation::Total);
        for f in [cover_width, matching_width, independent_width, independent_matching_width] {
            assert_eq!(f(&q).unwrap().value, 1);
        }
    }

    #[test]
    fn independent_widths() {
        let s = intervals(&[(0, 2), (1, 4), (3, 5)]);
        let q = WidthQuery::whole(&s, Relation::Total);
        // [1,4] alone meets everything
        let iw = independent_width(&q).unwrap();
        assert_eq!(iw.value, 1);
        assert_eq!(iw.cover, Some(vec![1]));
        assert_eq!(independent_matching_width(&q).unwrap().value, 1);

        let s = intervals(&[(0, 1), (3, 4), (6, 7)]);
        let q = WidthQuery::whole(&s, Relation::Total);
        assert_eq!(independent_width(&q).unwrap().cover, Some(vec![0, 1, 2]));

        let s = intervals(&[(0, 10), (1, 2), (3, 4)]);
        let q = WidthQuery::whole(&s, Relation::Total);
        assert_eq!(independent_width(&q).unwrap().value, 1);

        let s = intervals(&[(0, 1), (2, 3)]);
        let q = WidthQuery::whole(&s, Relation::Total);
        assert_eq!(independent_matching_width(&q).unwrap().value, 2);
    }

    #[test]
    fn uncoverable_when_target_meets_nothing() {
        let s = intervals(&[(0, 1), (5, 6)]);
        let q = WidthQuery::new(&s, vec![0], vec![1], Relation::Total);
        assert_eq!(cover_width(&q), Err(Error::Uncoverable));
        assert_eq!(matching_width(&q), Err(Error::Uncoverable));
    }

    #[test]
    fn uncoverable_when_relation_forbids_the_only_cover() {
        // [1,3] only reaches [0,2], [3,5] only reaches [4,6], and the two
        // coverers touch at 3
        let s = intervals(&[(0, 2), (4, 6), (1, 3), (3, 5)]);
        let q = WidthQuery::new(&s, vec![0, 1], vec![2, 3], Relation::Disjointness);
        assert_eq!(cover_width(&q), Err(Error::Uncoverable));
    }

    #[test]
    fn size_cap_is_enforced() {
        let pairs: Vec<(i64, i64)> = (0..30).map(|i| (2 * i, 2 * i + 1)).collect();
        let s = intervals(&pairs);
        let q = WidthQuery::whole(&s, Relation::Total);
        assert!(matches!(
            cover_width(&q),
            Err(Error::SizeCapExceeded { what: "pool", size: 30, cap: 24 })
        ));
        let q = q.with_caps(Caps::uniform(40));
        assert_eq!(cover_width(&q).unwrap().value, 30);
    }

    #[test]
    fn matching_numbers() {
        let s = intervals(&[(0, 3), (1, 4), (2, 5)]);
        assert_eq!(matching_number(&s, &[0, 1, 2]).unwrap().0, 1);
        let s = intervals(&[(0, 1), (2, 3), (4, 5)]);
        assert_eq!(matching_number(&s, &[0, 1, 2]).unwrap(), (3, vec![0, 1, 2]));
        let t = Tree::path(4);
        let subs: Vec<Subtree> = [[0, 1], [1, 2], [2, 3]]
            .iter()
            .map(|v| Subtree::new(&t, v.iter().copied()).unwrap())
            .collect();
        let s = IntersectionSystem::from_subtrees(&subs);
        assert_eq!(matching_number(&s, &[0, 1, 2]).unwrap(), (2, vec![0, 2]));
        assert_eq!(matching_number(&s, &[]).unwrap(), (0, vec![]));
    }

    #[test]
    fn enumeration_order() {
        let s = intervals(&[(0, 1), (2, 3)]);
        let all: Vec<_> = enumerate_matchings(&s, &[0, 1], 2).collect();
        assert_eq!(all, vec![vec![], vec![0], vec![1], vec![0, 1]]);

        let s = intervals(&[(0, 2), (1, 3)]);
        let all: Vec<_> = enumerate_matchings(&s, &[0, 1], 2).collect();
        assert_eq!(all, vec![vec![], vec![0], vec![1]]);

        let m = vec![
            vec![true, true, false],
            vec![true, true, true],
            vec![false, true, true],
        ];
        let s = IntersectionSystem::from_matrix(vec!["a".into(), "b".into(), "c".into()], m).unwrap();
        assert_eq!(enumerate_matchings(&s, &[0, 1, 2], 3).count(), 5);
        assert_eq!(enumerate_matchings(&s, &[0, 1, 2], 0).count(), 1);
    }
}
