//! Naive reference answers. Everything here works from raw geometry and
//! plain powerset loops, sharing no search code with the library.
#![allow(dead_code)]

use std::collections::BTreeSet;

use mwidth::model::{IntervalFamily, Point};

/// Symmetric meets matrix; the diagonal is true.
pub type Meets = Vec<Vec<bool>>;

pub fn meets_of_sets(sets: &[BTreeSet<usize>]) -> Meets {
    sets.iter()
        .map(|a| sets.iter().map(|b| a.intersection(b).next().is_some()).collect())
        .collect()
}

pub fn raw_intervals(f: &IntervalFamily) -> Vec<(Point, Point)> {
    f.intervals().iter().map(|iv| (iv.lo(), iv.hi())).collect()
}

pub fn meets_of_intervals(ivs: &[(Point, Point)]) -> Meets {
    ivs.iter()
        .map(|a| ivs.iter().map(|b| !(a.1 < b.0 || b.1 < a.0)).collect())
        .collect()
}

fn members(mask: u64, items: &[usize]) -> Vec<usize> {
    (0..items.len()).filter(|b| mask >> b & 1 == 1).map(|b| items[b]).collect()
}

pub fn is_matching(meets: &Meets, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(a, &i)| set[a + 1..].iter().all(|&j| !meets[i][j]))
}

/// Minimum size of a pairwise-related subset of `pool` meeting every
/// target, or `None` if there is none.
pub fn width(
    meets: &Meets,
    targets: &[usize],
    pool: &[usize],
    related: &dyn Fn(usize, usize) -> bool,
) -> Option<usize> {
    let mut best: Option<usize> = None;
    for mask in 0u64..(1 << pool.len()) {
        let chosen = members(mask, pool);
        if best.is_some_and(|b| chosen.len() >= b) {
            continue;
        }
        let pairwise = chosen
            .iter()
            .enumerate()
            .all(|(a, &i)| chosen[a + 1..].iter().all(|&j| i == j || related(i, j)));
        if pairwise && targets.iter().all(|&t| chosen.iter().any(|&c| meets[c][t])) {
            best = Some(chosen.len());
        }
    }
    best
}

/// Maximum of `width(M)` over all matchings `M ⊆ targets`.
pub fn matching_width(
    meets: &Meets,
    targets: &[usize],
    pool: &[usize],
    related: &dyn Fn(usize, usize) -> bool,
) -> Option<usize> {
    let mut best = 0;
    for mask in 0u64..(1 << targets.len()) {
        let m = members(mask, targets);
        if is_matching(meets, &m) {
            best = best.max(width(meets, &m, pool, related)?);
        }
    }
    Some(best)
}

pub fn total(_: usize, _: usize) -> bool {
    true
}

pub fn disjoint(meets: &Meets) -> impl Fn(usize, usize) -> bool + '_ {
    move |i, j| !meets[i][j]
}

pub fn matching_number(meets: &Meets, targets: &[usize]) -> usize {
    (0u64..(1 << targets.len()))
        .map(|mask| members(mask, targets))
        .filter(|m| is_matching(meets, m))
        .map(|m| m.len())
        .max()
        .unwrap_or(0)
}

/// All-pairs shortest path lengths by Floyd–Warshall; `None` means
/// unreachable.
pub fn distances(adj: &Meets) -> Vec<Vec<Option<usize>>> {
    let n = adj.len();
    let mut d: Vec<Vec<Option<usize>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i == j, adj[i][j]) {
                    (true, _) => Some(0),
                    (false, true) => Some(1),
                    _ => None,
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn far(d: &[Vec<Option<usize>>], i: usize, j: usize, k: usize) -> bool {
    d[i][j].is_none_or(|x| x > k)
}

/// Largest set of vertices at pairwise distance > k.
pub fn gamma(adj: &Meets, k: usize) -> usize {
    let d = distances(adj);
    let all: Vec<usize> = (0..adj.len()).collect();
    (0u64..(1 << all.len()))
        .map(|mask| members(mask, &all))
        .filter(|s| s.iter().enumerate().all(|(a, &i)| s[a + 1..].iter().all(|&j| far(&d, i, j, k))))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Fewest sets of diameter <= k covering all vertices, by dynamic
/// programming over subsets.
pub fn rho(adj: &Meets, k: usize) -> usize {
    let n = adj.len();
    let d = distances(adj);
    let full = (1u64 << n) - 1;
    let small: Vec<bool> = (0..=full)
        .map(|mask| {
            let s: Vec<usize> = (0..n).filter(|b| mask >> b & 1 == 1).collect();
            s.iter().all(|&i| s.iter().all(|&j| !far(&d, i, j, k)))
        })
        .collect();
    let mut best = vec![usize::MAX; (full + 1) as usize];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let mut sub = mask;
        while sub > 0 {
            if sub & low != 0 && small[sub as usize] && best[(mask ^ sub) as usize] != usize::MAX {
                best[mask as usize] = best[mask as usize].min(best[(mask ^ sub) as usize] + 1);
            }
            sub = (sub - 1) & mask;
        }
    }
    best[full as usize]
}

/// Every dense matching of a family with distinct endpoints, as index
/// sequences ordered left to right (including the empty one).
pub fn dense_matchings(ivs: &[(Point, Point)]) -> Vec<Vec<usize>> {
    let inside = |lo: Option<Point>, hi: Point| ivs.iter().any(|g| lo.is_none_or(|l| l < g.0) && g.1 < hi);
    let mut out = Vec::new();
    let mut stack = vec![Vec::<usize>::new()];
    while let Some(e) = stack.pop() {
        let last = e.last().map(|&i| ivs[i].1);
        for (f, iv) in ivs.iter().enumerate() {
            if last.is_none_or(|b| b < iv.0) && !inside(last, iv.0) {
                let mut next = e.clone();
                next.push(f);
                stack.push(next);
            }
        }
        out.push(e);
    }
    out.sort();
    out
}

/// The witness set built from literal dense-matching enumeration:
/// `d_i(E) = ℓ(F(>b_{i-1}))`, kept when `L_j`-free for `j <= i` if
/// `include_own_level`, else for `j < i`.
pub fn witness_by_enumeration(ivs: &[(Point, Point)], include_own_level: bool) -> Vec<usize> {
    let dense = dense_matchings(ivs);
    let depth = dense.iter().map(|e| e.len()).max().unwrap_or(0);
    let levels: Vec<BTreeSet<Point>> = (0..depth)
        .map(|j| dense.iter().filter(|e| e.len() > j).map(|e| ivs[e[j]].1).collect())
        .collect();
    let leftmost_after = |x: Option<Point>| {
        (0..ivs.len())
            .filter(|&i| x.is_none_or(|b| ivs[i].0 > b))
            .min_by(|&a, &b| ivs[a].1.cmp(&ivs[b].1).then(a.cmp(&b)))
    };
    let mut m = BTreeSet::new();
    for e in &dense {
        for i in 1..=e.len() + 1 {
            let b = (i > 1).then(|| ivs[e[i - 2]].1);
            let Some(d) = leftmost_after(b) else { continue };
            let (lo, hi) = ivs[d];
            let top = if include_own_level { i } else { i - 1 };
            let free = levels
                .iter()
                .take(top)
                .all(|l| l.iter().all(|&p| !(lo <= p && p < hi)));
            if free {
                m.insert(d);
            }
        }
    }
    m.into_iter().collect()
}
