//! Algorithms specific to families of closed intervals.
//!
//! Notation: `ℓ(F)` is the interval of `F` with the smallest right
//! endpoint and `F(>x)` is the set of intervals lying entirely inside
//! `(x, ∞)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{IntersectionSystem, IntervalFamily, Point, SimpleGraph};
use crate::powers::gamma_k;

/// Indices of `F(>x)`; `None` stands for `x = -∞`.
pub fn restrict_right(family: &IntervalFamily, x: Option<Point>) -> Vec<usize> {
    (0..family.len())
        .filter(|&i| x.is_none_or(|x| family.get(i).right_of(x)))
        .collect()
}

/// `ℓ` of the sub-family `indices`: minimal right endpoint, smallest index
/// on ties.
pub fn leftmost_of(family: &IntervalFamily, indices: &[usize]) -> Option<usize> {
    indices
        .iter()
        .copied()
        .min_by_key(|&i| (family.get(i).hi(), i))
}

/// `ℓ(F)`.
pub fn leftmost(family: &IntervalFamily) -> Result<usize> {
    leftmost_of(family, &(0..family.len()).collect::<Vec<_>>()).ok_or(Error::EmptyFamily)
}

/// A 2-remote set `R` and a covering set `C` of equal size, paired by
/// position: `c_i` is the interval meeting `r_i` that reaches furthest right.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyCertificates {
    #[serde(rename = "R")]
    pub remote: Vec<usize>,
    #[serde(rename = "C")]
    pub cover: Vec<usize>,
}

impl GreedyCertificates {
    pub fn width(&self) -> usize {
        self.cover.len()
    }
}

pub fn greedy_certificates(family: &IntervalFamily) -> Result<GreedyCertificates> {
    let mut r = leftmost(family)?;
    let mut certs = GreedyCertificates {
        remote: Vec::new(),
        cover: Vec::new(),
    };
    loop {
        let anchor = family.get(r);
        let c = (0..family.len())
            .filter(|&j| family.get(j).meets(&anchor))
            .min_by_key(|&j| (std::cmp::Reverse(family.get(j).hi()), j))
            .expect("r meets itself");
        certs.remote.push(r);
        certs.cover.push(c);
        match leftmost_of(family, &restrict_right(family, Some(family.get(c).hi()))) {
            Some(next) => r = next,
            None => return Ok(certs),
        }
    }
}

/// True iff no two members meet and no interval of the family meets two
/// members, i.e. pairwise line-graph distance exceeds 2.
pub fn is_two_remote(system: &IntersectionSystem, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(a, &r)| {
        set[a + 1..].iter().all(|&s| {
            r != s
                && !system.meets(r, s)
                && (0..system.m()).all(|f| !(system.meets(f, r) && system.meets(f, s)))
        })
    })
}

/// `ζ_k`: largest `k`-remote edge set, i.e. `γ_k` of the line graph.
pub fn zeta_k(system: &IntersectionSystem, k: usize, cap: usize) -> Result<(usize, Vec<usize>)> {
    gamma_k(&SimpleGraph::line_graph(system), k, cap)
}

/// Splits the family into `|C|` groups, group `i` holding intervals whose
/// first meeting member of `C` is `c_i`; every group has radius 1 around
/// its center.
pub fn radius1_partition(family: &IntervalFamily) -> Result<Vec<Vec<usize>>> {
    let certs = greedy_certificates(family)?;
    let mut groups = vec![Vec::new(); certs.cover.len()];
    for i in 0..family.len() {
        let g = certs
            .cover
            .iter()
            .position(|&c| family.get(c).meets(&family.get(i)))
            .expect("C covers the family");
        groups[g].push(i);
    }
    Ok(groups)
}

/// `D_j`: intervals occurring at position `j` of some dense matching;
/// `L_j`: their right endpoints. Index 0 holds `D_1`/`L_1`; only nonempty
/// levels are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct DensePositionTable {
    pub d: Vec<Vec<usize>>,
    #[serde(skip)]
    pub l: Vec<BTreeSet<Point>>,
}

/// No interval of the family lies strictly inside `(after, before)`;
/// `after = None` means `-∞`.
fn gap_empty(family: &IntervalFamily, after: Option<Point>, before: Point) -> bool {
    family
        .intervals()
        .iter()
        .all(|g| !(after.is_none_or(|a| g.lo() > a) && g.hi() < before))
}

pub fn dense_positions(family: &IntervalFamily) -> Result<DensePositionTable> {
    if !family.endpoints_distinct() {
        return Err(Error::EndpointsNotDistinct);
    }
    let n = family.len();
    let mut table = DensePositionTable::default();
    let mut level: Vec<usize> = (0..n)
        .filter(|&e| gap_empty(family, None, family.get(e).lo()))
        .collect();
    while !level.is_empty() {
        let next: Vec<usize> = (0..n)
            .filter(|&f| {
                let lo = family.get(f).lo();
                level.iter().any(|&e| {
                    let hi = family.get(e).hi();
                    hi < lo && gap_empty(family, Some(hi), lo)
                })
            })
            .collect();
        table.l.push(level.iter().map(|&e| family.get(e).hi()).collect());
        table.d.push(level);
        level = next;
    }
    Ok(table)
}

/// `[a,b] ∩ L ⊆ {b}`.
fn is_free(lo: Point, hi: Point, endpoints: &BTreeSet<Point>) -> bool {
    endpoints.range(lo..hi).next().is_none()
}

/// A matching `M` with `iw(M, F) = iw(F)`.
///
/// `M` collects every interval that equals `d_i(E) = ℓ(F(>b_{i-1}))` for
/// some dense matching `E` and is `L_j`-free for all `j < i`. Candidates
/// at position `i` depend only on `b_{i-1} ∈ L_{i-1}`, so they are read off
/// the dense position table. Work happens on a copy with distinct
/// endpoints; returned indices refer to `family`.
///
/// Requiring freeness for `j = i` as well (see
/// [`iw_witness_matching_literal`]) can discard every candidate past the
/// first position: on `[2,3],[1,5],[4,7],[6,8]` it keeps only `[2,3]`, whose
/// independent width is 1 while `iw(F) = 2`. The candidate `d_i` always
/// has its own right endpoint in `L_i`, and another member of `L_i` may
/// fall inside it.
pub fn iw_witness_matching(family: &IntervalFamily) -> Result<Vec<usize>> {
    witness(family, false)
}

/// The construction with `L_j`-freeness for all `j <= i`. Always a
/// matching, but not always a witness.
pub fn iw_witness_matching_literal(family: &IntervalFamily) -> Result<Vec<usize>> {
    witness(family, true)
}

fn witness(family: &IntervalFamily, include_own_level: bool) -> Result<Vec<usize>> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let f = family.make_endpoints_distinct();
    let table = dense_positions(&f)?;
    let empty = BTreeSet::new();
    let endpoints = |j: usize| table.l.get(j - 1).unwrap_or(&empty);
    let last_level = |i: usize| if include_own_level { i } else { i - 1 };

    let mut witness = BTreeSet::new();
    for i in 1..=table.d.len() + 1 {
        let candidates: BTreeSet<usize> = if i == 1 {
            leftmost_of(&f, &restrict_right(&f, None)).into_iter().collect()
        } else {
            endpoints(i - 1)
                .iter()
                .filter_map(|&b| leftmost_of(&f, &restrict_right(&f, Some(b))))
                .collect()
        };
        for d in candidates {
            let iv = f.get(d);
            if (1..=last_level(i)).all(|j| is_free(iv.lo(), iv.hi(), endpoints(j))) {
                witness.insert(d);
            }
        }
    }
    Ok(witness.into_iter().collect())
}
