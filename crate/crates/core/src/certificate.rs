//! Width certificates and the validators that check them.
//!
//! The validators only use the meets relation and the `∼` relation
//! directly; none of them call back into the solvers.

use serde::Serialize;

use crate::model::{IntersectionSystem, Relation};

/// A width value with witnesses. Indices refer to the edges of the
/// [`IntersectionSystem`] the query ran on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WidthCertificate {
    pub value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matching: Option<Vec<usize>>,
}

/// Every target meets some member of `cover`.
pub fn covers(system: &IntersectionSystem, targets: &[usize], cover: &[usize]) -> bool {
    targets
        .iter()
        .all(|&t| cover.iter().any(|&c| system.meets(t, c)))
}

pub fn pairwise_related(system: &IntersectionSystem, relation: &Relation, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(a, &i)| {
        set[a + 1..]
            .iter()
            .all(|&j| relation.related(system, i, j))
    })
}

pub fn is_matching(system: &IntersectionSystem, set: &[usize]) -> bool {
    system.is_matching(set)
}

fn distinct(set: &[usize]) -> bool {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Checks a cover certificate: the cover is drawn from `pool`, has
/// `value` distinct members, is pairwise related and covers `targets`.
pub fn validate_cover(
    system: &IntersectionSystem,
    targets: &[usize],
    pool: &[usize],
    relation: &Relation,
    value: usize,
    cover: &[usize],
) -> bool {
    cover.len() == value
        && distinct(cover)
        && cover.iter().all(|c| pool.contains(c))
        && pairwise_related(system, relation, cover)
        && covers(system, targets, cover)
}

/// Checks a matching-width certificate: the matching lies inside
/// `targets`, is a matching, and the attached cover validates against it.
pub fn validate_matching_width(
    system: &IntersectionSystem,
    targets: &[usize],
    pool: &[usize],
    relation: &Relation,
    cert: &WidthCertificate,
) -> bool {
    let (Some(matching), Some(cover)) = (&cert.matching, &cert.cover) else {
        return false;
    };
    distinct(matching)
        && matching.iter().all(|m| targets.contains(m))
        && is_matching(system, matching)
        && validate_cover(system, matching, pool, relation, cert.value, cover)
}
