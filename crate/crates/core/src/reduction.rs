//! Reduce `h1` to a matching of the same relation-constrained width.
//!
//! For subtrees of a tree, out of any two intersecting edges `c`, `d` of
//! `h1`, deleting one of them leaves `w(h1, h2, ∼)` unchanged. Repeating
//! this until no intersecting pair is left yields a matching `M ⊆ h1` with
//! `w(M) = w(h1)`, which shows `mw = w` for the instance.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{IntersectionSystem, SubtreeInstance};
use crate::oracle::{cover_width, Caps, WidthQuery};

/// One deletion step: the intersecting pair found and the edge removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub c: usize,
    pub d: usize,
    pub removed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reduction {
    /// Indices into `h2`.
    pub matching: Vec<usize>,
    pub width: usize,
    pub trace: Vec<ReductionStep>,
}

fn first_intersecting_pair(system: &IntersectionSystem, edges: &[usize]) -> Option<(usize, usize)> {
    edges.iter().enumerate().find_map(|(a, &c)| {
        edges[a + 1..]
            .iter()
            .find(|&&d| system.meets(c, d))
            .map(|&d| (c, d))
    })
}

pub fn reduce_to_matching(instance: &SubtreeInstance, caps: Caps) -> Result<Reduction> {
    let system = instance.system();
    let pool: Vec<usize> = (0..instance.h2().len()).collect();
    let width_of = |targets: &[usize]| -> Result<usize> {
        let q = WidthQuery::new(&system, targets.to_vec(), pool.clone(), instance.relation().clone())
            .with_caps(caps);
        Ok(cover_width(&q)?.value)
    };

    let mut current = instance.h1().to_vec();
    let width = width_of(&current)?;
    let mut trace = Vec::new();
    while let Some((c, d)) = first_intersecting_pair(&system, &current) {
        let without = |e: usize| current.iter().copied().filter(|&x| x != e).collect::<Vec<_>>();
        let removed = if width_of(&without(c))? == width {
            c
        } else if width_of(&without(d))? == width {
            d
        } else {
            return Err(Error::LemmaViolation(format!(
                "deleting either of the intersecting edges {c}, {d} lowers the width below {width}"
            )));
        };
        current.retain(|&x| x != removed);
        trace.push(ReductionStep { c, d, removed });
    }
    Ok(Reduction {
        matching: current,
        width,
        trace,
    })
}
