//! JSON instance encodings.
//!
//! ```text
//! Tree                 {"n":int,"edges":[[u,v],...]}
//! SubtreeInstance      {"tree":Tree,"h2":[[v,...],...],"h1":[i,...],
//!                       "relation":{"kind":"total"|"disjointness"|"custom","pairs":[[i,j],...]}}
//! IntervalFamily       {"intervals":[[lo,hi],...]}   lo/hi: integer or "p/q" string
//! PointTreeHypergraph  {"x_count":int,"tree":Tree,"edges":[{"x":i,"t":[v,...]},...]}
//! Poset                {"n":int,"less":[[i,j],...]}  each pair reads i ≻ j
//! SetFamily            {"edges":[[v,...],...],"hypergraphs":[[edge,...],...]}
//! ```

use std::collections::BTreeSet;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::model::interval::format_point;
use crate::model::{
    Interval, IntervalFamily, Point, PointTreeEdge, PointTreeHypergraph, Poset, Relation, Subtree,
    SubtreeInstance, Tree,
};
use crate::point_tree::SetFamily;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pairs: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubtreeInstanceJson {
    pub tree: TreeJson,
    pub h2: Vec<Vec<usize>>,
    pub h1: Vec<usize>,
    pub relation: RelationJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointJson {
    Int(i64),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntervalFamilyJson {
    pub intervals: Vec<[PointJson; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointTreeEdgeJson {
    pub x: usize,
    pub t: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointTreeJson {
    pub x_count: usize,
    pub tree: TreeJson,
    pub edges: Vec<PointTreeEdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetJson {
    pub n: usize,
    pub less: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetFamilyJson {
    pub edges: Vec<Vec<usize>>,
    pub hypergraphs: Vec<Vec<usize>>,
}

fn malformed(e: impl std::fmt::Display) -> Error {
    Error::Malformed(e.to_string())
}

impl From<&Tree> for TreeJson {
    fn from(t: &Tree) -> Self {
        TreeJson {
            n: t.n(),
            edges: t.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<&TreeJson> for Tree {
    type Error = Error;
    fn try_from(j: &TreeJson) -> Result<Tree> {
        let edges: Vec<_> = j.edges.iter().map(|&[u, v]| (u, v)).collect();
        Tree::new(j.n, &edges)
    }
}

impl From<&Relation> for RelationJson {
    fn from(r: &Relation) -> Self {
        RelationJson {
            kind: r.kind().to_string(),
            pairs: match r {
                Relation::Custom(pairs) => pairs.iter().map(|&(i, j)| [i, j]).collect(),
                _ => Vec::new(),
            },
        }
    }
}

impl TryFrom<&RelationJson> for Relation {
    type Error = Error;
    fn try_from(j: &RelationJson) -> Result<Relation> {
        match j.kind.as_str() {
            "total" | "disjointness" if !j.pairs.is_empty() => {
                Err(malformed(format!("relation kind {} takes no pairs", j.kind)))
            }
            "total" => Ok(Relation::Total),
            "disjointness" => Ok(Relation::Disjointness),
            "custom" => Ok(Relation::custom(j.pairs.iter().map(|&[i, j]| (i, j)))),
            other => Err(malformed(format!("unknown relation kind {other:?}"))),
        }
    }
}

impl From<&SubtreeInstance> for SubtreeInstanceJson {
    fn from(s: &SubtreeInstance) -> Self {
        SubtreeInstanceJson {
            tree: s.tree().into(),
            h2: s.h2().iter().map(|t| t.vertices().iter().copied().collect()).collect(),
            h1: s.h1().to_vec(),
            relation: s.relation().into(),
        }
    }
}

impl TryFrom<&SubtreeInstanceJson> for SubtreeInstance {
    type Error = Error;
    fn try_from(j: &SubtreeInstanceJson) -> Result<SubtreeInstance> {
        let tree = Tree::try_from(&j.tree)?;
        let h2 = j
            .h2
            .iter()
            .map(|vs| Subtree::new(&tree, vs.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        SubtreeInstance::new(tree, h2, j.h1.clone(), Relation::try_from(&j.relation)?)
    }
}

pub fn parse_point(p: &PointJson) -> Result<Point> {
    match p {
        PointJson::Int(v) => Ok(Point::from_integer(*v)),
        PointJson::Text(s) => {
            Point::from_str(s.trim()).map_err(|_| malformed(format!("bad rational {s:?}")))
        }
    }
}

pub fn point_json(p: Point) -> PointJson {
    if p.is_integer() {
        PointJson::Int(p.to_integer())
    } else {
        PointJson::Text(format_point(p))
    }
}

impl From<&IntervalFamily> for IntervalFamilyJson {
    fn from(f: &IntervalFamily) -> Self {
        IntervalFamilyJson {
            intervals: f
                .intervals()
                .iter()
                .map(|iv| [point_json(iv.lo()), point_json(iv.hi())])
                .collect(),
        }
    }
}

impl TryFrom<&IntervalFamilyJson> for IntervalFamily {
    type Error = Error;
    fn try_from(j: &IntervalFamilyJson) -> Result<IntervalFamily> {
        let ivs = j
            .intervals
            .iter()
            .map(|[a, b]| Interval::new(parse_point(a)?, parse_point(b)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntervalFamily::new(ivs))
    }
}

impl From<&PointTreeHypergraph> for PointTreeJson {
    fn from(h: &PointTreeHypergraph) -> Self {
        PointTreeJson {
            x_count: h.x_count(),
            tree: h.tree().into(),
            edges: h
                .edges()
                .iter()
                .map(|e| PointTreeEdgeJson {
                    x: e.x,
                    t: e.t.vertices().iter().copied().collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PointTreeJson> for PointTreeHypergraph {
    type Error = Error;
    fn try_from(j: &PointTreeJson) -> Result<PointTreeHypergraph> {
        let tree = Tree::try_from(&j.tree)?;
        let edges = j
            .edges
            .iter()
            .map(|e| {
                Ok(PointTreeEdge {
                    x: e.x,
                    t: Subtree::new(&tree, e.t.iter().copied())?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        PointTreeHypergraph::new(j.x_count, tree, edges)
    }
}

impl From<&Poset> for PosetJson {
    fn from(p: &Poset) -> Self {
        PosetJson {
            n: p.n(),
            less: p.pairs().iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

impl TryFrom<&PosetJson> for Poset {
    type Error = Error;
    fn try_from(j: &PosetJson) -> Result<Poset> {
        Poset::new(j.n, j.less.iter().map(|&[i, k]| (i, k)))
    }
}

impl From<&SetFamily> for SetFamilyJson {
    fn from(f: &SetFamily) -> Self {
        SetFamilyJson {
            edges: f.edges.iter().map(|e| e.iter().copied().collect()).collect(),
            hypergraphs: f.members.clone(),
        }
    }
}

impl TryFrom<&SetFamilyJson> for SetFamily {
    type Error = Error;
    fn try_from(j: &SetFamilyJson) -> Result<SetFamily> {
        let edges: Vec<BTreeSet<usize>> = j.edges.iter().map(|e| e.iter().copied().collect()).collect();
        if edges.iter().any(|e| e.is_empty()) {
            return Err(malformed("empty edge"));
        }
        if let Some(&i) = j.hypergraphs.iter().flatten().find(|&&i| i >= edges.len()) {
            return Err(malformed(format!("edge index {i} out of range")));
        }
        Ok(SetFamily {
            edges,
            members: j.hypergraphs.clone(),
        })
    }
}

/// Any instance the command-line front end accepts.
#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Tree(Tree),
    Subtree(SubtreeInstance),
    Intervals(IntervalFamily),
    PointTree(PointTreeHypergraph),
    Poset(Poset),
    Family(SetFamily),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Tree(_) => "tree",
            Instance::Subtree(_) => "subtree",
            Instance::Intervals(_) => "intervals",
            Instance::PointTree(_) => "point_tree",
            Instance::Poset(_) => "poset",
            Instance::Family(_) => "family",
        }
    }

    /// Dispatches on the top-level keys of the object.
    pub fn from_value(value: Value) -> Result<Instance> {
        let obj = value
            .as_object()
            .ok_or_else(|| malformed("instance must be a JSON object"))?;
        let has = |k: &str| obj.contains_key(k);
        let decode = |v: Value| -> Result<Instance> {
            if has("intervals") {
                let j: IntervalFamilyJson = serde_json::from_value(v).map_err(malformed)?;
                Ok(Instance::Intervals(IntervalFamily::try_from(&j)?))
            } else if has("x_count") {
                let j: PointTreeJson = serde_json::from_value(v).map_err(malformed)?;
                Ok(Instance::PointTree(PointTreeHypergraph::try_from(&j)?))
            } else if has("h2") {
                let j: SubtreeInstanceJson = serde_json::from_value(v).map_err(malformed)?;
                Ok(Instance::Subtree(SubtreeInstance::try_from(&j)?))
            } else if has("less") {
                let j: PosetJson = serde_json::from_value(v).map_err(malformed)?;
                Ok(Instance::Poset(Poset::try_from(&j)?))
            } else if has("hypergraphs") {
                let j: SetFamilyJson = serde_json::from_value(v).map_err(malformed)?;
                Ok(Instance::Family(SetFamily::try_from(&j)?))
            } else if has("n") && has("edges") {
                let j: TreeJson = serde_json::from_value(v).map_err(malformed)?;
                Ok(Instance::Tree(Tree::try_from(&j)?))
            } else {
                Err(malformed("unrecognized instance shape"))
            }
        };
        decode(value.clone())
    }

    pub fn from_json(text: &str) -> Result<Instance> {
        Instance::from_value(serde_json::from_str(text).map_err(malformed)?)
    }

    pub fn to_value(&self) -> Value {
        let v = match self {
            Instance::Tree(t) => serde_json::to_value(TreeJson::from(t)),
            Instance::Subtree(s) => serde_json::to_value(SubtreeInstanceJson::from(s)),
            Instance::Intervals(f) => serde_json::to_value(IntervalFamilyJson::from(f)),
            Instance::PointTree(h) => serde_json::to_value(PointTreeJson::from(h)),
            Instance::Poset(p) => serde_json::to_value(PosetJson::from(p)),
            Instance::Family(f) => serde_json::to_value(SetFamilyJson::from(f)),
        };
        v.expect("instance encodings serialize")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_value()).expect("values serialize")
    }
}
