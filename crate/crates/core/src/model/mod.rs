//! Domain types shared by every solver.

pub mod graph;
pub mod interval;
pub mod system;
pub mod tree;

pub use graph::{Poset, SimpleGraph};
pub use interval::{Interval, IntervalFamily, Point};
pub use system::{
    IntersectionSystem, PointTreeEdge, PointTreeHypergraph, Relation, SubtreeInstance,
};
pub use tree::{Subtree, Tree};
