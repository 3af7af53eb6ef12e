//! Width parameters of intersection systems: exact brute-force solvers,
//! polynomial algorithms for subtrees of trees and intervals, certificates,
//! and randomized checks of the min-max equalities between them.

pub mod certificate;
pub mod checks;
pub mod error;
pub mod exec;
pub mod generators;
pub mod intervals;
pub mod json;
pub mod model;
pub mod oracle;
pub mod point_tree;
pub mod powers;
pub mod reduction;
pub mod rng;

pub use certificate::WidthCertificate;
pub use error::{Error, Result};
pub use exec::Execution;
pub use json::Instance;
pub use oracle::{Caps, WidthQuery};
