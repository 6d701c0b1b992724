//! Exact feasible-region computation for multicommodity networks whose arcs
//! carry vector-valued capacity regions.
//!
//! The crate offers outer bounds on the set of feasible flow values (total
//! and pairwise cut capacity), the exact set of feasible flows by gluing
//! local flows across every cut, a cycle-space decision oracle for single
//! flow values, and binary-search solvers for the ratio max-flow problems.

pub mod bench;
pub mod cuts;
pub mod cycles;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod gluing;
pub mod lp;
pub mod model;
pub mod num;
pub mod ratio;
pub mod regions;

pub use document::{parse_network, NetworkDocument};
pub use error::{Error, Result};
pub use model::{ArcAssignment, Arc, EnhancedNetwork, Network, Verdict, RETURN_ARC};
pub use num::{Rational, Vector};
pub use regions::{ConvexPolygon, Halfspace, Region, RegionKind};
