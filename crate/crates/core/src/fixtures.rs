//! Networks from the worked examples, shipped as JSON documents.

use crate::document::NetworkDocument;
use crate::model::EnhancedNetwork;

pub const EXNET: &str = include_str!("../fixtures/exnet.json");
pub const EXAMPLE1: &str = include_str!("../fixtures/example1.json");
pub const GLUING: &str = include_str!("../fixtures/gluing.json");
pub const CYCLENET: &str = include_str!("../fixtures/cyclenet.json");
pub const CHAIN: &str = include_str!("../fixtures/chain.json");

/// Every shipped fixture with its file name.
pub const ALL: [(&str, &str); 5] = [
    ("exnet.json", EXNET),
    ("example1.json", EXAMPLE1),
    ("gluing.json", GLUING),
    ("cyclenet.json", CYCLENET),
    ("chain.json", CHAIN),
];

fn load(text: &str) -> EnhancedNetwork {
    NetworkDocument::parse(text).expect("shipped fixture parses").network
}

/// The duality-gap network: six nodes, polygonal capacities, one of them a
/// non-convex union with a strict edge.
pub fn exnet() -> EnhancedNetwork {
    load(EXNET)
}

/// Three-node network `s → v2 → t` plus `s → t` with point capacities.
///
/// The capacities are a reconstruction: they carry the flow `(2,1)` of the
/// worked example, put `(2,2)` in every cut capacity, and still make `(2,2)`
/// infeasible.
pub fn example1() -> EnhancedNetwork {
    load(EXAMPLE1)
}

/// Four-node diamond with `[0,1]²` lattice capacities used for gluing.
pub fn gluing() -> EnhancedNetwork {
    load(GLUING)
}

/// Six nodes and eight arcs with a three-cycle basis.
pub fn cyclenet() -> EnhancedNetwork {
    load(CYCLENET)
}

/// The three-arc chain at `U = 1`.
pub fn chain() -> EnhancedNetwork {
    load(CHAIN)
}
