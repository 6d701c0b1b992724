//! Networks, arcs, assignments and the flow checks.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::num::{Rational, Vector};
use crate::regions::{ConvexPolygon, Region, RegionKind};

/// Reserved id of the return arc from `t` to `s`.
pub const RETURN_ARC: &str = "e";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub id: String,
    pub tail: String,
    pub head: String,
    pub capacity: Region,
}

impl Arc {
    pub fn new(id: impl Into<String>, tail: impl Into<String>, head: impl Into<String>, capacity: Region) -> Self {
        Arc {
            id: id.into(),
            tail: tail.into(),
            head: head.into(),
            capacity,
        }
    }

    /// The same arc in opposite orientation: endpoints swapped, capacity negated.
    pub fn reversed(&self) -> Arc {
        Arc {
            id: self.id.clone(),
            tail: self.head.clone(),
            head: self.tail.clone(),
            capacity: self.capacity.negate(),
        }
    }
}

pub fn reverse_arc(a: &Arc) -> Arc {
    a.reversed()
}

/// A k-commodity network with distinguished source and sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    pub k: usize,
    pub nodes: Vec<String>,
    pub arcs: Vec<Arc>,
    pub source: String,
    pub sink: String,
}

impl Network {
    fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::ZeroCommodities);
        }
        let mut seen = BTreeSet::new();
        for n in &self.nodes {
            if !seen.insert(n.as_str()) {
                return Err(Error::DuplicateNode(n.clone()));
            }
        }
        for (role, n) in [("source", &self.source), ("sink", &self.sink)] {
            if !seen.contains(n.as_str()) {
                return Err(Error::UnknownNode {
                    node: n.clone(),
                    context: role.into(),
                });
            }
        }
        if self.source == self.sink {
            return Err(Error::SourceIsSink(self.source.clone()));
        }
        let mut ids = BTreeSet::new();
        for a in &self.arcs {
            if a.id == RETURN_ARC {
                return Err(Error::ReservedArcId);
            }
            if !ids.insert(a.id.as_str()) {
                return Err(Error::DuplicateArc(a.id.clone()));
            }
            for n in [&a.tail, &a.head] {
                if !seen.contains(n.as_str()) {
                    return Err(Error::UnknownNode {
                        node: n.clone(),
                        context: format!("arc {}", a.id),
                    });
                }
            }
            if a.tail == a.head {
                return Err(Error::SelfLoop(a.id.clone()));
            }
            if a.capacity.dim() != self.k {
                let err = match a.capacity.kind() {
                    RegionKind::Polygons => Error::PolygonDimension(self.k),
                    RegionKind::Points => Error::Dimension {
                        expected: self.k,
                        found: a.capacity.dim(),
                        context: Some(format!("arc {}", a.id)),
                    },
                };
                return Err(err);
            }
        }
        Ok(())
    }
}

/// A network together with its return arc `e` from sink to source.
///
/// The capacity of `e` is the nonnegative orthant; it is not stored as a
/// [`Region`] because it is unbounded, and it never enters cut values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnhancedNetwork {
    base: Network,
}

impl EnhancedNetwork {
    pub fn new(base: Network) -> Result<Self> {
        base.validate()?;
        Ok(EnhancedNetwork { base })
    }

    pub fn base(&self) -> &Network {
        &self.base
    }

    pub fn into_base(self) -> Network {
        self.base
    }

    pub fn k(&self) -> usize {
        self.base.k
    }

    pub fn nodes(&self) -> &[String] {
        &self.base.nodes
    }

    /// Arcs of the base network (without `e`).
    pub fn arcs(&self) -> &[Arc] {
        &self.base.arcs
    }

    pub fn source(&self) -> &str {
        &self.base.source
    }

    pub fn sink(&self) -> &str {
        &self.base.sink
    }

    pub fn arc(&self, id: &str) -> Option<&Arc> {
        self.base.arcs.iter().find(|a| a.id == id)
    }

    /// Number of arcs including `e`.
    pub fn arc_count(&self) -> usize {
        self.base.arcs.len() + 1
    }

    /// Endpoints `(tail, head)` of any arc id, including `e`.
    pub fn endpoints(&self, id: &str) -> Option<(&str, &str)> {
        if id == RETURN_ARC {
            return Some((self.sink(), self.source()));
        }
        self.arc(id).map(|a| (a.tail.as_str(), a.head.as_str()))
    }

    /// Membership in an arc's capacity; `e` accepts the nonnegative orthant.
    pub fn admits(&self, id: &str, value: &Vector) -> Result<bool> {
        if id == RETURN_ARC {
            self.check_dim(value)?;
            return Ok(value.is_nonnegative());
        }
        let arc = self.arc(id).ok_or_else(|| Error::UnknownArc(id.into()))?;
        arc.capacity.contains(value)
    }

    fn check_dim(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.k() {
            return Err(Error::Dimension {
                expected: self.k(),
                found: v.dim(),
                context: None,
            });
        }
        Ok(())
    }

    /// The single representation shared by all capacities, if any.
    pub fn region_kind(&self) -> Result<Option<RegionKind>> {
        let mut kinds = self.arcs().iter().map(|a| a.capacity.kind());
        let first = match kinds.next() {
            Some(k) => k,
            None => return Ok(None),
        };
        if kinds.any(|k| k != first) {
            return Err(Error::MixedVariants);
        }
        Ok(Some(first))
    }

    /// Copy with every capacity replaced by its integer points.
    pub fn discretized(&self) -> Result<EnhancedNetwork> {
        let mut base = self.base.clone();
        for a in &mut base.arcs {
            a.capacity = a.capacity.discretize()?;
        }
        Ok(EnhancedNetwork { base })
    }

    /// Whether every capacity passes [`Region::is_reducible`].
    pub fn is_reducible(&self) -> bool {
        self.arcs().iter().all(|a| a.capacity.is_reducible())
    }
}

/// Assembles and validates an enhanced network.
pub fn build_network(k: usize, nodes: Vec<String>, arcs: Vec<Arc>, s: &str, t: &str) -> Result<EnhancedNetwork> {
    EnhancedNetwork::new(Network {
        k,
        nodes,
        arcs,
        source: s.into(),
        sink: t.into(),
    })
}

/// Values on arcs, keyed by arc id (`e` included when present).
pub type ArcAssignment = BTreeMap<String, Vector>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    ValidFlow,
    PseudoflowOnly,
    Invalid,
}

/// Net inflow minus outflow at every node, `e` included if assigned.
fn imbalance(net: &EnhancedNetwork, f: &ArcAssignment) -> Result<BTreeMap<String, Vector>> {
    let mut bal: BTreeMap<String, Vector> = net.nodes().iter().map(|n| (n.clone(), Vector::zero(net.k()))).collect();
    for (id, v) in f {
        let (tail, head) = net.endpoints(id).ok_or_else(|| Error::UnknownArc(id.clone()))?;
        net.check_dim(v)?;
        *bal.get_mut(tail).expect("validated node") -= v;
        *bal.get_mut(head).expect("validated node") += v;
    }
    Ok(bal)
}

/// Whether conservation holds at every node.
pub fn conserves(net: &EnhancedNetwork, f: &ArcAssignment) -> Result<bool> {
    Ok(imbalance(net, f)?.values().all(Vector::is_zero))
}

pub fn check_flow(net: &EnhancedNetwork, f: &ArcAssignment) -> Result<Verdict> {
    for id in net.arcs().iter().map(|a| a.id.as_str()).chain([RETURN_ARC]) {
        if !f.contains_key(id) {
            return Err(Error::MissingArc(id.into()));
        }
    }
    if !conserves(net, f)? {
        return Ok(Verdict::Invalid);
    }
    for (id, v) in f {
        if !net.admits(id, v)? {
            return Ok(Verdict::PseudoflowOnly);
        }
    }
    Ok(Verdict::ValidFlow)
}

/// The value carried by `e`.
pub fn flow_value(f: &ArcAssignment) -> Result<Vector> {
    f.get(RETURN_ARC).cloned().ok_or_else(|| Error::MissingArc(RETURN_ARC.into()))
}

/// Net flow from `s_side` to its complement over base arcs.
pub fn net_flow_across(net: &EnhancedNetwork, f: &ArcAssignment, s_side: &BTreeSet<String>) -> Vector {
    let mut total = Vector::zero(net.k());
    for a in net.arcs() {
        let Some(v) = f.get(&a.id) else { continue };
        match (s_side.contains(&a.tail), s_side.contains(&a.head)) {
            (true, false) => total += v,
            (false, true) => total -= v,
            _ => {}
        }
    }
    total
}

/// Nodes added by [`embed_requirements`].
pub const EMBED_SOURCE: &str = "s";
pub const EMBED_HUB: &str = "s'";
pub const EMBED_SINK: &str = "t";

/// Two-source, two-sink reduction: a super source `s` feeding a hub `s'`
/// through an arc whose capacity enforces `f >= requirement`, the hub
/// feeding both sources, and both sinks draining into a super sink `t`.
///
/// "Uncapacitated" arcs get the box `[0, bound]^k` in the representation
/// used by `net` (integer points for point-set networks).
pub fn embed_requirements(
    net: &Network,
    sources: (&str, &str),
    sinks: (&str, &str),
    requirement: &Vector,
    bound: &Rational,
) -> Result<EnhancedNetwork> {
    for n in [sources.0, sources.1, sinks.0, sinks.1] {
        if !net.nodes.iter().any(|m| m == n) {
            return Err(Error::UnknownNode {
                node: n.into(),
                context: "requirement embedding".into(),
            });
        }
    }
    for n in [EMBED_SOURCE, EMBED_HUB, EMBED_SINK] {
        if net.nodes.iter().any(|m| m == n) {
            return Err(Error::DuplicateNode(n.into()));
        }
    }
    if requirement.dim() != net.k {
        return Err(Error::Dimension {
            expected: net.k,
            found: requirement.dim(),
            context: Some("requirement".into()),
        });
    }
    let k = net.k;
    let points = net.arcs.iter().all(|a| a.capacity.kind() == RegionKind::Points);
    let make_box = |lo: &Vector| -> Result<Region> {
        if points {
            let lo: Vec<i64> = lo
                .entries()
                .iter()
                .map(|x| i64::try_from(crate::num::ceil(x)).map_err(|_| Error::InvalidParameter("requirement too large".into())))
                .collect::<Result<_>>()?;
            let hi = i64::try_from(crate::num::floor(bound)).map_err(|_| Error::InvalidParameter("bound too large".into()))?;
            Region::points(k, lattice_box(&lo, hi))
        } else {
            if k != 2 {
                return Err(Error::PolygonDimension(k));
            }
            if lo.entries().iter().any(|x| x > bound) {
                return Ok(Region::Polygons(Vec::new()));
            }
            Ok(Region::polygon(ConvexPolygon::rectangle(
                lo[0].clone(),
                bound.clone(),
                lo[1].clone(),
                bound.clone(),
            )?))
        }
    };
    let zero = Vector::zero(k);
    let free = make_box(&zero)?;
    let mut base = net.clone();
    base.nodes.extend([EMBED_SOURCE, EMBED_HUB, EMBED_SINK].map(String::from));
    let fresh = |base: &Network, stem: &str| -> String {
        let mut id = stem.to_string();
        while base.arcs.iter().any(|a| a.id == id) {
            id.push('\'');
        }
        id
    };
    let added = [
        ("req", EMBED_SOURCE, EMBED_HUB, make_box(requirement)?),
        ("in1", EMBED_HUB, sources.0, free.clone()),
        ("in2", EMBED_HUB, sources.1, free.clone()),
        ("out1", sinks.0, EMBED_SINK, free.clone()),
        ("out2", sinks.1, EMBED_SINK, free),
    ];
    for (stem, tail, head, cap) in added {
        let id = fresh(&base, stem);
        base.arcs.push(Arc::new(id, tail, head, cap));
    }
    base.source = EMBED_SOURCE.into();
    base.sink = EMBED_SINK.into();
    EnhancedNetwork::new(base)
}

/// Integer vectors `v` with `lo <= v <= hi` componentwise.
fn lattice_box(lo: &[i64], hi: i64) -> Vec<Vector> {
    let mut out = Vec::new();
    if lo.iter().any(|&l| l > hi) {
        return out;
    }
    let mut cur = lo.to_vec();
    loop {
        out.push(Vector::from_ints(&cur));
        let mut i = 0;
        while i < cur.len() {
            if cur[i] < hi {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
            i += 1;
        }
        if i == cur.len() {
            return out;
        }
    }
}

/// Assignment that is zero on every arc and on `e`.
pub fn zero_assignment(net: &EnhancedNetwork) -> ArcAssignment {
    net.arcs()
        .iter()
        .map(|a| a.id.as_str())
        .chain([RETURN_ARC])
        .map(|id| (id.to_string(), Vector::zero(net.k())))
        .collect()
}

/// Whether every entry of every value is zero.
pub fn is_zero_assignment(f: &ArcAssignment) -> bool {
    f.values().all(|v| v.entries().iter().all(Zero::is_zero))
}
