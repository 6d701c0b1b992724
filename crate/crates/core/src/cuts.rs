//! s–t cuts and the capacity bounds built from them.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::model::EnhancedNetwork;
use crate::regions::{Region, RegionKind};

/// A bipartition of the nodes with `s` on one side and `t` on the other.
///
/// `forward` holds arcs from the `s` side to the `t` side, `backward` arcs
/// going the other way (their capacities enter cut values negated). The
/// return arc `e` is backward in every cut and is not listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    /// Position in the binary-counter enumeration.
    pub index: usize,
    pub s_side: BTreeSet<String>,
    pub t_side: BTreeSet<String>,
    pub forward: Vec<String>,
    pub backward: Vec<String>,
}

impl Cut {
    /// Arc ids paired with `true` for forward orientation.
    pub fn oriented_arcs(&self) -> impl Iterator<Item = (&str, bool)> {
        self.forward
            .iter()
            .map(|a| (a.as_str(), true))
            .chain(self.backward.iter().map(|a| (a.as_str(), false)))
    }

    /// Number of base arcs crossing the cut.
    pub fn len(&self) -> usize {
        self.forward.len() + self.backward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn from_s_side(net: &EnhancedNetwork, s_side: BTreeSet<String>, index: usize) -> Result<Cut> {
        for n in &s_side {
            if !net.nodes().contains(n) {
                return Err(Error::UnknownNode {
                    node: n.clone(),
                    context: "cut".into(),
                });
            }
        }
        if !s_side.contains(net.source()) || s_side.contains(net.sink()) {
            return Err(Error::InvalidParameter("cut must separate source from sink".into()));
        }
        let t_side = net.nodes().iter().filter(|n| !s_side.contains(*n)).cloned().collect();
        let mut forward = Vec::new();
        let mut backward = Vec::new();
        for a in net.arcs() {
            match (s_side.contains(&a.tail), s_side.contains(&a.head)) {
                (true, false) => forward.push(a.id.clone()),
                (false, true) => backward.push(a.id.clone()),
                _ => {}
            }
        }
        Ok(Cut {
            index,
            s_side,
            t_side,
            forward,
            backward,
        })
    }
}

/// All `2^(n-2)` cuts. Bit `j` of the counter puts the `j`-th non-terminal
/// node (sorted by id) on the source side.
pub fn enumerate_cuts(net: &EnhancedNetwork) -> Vec<Cut> {
    let mut inner: Vec<&String> = net
        .nodes()
        .iter()
        .filter(|n| *n != net.source() && *n != net.sink())
        .collect();
    inner.sort();
    assert!(inner.len() < usize::BITS as usize, "too many nodes to enumerate cuts");
    (0..1usize << inner.len())
        .map(|mask| {
            let mut s_side: BTreeSet<String> = [net.source().to_string()].into();
            for (j, n) in inner.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    s_side.insert((*n).clone());
                }
            }
            Cut::from_s_side(net, s_side, mask).expect("enumerated cut is valid")
        })
        .collect()
}

/// Cuts sorted for the gluing fold: by source-side size, then counter index.
pub fn fold_order(mut cuts: Vec<Cut>) -> Vec<Cut> {
    cuts.sort_by_key(|c| (c.s_side.len(), c.index));
    cuts
}

fn zero_region(net: &EnhancedNetwork) -> Result<Region> {
    Ok(Region::zero(net.region_kind()?.unwrap_or(RegionKind::Points), net.k()))
}

/// Minkowski sum of oriented arc capacities; `{0}` for no arcs.
fn value_of<'a>(net: &EnhancedNetwork, arcs: impl IntoIterator<Item = (&'a str, bool)>) -> Result<Region> {
    let mut acc = zero_region(net)?;
    for (id, forward) in arcs {
        let arc = net.arc(id).ok_or_else(|| Error::UnknownArc(id.into()))?;
        let cap = if forward { arc.capacity.clone() } else { arc.capacity.negate() };
        acc = acc.minkowski_sum(&cap)?;
    }
    Ok(acc)
}

/// Value function of a cut: the sum of its oriented capacities, `e` excluded.
pub fn cut_capacity(net: &EnhancedNetwork, c: &Cut) -> Result<Region> {
    value_of(net, c.oriented_arcs())
}

/// Intersection of every cut capacity.
pub fn total_capacity(net: &EnhancedNetwork) -> Result<Region> {
    let capacities = enumerate_cuts(net)
        .iter()
        .map(|c| cut_capacity(net, c))
        .collect::<Result<Vec<_>>>()?;
    intersect_all(capacities)
}

fn intersect_all(regions: Vec<Region>) -> Result<Region> {
    let mut iter = regions.into_iter();
    let first = iter.next().expect("at least one cut");
    iter.try_fold(first.canonical(), |acc, r| acc.intersect(&r))
}

/// `v(A ∩ B) + (v(A \ B) ∩ v(B \ A))`, arcs matched by id and orientation.
pub fn pairwise_capacity(net: &EnhancedNetwork, c1: &Cut, c2: &Cut) -> Result<Region> {
    let a: BTreeSet<(&str, bool)> = c1.oriented_arcs().collect();
    let b: BTreeSet<(&str, bool)> = c2.oriented_arcs().collect();
    let shared = value_of(net, a.intersection(&b).copied())?;
    let only_a = value_of(net, a.difference(&b).copied())?;
    let only_b = value_of(net, b.difference(&a).copied())?;
    shared.minkowski_sum(&only_a.intersect(&only_b)?)
}

/// Intersection of pairwise capacities over all unordered cut pairs,
/// including each cut paired with itself.
pub fn pairwise_bound(net: &EnhancedNetwork) -> Result<Region> {
    let cuts = enumerate_cuts(net);
    let mut all = Vec::new();
    for (i, c1) in cuts.iter().enumerate() {
        for c2 in &cuts[i..] {
            all.push(pairwise_capacity(net, c1, c2)?);
        }
    }
    intersect_all(all)
}

/// Decomposes a fully disjoint network into its s–t paths (arc ids in
/// order). Errors if some arc is not on exactly one internally disjoint path.
pub fn disjoint_paths(net: &EnhancedNetwork) -> Result<Vec<Vec<String>>> {
    let (s, t) = (net.source(), net.sink());
    let mut out_arcs: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    let mut in_degree: BTreeMap<&str, usize> = BTreeMap::new();
    for a in net.arcs() {
        if a.head == s || a.tail == t {
            return Err(Error::NotFullyDisjoint(format!("arc {} enters the source or leaves the sink", a.id)));
        }
        out_arcs.entry(a.tail.as_str()).or_default().push(a.id.as_str());
        *in_degree.entry(a.head.as_str()).or_default() += 1;
    }
    for n in net.nodes().iter().map(String::as_str).filter(|n| *n != s && *n != t) {
        let outs = out_arcs.get(n).map_or(0, Vec::len);
        let ins = in_degree.get(n).copied().unwrap_or(0);
        if (ins, outs) != (1, 1) && (ins, outs) != (0, 0) {
            return Err(Error::NotFullyDisjoint(format!("node {n} has in-degree {ins} and out-degree {outs}")));
        }
    }
    let mut used = BTreeSet::new();
    let mut paths = Vec::new();
    for &first in out_arcs.get(s).map(Vec::as_slice).unwrap_or(&[]) {
        let mut path = vec![first.to_string()];
        used.insert(first);
        let mut at = net.arc(first).expect("listed arc").head.as_str();
        while at != t {
            let next = out_arcs[at][0];
            if !used.insert(next) {
                return Err(Error::NotFullyDisjoint(format!("cycle through {next}")));
            }
            path.push(next.to_string());
            at = net.arc(next).expect("listed arc").head.as_str();
        }
        paths.push(path);
    }
    if let Some(a) = net.arcs().iter().find(|a| !used.contains(a.id.as_str())) {
        return Err(Error::NotFullyDisjoint(format!("arc {} lies on no s–t path", a.id)));
    }
    Ok(paths)
}

/// Feasible flow values of a fully disjoint network: the sum over paths of
/// the intersection of capacities along each path.
pub fn disjoint_capacity(net: &EnhancedNetwork) -> Result<Region> {
    let mut total = zero_region(net)?;
    for path in disjoint_paths(net)? {
        let mut along: Option<Region> = None;
        for id in &path {
            let cap = &net.arc(id).expect("path arc").capacity;
            along = Some(match along {
                None => cap.canonical(),
                Some(r) => r.intersect(cap)?,
            });
        }
        total = total.minkowski_sum(&along.expect("paths are nonempty"))?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::{build_network, Arc};
    use crate::num::Vector;

    fn ids(v: &[String]) -> Vec<&str> {
        v.iter().map(String::as_str).collect()
    }

    fn side(nodes: &[&str]) -> BTreeSet<String> {
        nodes.iter().map(|s| s.to_string()).collect()
    }

    fn v(x: i64, y: i64) -> Vector {
        Vector::from_ints(&[x, y])
    }

    #[test]
    fn cut_counts() {
        let ex1 = enumerate_cuts(&fixtures::example1());
        assert_eq!(ex1.len(), 2);
        assert_eq!(ex1[0].s_side, side(&["s"]));
        assert_eq!(ex1[1].s_side, side(&["s", "v2"]));
        assert_eq!(enumerate_cuts(&fixtures::exnet()).len(), 16);
        let cyclenet = enumerate_cuts(&fixtures::cyclenet());
        assert_eq!(cyclenet.len(), 16);
        assert_eq!(ids(&cyclenet[0].forward), ["a1", "a2"]);
        assert!(cyclenet[0].backward.is_empty());
    }

    #[test]
    fn backward_arcs_are_recorded() {
        let net = fixtures::exnet();
        let c = Cut::from_s_side(&net, side(&["s", "2"]), 0).unwrap();
        assert_eq!(ids(&c.forward), ["s-1", "2-3"]);
        assert_eq!(ids(&c.backward), ["1-2"]);
    }

    #[test]
    fn single_arc_and_signed_cut_values() {
        let pts = |p: &[&[i64]]| Region::int_points(2, p).unwrap();
        let net = build_network(
            2,
            vec!["s".into(), "a".into(), "t".into()],
            vec![
                Arc::new("f", "s", "t", pts(&[&[1, 1]])),
                Arc::new("b", "a", "s", pts(&[&[1, 0]])),
                Arc::new("c", "a", "t", pts(&[&[0, 0]])),
            ],
            "s",
            "t",
        )
        .unwrap();
        let c = Cut::from_s_side(&net, side(&["s"]), 0).unwrap();
        assert_eq!(cut_capacity(&net, &c).unwrap(), pts(&[&[0, 1]]));
        let d = Cut::from_s_side(&net, side(&["s", "a"]), 1).unwrap();
        assert_eq!(ids(&d.forward), ["f", "c"]);
        assert_eq!(cut_capacity(&net, &d).unwrap(), pts(&[&[1, 1]]));
    }

    #[test]
    fn exnet_total_capacity_is_the_box() {
        let total = total_capacity(&fixtures::exnet()).unwrap();
        assert_eq!(total.vertex_lists(), vec![vec![v(0, 0), v(2, 0), v(2, 2), v(0, 2)]]);
    }

    #[test]
    fn exnet_tail_pair_gives_pentagon() {
        let net = fixtures::exnet();
        let c1 = Cut::from_s_side(&net, side(&["s", "1", "2", "3"]), 0).unwrap();
        let c2 = Cut::from_s_side(&net, side(&["s", "1", "2", "3", "4"]), 1).unwrap();
        assert_eq!(ids(&c1.forward), ["3-4", "3-t"]);
        assert_eq!(ids(&c2.forward), ["3-t", "4-t"]);
        let p = pairwise_capacity(&net, &c1, &c2).unwrap();
        assert_eq!(p.vertex_lists(), vec![vec![v(0, 0), v(2, 0), v(2, 1), v(1, 2), v(0, 2)]]);
        assert_eq!(pairwise_capacity(&net, &c1, &c1).unwrap(), cut_capacity(&net, &c1).unwrap());
    }

    #[test]
    fn exnet_pairwise_bound_is_the_pentagon() {
        let b = pairwise_bound(&fixtures::exnet()).unwrap();
        assert_eq!(b.vertex_lists(), vec![vec![v(0, 0), v(2, 0), v(2, 1), v(1, 2), v(0, 2)]]);
    }

    #[test]
    fn gap_network_outer_bounds() {
        let net = fixtures::example1();
        assert!(total_capacity(&net).unwrap().contains(&v(2, 2)).unwrap());
        assert!(!pairwise_bound(&net).unwrap().contains(&v(2, 2)).unwrap());
    }

    #[test]
    fn disjoint_capacity_on_small_paths() {
        let pts = |p: &[&[i64]]| Region::int_points(2, p).unwrap();
        let a = pts(&[&[0, 0], &[1, 0], &[1, 1]]);
        let b = pts(&[&[0, 0], &[1, 1], &[2, 0]]);
        let one_path = build_network(
            2,
            vec!["s".into(), "m".into(), "t".into()],
            vec![Arc::new("x", "s", "m", a.clone()), Arc::new("y", "m", "t", b.clone())],
            "s",
            "t",
        )
        .unwrap();
        assert_eq!(disjoint_capacity(&one_path).unwrap(), a.intersect(&b).unwrap());
        let two = build_network(
            2,
            vec!["s".into(), "t".into()],
            vec![Arc::new("x", "s", "t", a.clone()), Arc::new("y", "s", "t", b.clone())],
            "s",
            "t",
        )
        .unwrap();
        assert_eq!(disjoint_capacity(&two).unwrap(), a.minkowski_sum(&b).unwrap());
        assert!(matches!(disjoint_capacity(&fixtures::exnet()), Err(Error::NotFullyDisjoint(_))));
    }
}
