//! Cycle-space machinery and the flow-value decision oracle.
//!
//! A flow with value `f` is a fixed pseudoflow carrying `f` along the tree
//! path from `s` to `t`, plus a combination of fundamental cycles of the
//! base network. Deciding whether `f` is feasible is a search for cycle
//! coefficients that put every arc back into its capacity.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lp::{LinearSystem, Relation};
use crate::model::{check_flow, ArcAssignment, EnhancedNetwork, Verdict, RETURN_ARC};
use crate::num::{Rational, Vector};
use crate::regions::Region;

/// Default cap on search nodes explored by [`decide`].
pub const DEFAULT_BRANCH_BUDGET: u64 = 100_000;

/// Signed arc list: `+1` traversed along the arc, `-1` against it.
pub type SignedArcs = Vec<(String, i8)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    /// The non-tree arc that closes the cycle (always traversed forward).
    pub generator: String,
    /// Arcs in traversal order, starting with the generator.
    pub arcs: SignedArcs,
}

/// A spanning tree and its fundamental cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSystem {
    pub tree: Vec<String>,
    pub basis: Vec<Cycle>,
    /// Tree path from `s` to `t`; with `e` it closes the extra cycle of the
    /// enhanced network. `None` when `t` is unreachable.
    pub st_path: Option<SignedArcs>,
    sign: HashMap<(String, usize), i8>,
}

impl CycleSystem {
    /// Orientation of `arc` in cycle `i` (0 if absent).
    pub fn membership(&self, arc: &str, i: usize) -> i8 {
        self.sign.get(&(arc.to_string(), i)).copied().unwrap_or(0)
    }

    /// Signs of `arc` across all basis cycles.
    pub fn signs(&self, arc: &str) -> Vec<i8> {
        (0..self.basis.len()).map(|i| self.membership(arc, i)).collect()
    }

    /// Cycle count of the enhanced network: the basis plus the cycle
    /// through `e`.
    pub fn enhanced_cycle_count(&self) -> usize {
        self.basis.len() + usize::from(self.st_path.is_some())
    }

    /// Coefficients `x` with `d(a) = Σ σ(a,i) x_i` on every base arc, if
    /// the assignment lies in the cycle space.
    pub fn coordinates(&self, net: &EnhancedNetwork, d: &ArcAssignment) -> Option<Vec<Vector>> {
        let zero = Vector::zero(net.k());
        let x: Vec<Vector> = self
            .basis
            .iter()
            .map(|c| d.get(&c.generator).cloned().unwrap_or_else(|| zero.clone()))
            .collect();
        let ok = net.arcs().iter().all(|a| {
            let expected = d.get(&a.id).unwrap_or(&zero);
            &self.combine(&a.id, &x, net.k()) == expected
        });
        ok.then_some(x)
    }

    /// `Σ σ(arc,i) x_i`.
    fn combine(&self, arc: &str, x: &[Vector], k: usize) -> Vector {
        let mut out = Vector::zero(k);
        for (i, xi) in x.iter().enumerate() {
            match self.membership(arc, i) {
                1 => out += xi,
                -1 => out -= xi,
                _ => {}
            }
        }
        out
    }
}

/// Adjacency in arc-list order: `(arc index, neighbour)` per node.
fn adjacency(net: &EnhancedNetwork, arcs: impl Iterator<Item = usize>) -> HashMap<&str, Vec<(usize, &str)>> {
    let mut adj: HashMap<&str, Vec<(usize, &str)>> = net.nodes().iter().map(|n| (n.as_str(), Vec::new())).collect();
    for i in arcs {
        let a = &net.arcs()[i];
        adj.get_mut(a.tail.as_str()).expect("node").push((i, a.head.as_str()));
        adj.get_mut(a.head.as_str()).expect("node").push((i, a.tail.as_str()));
    }
    adj
}

/// Fundamental cycles of a breadth-first spanning forest: the tree of `s`
/// first, then one tree per remaining component in node order. Neighbours
/// are visited in arc-list order.
pub fn cycle_basis(net: &EnhancedNetwork) -> Result<CycleSystem> {
    let adj = adjacency(net, 0..net.arcs().len());
    let mut seen: BTreeSet<&str> = BTreeSet::new();
    let mut tree = Vec::new();
    let roots = std::iter::once(net.source()).chain(net.nodes().iter().map(String::as_str));
    for root in roots {
        if !seen.insert(root) {
            continue;
        }
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(i, w) in &adj[u] {
                if seen.insert(w) {
                    tree.push(i);
                    queue.push_back(w);
                }
            }
        }
    }
    build_system(net, tree)
}

/// Fundamental cycles of a caller-chosen spanning forest: the arcs must be
/// acyclic and connect everything the full network connects.
pub fn cycle_basis_with_tree(net: &EnhancedNetwork, tree: &[&str]) -> Result<CycleSystem> {
    let mut idx = Vec::with_capacity(tree.len());
    for id in tree {
        let i = net
            .arcs()
            .iter()
            .position(|a| a.id == *id)
            .ok_or_else(|| Error::UnknownArc(id.to_string()))?;
        idx.push(i);
    }
    let mut comp = Components::new(net);
    for &i in &idx {
        let a = &net.arcs()[i];
        if !comp.union(&a.tail, &a.head) {
            return Err(Error::InvalidTree(format!("arc `{}` closes a cycle", a.id)));
        }
    }
    if let Some(a) = net.arcs().iter().find(|a| !comp.same(&a.tail, &a.head)) {
        return Err(Error::InvalidTree(format!("arcs do not span the endpoints of `{}`", a.id)));
    }
    build_system(net, idx)
}

/// Union–find over node ids.
struct Components<'a> {
    parent: HashMap<&'a str, &'a str>,
}

impl<'a> Components<'a> {
    fn new(net: &'a EnhancedNetwork) -> Self {
        Components {
            parent: net.nodes().iter().map(|n| (n.as_str(), n.as_str())).collect(),
        }
    }

    fn find(&self, mut n: &'a str) -> &'a str {
        while self.parent[n] != n {
            n = self.parent[n];
        }
        n
    }

    fn same(&self, a: &'a str, b: &'a str) -> bool {
        self.find(a) == self.find(b)
    }

    /// Merges the components of `a` and `b`; false if already merged.
    fn union(&mut self, a: &'a str, b: &'a str) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent.insert(ra, rb);
        true
    }
}

fn build_system(net: &EnhancedNetwork, tree: Vec<usize>) -> Result<CycleSystem> {
    let adj = adjacency(net, tree.iter().copied());
    // parent pointers from s
    let mut parent: HashMap<&str, (usize, &str)> = HashMap::new();
    let mut depth: HashMap<&str, usize> = HashMap::new();
    let roots = std::iter::once(net.source()).chain(net.nodes().iter().map(String::as_str));
    for root in roots {
        if depth.contains_key(root) {
            continue;
        }
        depth.insert(root, 0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(i, w) in &adj[u] {
                if !depth.contains_key(w) {
                    depth.insert(w, depth[u] + 1);
                    parent.insert(w, (i, u));
                    queue.push_back(w);
                }
            }
        }
    }
    let arcs = net.arcs();
    // Signed tree path from `from` to `to`.
    let path = |from: &str, to: &str| -> SignedArcs {
        let (mut a, mut b) = (from, to);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while a != b {
            if depth[a] >= depth[b] {
                let (i, p) = parent[a];
                up.push((i, a, p));
                a = p;
            } else {
                let (i, p) = parent[b];
                down.push((i, p, b));
                b = p;
            }
        }
        down.reverse();
        up.into_iter()
            .chain(down)
            .map(|(i, x, _)| {
                let arc = &arcs[i];
                (arc.id.clone(), if arc.tail == x { 1 } else { -1 })
            })
            .collect()
    };

    let in_tree: BTreeSet<usize> = tree.iter().copied().collect();
    let mut basis = Vec::new();
    for (i, a) in arcs.iter().enumerate() {
        if in_tree.contains(&i) {
            continue;
        }
        let mut cycle = vec![(a.id.clone(), 1)];
        cycle.extend(path(&a.head, &a.tail));
        basis.push(Cycle {
            generator: a.id.clone(),
            arcs: cycle,
        });
    }
    let mut sign = HashMap::new();
    for (i, c) in basis.iter().enumerate() {
        for (a, s) in &c.arcs {
            sign.insert((a.clone(), i), *s);
        }
    }
    let connected = std::iter::successors(Some(net.sink()), |n| parent.get(n).map(|&(_, p)| p)).any(|n| n == net.source());
    let st_path = connected.then(|| path(net.source(), net.sink()));
    Ok(CycleSystem {
        tree: tree.iter().map(|&i| arcs[i].id.clone()).collect(),
        basis,
        st_path,
        sign,
    })
}

/// Carries `f` along the tree path from `s` to `t` and on `e`; zero elsewhere.
pub fn build_pseudoflow(net: &EnhancedNetwork, sys: &CycleSystem, f: &Vector) -> Result<ArcAssignment> {
    if f.dim() != net.k() {
        return Err(Error::Dimension {
            expected: net.k(),
            found: f.dim(),
            context: Some("flow value".into()),
        });
    }
    let mut out: ArcAssignment = net.arcs().iter().map(|a| (a.id.clone(), Vector::zero(net.k()))).collect();
    let path = match &sys.st_path {
        Some(p) => p.as_slice(),
        None if f.is_zero() => &[],
        None => return Err(Error::NoPath),
    };
    for (a, s) in path {
        out.insert(a.clone(), if *s > 0 { f.clone() } else { -f });
    }
    out.insert(RETURN_ARC.into(), f.clone());
    Ok(out)
}

/// `Σ σ(a,i) x_i ∈ C_a − F(a)` for one base arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleConstraint {
    pub arc: String,
    pub signs: Vec<i8>,
    pub region: Region,
}

/// One constraint per base arc, in arc-list order.
pub fn cycle_constraints(net: &EnhancedNetwork, sys: &CycleSystem, pseudo: &ArcAssignment) -> Result<Vec<CycleConstraint>> {
    net.arcs()
        .iter()
        .map(|a| {
            let shift = pseudo.get(&a.id).ok_or_else(|| Error::MissingArc(a.id.clone()))?;
            Ok(CycleConstraint {
                arc: a.id.clone(),
                signs: sys.signs(&a.id),
                region: a.capacity.translate(&-shift)?,
            })
        })
        .collect()
}

/// Constraints sharing one combination of cycles, intersected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AggregateConstraint {
    /// Normalized so the first nonzero entry is `+1`.
    pub signs: Vec<i8>,
    /// Contributing arcs with the orientation used (`-1`: region negated).
    pub arcs: SignedArcs,
    pub region: Region,
}

/// Groups constraints by their cycle combination up to sign.
pub fn aggregate_constraints(constraints: &[CycleConstraint]) -> Result<Vec<AggregateConstraint>> {
    let mut groups: BTreeMap<Vec<i8>, (SignedArcs, Region)> = BTreeMap::new();
    let mut order = Vec::new();
    for c in constraints {
        let flip = c.signs.iter().find(|s| **s != 0).is_some_and(|s| *s < 0);
        let (signs, region, o) = if flip {
            (c.signs.iter().map(|s| -s).collect::<Vec<_>>(), c.region.negate(), -1)
        } else {
            (c.signs.clone(), c.region.clone(), 1)
        };
        match groups.get_mut(&signs) {
            Some((arcs, r)) => {
                arcs.push((c.arc.clone(), o));
                *r = r.intersect(&region)?;
            }
            None => {
                order.push(signs.clone());
                groups.insert(signs, (vec![(c.arc.clone(), o)], region.canonical()));
            }
        }
    }
    Ok(order
        .into_iter()
        .map(|signs| {
            let (arcs, region) = groups.remove(&signs).expect("grouped");
            AggregateConstraint { signs, arcs, region }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Feasible(ArcAssignment),
    Infeasible,
}

impl Decision {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Decision::Feasible(_))
    }

    pub fn witness(&self) -> Option<&ArcAssignment> {
        match self {
            Decision::Feasible(w) => Some(w),
            Decision::Infeasible => None,
        }
    }
}

/// Is there a flow with value `f`?
pub fn decide(net: &EnhancedNetwork, f: &Vector) -> Result<Decision> {
    decide_with_budget(net, f, DEFAULT_BRANCH_BUDGET)
}

pub fn decide_with_budget(net: &EnhancedNetwork, f: &Vector, budget: u64) -> Result<Decision> {
    let sys = cycle_basis(net)?;
    decide_with_system(net, &sys, f, budget)
}

pub fn decide_with_system(net: &EnhancedNetwork, sys: &CycleSystem, f: &Vector, budget: u64) -> Result<Decision> {
    if f.dim() == net.k() && (!f.is_nonnegative() || (sys.st_path.is_none() && !f.is_zero())) {
        return Ok(Decision::Infeasible);
    }
    let pseudo = build_pseudoflow(net, sys, f)?;
    let constraints = cycle_constraints(net, sys, &pseudo)?;
    let mut search = Search {
        k: net.k(),
        cycles: sys.basis.len(),
        constraints: &constraints,
        budget,
        explored: 0,
    };
    let x = if net.arcs().iter().all(|a| a.capacity.point_set().is_some()) {
        search.points(sys)?
    } else {
        search.pieces()?
    };
    let Some(x) = x else { return Ok(Decision::Infeasible) };
    let mut flow = pseudo;
    for a in net.arcs() {
        let delta = sys.combine(&a.id, &x, net.k());
        *flow.get_mut(&a.id).expect("pseudoflow covers arcs") += &delta;
    }
    debug_assert_eq!(check_flow(net, &flow)?, Verdict::ValidFlow);
    Ok(Decision::Feasible(flow))
}

struct Search<'a> {
    k: usize,
    cycles: usize,
    constraints: &'a [CycleConstraint],
    budget: u64,
    explored: u64,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.explored += 1;
        if self.explored > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    /// Point capacities: each generator arc pins its cycle coefficient to
    /// one of its shifted points; other arcs are checked as soon as every
    /// cycle they use is pinned.
    fn points(&mut self, sys: &CycleSystem) -> Result<Option<Vec<Vector>>> {
        let generator_of: HashMap<&str, usize> =
            sys.basis.iter().enumerate().map(|(i, c)| (c.generator.as_str(), i)).collect();
        let mut pins: Vec<(usize, &CycleConstraint)> = Vec::new();
        let mut checks: Vec<(usize, &CycleConstraint)> = Vec::new();
        for c in self.constraints {
            match generator_of.get(c.arc.as_str()) {
                Some(&i) => pins.push((i, c)),
                None => {
                    let ready = c.signs.iter().rposition(|s| *s != 0).map_or(0, |last| last + 1);
                    checks.push((ready, c));
                }
            }
        }
        pins.sort_by_key(|(i, _)| *i);
        let mut x: Vec<Vector> = Vec::with_capacity(self.cycles);
        self.pin(&pins, &checks, &mut x)
    }

    fn pin(
        &mut self,
        pins: &[(usize, &CycleConstraint)],
        checks: &[(usize, &CycleConstraint)],
        x: &mut Vec<Vector>,
    ) -> Result<Option<Vec<Vector>>> {
        // arcs whose cycles are all pinned now
        for (ready, c) in checks {
            if *ready == x.len() {
                let y = combine_signs(&c.signs, x, self.k);
                if !c.region.contains(&y)? {
                    return Ok(None);
                }
            }
        }
        let Some(&(_, c)) = pins.get(x.len()) else {
            return Ok(Some(x.clone()));
        };
        for p in c.region.point_set().expect("point capacities") {
            self.tick()?;
            x.push(p.clone());
            if let Some(found) = self.pin(pins, checks, x)? {
                return Ok(Some(found));
            }
            x.pop();
        }
        Ok(None)
    }

    /// General capacities: branch over one piece (or point) per arc, arcs
    /// with fewer alternatives first, pruning with exact feasibility.
    fn pieces(&mut self) -> Result<Option<Vec<Vector>>> {
        let mut order: Vec<&CycleConstraint> = self.constraints.iter().collect();
        order.sort_by_key(|c| alternatives(&c.region));
        let mut lp = LinearSystem::new(self.cycles * self.k);
        self.branch(&order, &mut lp)
    }

    fn branch(&mut self, order: &[&CycleConstraint], lp: &mut LinearSystem) -> Result<Option<Vec<Vector>>> {
        let Some((c, rest)) = order.split_first() else {
            return Ok(lp.solve().map(|sol| unflatten(&sol, self.k)));
        };
        let mark = lp.rows().len();
        let count = alternatives(&c.region);
        for alt in 0..count {
            self.tick()?;
            add_alternative(lp, &c.signs, &c.region, alt, self.k);
            // Single-alternative arcs are checked together at the next
            // branching point or leaf.
            let viable = count == 1 || lp.solve().is_some();
            if viable {
                if let Some(found) = self.branch(rest, lp)? {
                    return Ok(Some(found));
                }
            }
            lp.truncate(mark);
        }
        Ok(None)
    }
}

fn alternatives(r: &Region) -> usize {
    match r {
        Region::Points { points, .. } => points.len(),
        Region::Polygons(pieces) => pieces.len(),
    }
}

fn combine_signs(signs: &[i8], x: &[Vector], k: usize) -> Vector {
    let mut out = Vector::zero(k);
    for (s, xi) in signs.iter().zip(x) {
        match s {
            1 => out += xi,
            -1 => out -= xi,
            _ => {}
        }
    }
    out
}

fn unflatten(sol: &[Rational], k: usize) -> Vec<Vector> {
    sol.chunks(k).map(|c| Vector::new(c.to_vec())).collect()
}

/// Row coefficients of `w · Σ σ_i x_i` over the flattened variables.
fn row_for(signs: &[i8], weights: &[Rational], k: usize) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); signs.len() * k];
    for (i, s) in signs.iter().enumerate() {
        if *s == 0 {
            continue;
        }
        for (j, w) in weights.iter().enumerate() {
            row[i * k + j] = if *s > 0 { w.clone() } else { -w };
        }
    }
    row
}

fn add_alternative(lp: &mut LinearSystem, signs: &[i8], region: &Region, alt: usize, k: usize) {
    match region {
        Region::Points { points, .. } => {
            let p = points.iter().nth(alt).expect("alternative index");
            for j in 0..k {
                let mut unit = vec![Rational::zero(); k];
                unit[j] = Rational::from_integer(1.into());
                lp.push(row_for(signs, &unit, k), Relation::Eq, p[j].clone());
            }
        }
        Region::Polygons(pieces) => {
            for h in pieces[alt].halfspaces() {
                let rel = if h.strict { Relation::Lt } else { Relation::Le };
                lp.push(row_for(signs, &h.normal, k), rel, h.offset.clone());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::{build_network, conserves, Arc};

    fn v(x: i64, y: i64) -> Vector {
        Vector::from_ints(&[x, y])
    }

    fn signed(pairs: &[(&str, i8)]) -> SignedArcs {
        pairs.iter().map(|(a, s)| (a.to_string(), *s)).collect()
    }

    const CYCLENET_TREE: [&str; 5] = ["a2", "a3", "a4", "a5", "a6"];

    #[test]
    fn documented_tree_reproduces_the_three_cycles() {
        let net = fixtures::cyclenet();
        let sys = cycle_basis_with_tree(&net, &CYCLENET_TREE).unwrap();
        assert_eq!(sys.basis.len(), 3);
        assert_eq!(sys.basis[0].arcs, signed(&[("a1", 1), ("a3", 1), ("a4", -1), ("a2", -1)]));
        assert_eq!(sys.basis[1].arcs, signed(&[("a7", 1), ("a6", -1), ("a3", -1), ("a5", 1)]));
        assert_eq!(sys.basis[2].arcs, signed(&[("a8", 1), ("a3", -1), ("a5", 1)]));
    }

    #[test]
    fn bfs_tree_and_validation() {
        let net = fixtures::cyclenet();
        let sys = cycle_basis(&net).unwrap();
        assert_eq!(sys.tree, ["a1", "a2", "a3", "a5", "a6"]);
        assert_eq!(sys.basis.len(), net.arcs().len() - net.nodes().len() + 1);
        assert!(matches!(cycle_basis_with_tree(&net, &["a1", "a2"]), Err(Error::InvalidTree(_))));
        assert!(matches!(
            cycle_basis_with_tree(&net, &["a1", "a3", "a4", "a2", "a6"]),
            Err(Error::InvalidTree(_))
        ));
    }

    #[test]
    fn tree_network_has_only_the_return_cycle() {
        let net = fixtures::chain();
        let sys = cycle_basis(&net).unwrap();
        assert!(sys.basis.is_empty());
        assert_eq!(sys.enhanced_cycle_count(), 1);
        assert_eq!(sys.st_path, Some(signed(&[("s-v1", 1), ("v1-v2", 1), ("v2-t", 1)])));
    }

    #[test]
    fn disconnected_components_get_their_own_trees() {
        let cap = Region::int_points(2, &[&[0, 0], &[1, 1]]).unwrap();
        let net = build_network(
            2,
            vec!["s".into(), "x".into(), "y".into(), "t".into()],
            vec![
                Arc::new("a", "s", "t", cap.clone()),
                Arc::new("b", "x", "y", cap.clone()),
                Arc::new("c", "y", "x", cap),
            ],
            "s",
            "t",
        )
        .unwrap();
        let sys = cycle_basis(&net).unwrap();
        assert_eq!(sys.tree, ["a", "b"]);
        assert_eq!(sys.basis[0].arcs, signed(&[("c", 1), ("b", 1)]));
        assert!(decide(&net, &v(1, 1)).unwrap().is_feasible());
        assert_eq!(cycle_basis_with_tree(&net, &["a"]), Err(Error::InvalidTree("arcs do not span the endpoints of `b`".into())));
    }

    #[test]
    fn unreachable_sink_admits_only_zero() {
        let cap = Region::int_points(2, &[&[1, 0]]).unwrap();
        let net = build_network(
            2,
            vec!["s".into(), "x".into(), "t".into()],
            vec![Arc::new("a", "s", "x", cap.clone()), Arc::new("b", "x", "s", cap)],
            "s",
            "t",
        )
        .unwrap();
        let sys = cycle_basis(&net).unwrap();
        assert_eq!(sys.st_path, None);
        let zero = decide(&net, &v(0, 0)).unwrap();
        assert_eq!(zero.witness().unwrap()["a"], v(1, 0));
        assert_eq!(decide(&net, &v(1, 0)).unwrap(), Decision::Infeasible);
    }

    #[test]
    fn pseudoflow_follows_the_tree_path() {
        let net = fixtures::example1();
        let sys = cycle_basis(&net).unwrap();
        // BFS from s takes a1 then a3, so the path is the direct arc
        assert_eq!(sys.st_path, Some(signed(&[("a3", 1)])));
        let alt = cycle_basis_with_tree(&net, &["a1", "a2"]).unwrap();
        let p = build_pseudoflow(&net, &alt, &v(2, 1)).unwrap();
        assert_eq!(p["a1"], v(2, 1));
        assert_eq!(p["a2"], v(2, 1));
        assert_eq!(p["a3"], v(0, 0));
        assert!(conserves(&net, &p).unwrap());
        assert!(check_flow(&net, &p).unwrap() != Verdict::Invalid);
    }

    #[test]
    fn shifted_constraint_is_a_translation() {
        let net = fixtures::cyclenet();
        let sys = cycle_basis(&net).unwrap();
        let mut pseudo = build_pseudoflow(&net, &sys, &v(0, 0)).unwrap();
        pseudo.insert("a2".into(), v(1, 1));
        let cons = cycle_constraints(&net, &sys, &pseudo).unwrap();
        assert_eq!(cons.len(), net.arcs().len());
        let a2 = cons.iter().find(|c| c.arc == "a2").unwrap();
        // capacity of a2 is [0,2]²
        assert_eq!(a2.region.vertex_lists(), vec![vec![v(-1, -1), v(1, -1), v(1, 1), v(-1, 1)]]);
    }

    #[test]
    fn decide_on_the_gap_network() {
        let net = fixtures::exnet();
        assert_eq!(decide(&net, &v(1, 2)).unwrap(), Decision::Infeasible);
        let d = decide(&net, &v(2, 1)).unwrap();
        let w = d.witness().unwrap();
        assert_eq!(check_flow(&net, w).unwrap(), Verdict::ValidFlow);
        assert_eq!(w["e"], v(2, 1));
        assert!(decide(&net, &v(0, 0)).unwrap().is_feasible());
        assert!(decide(&net, &Vector::new(vec![Rational::new(1.into(), 1.into()), Rational::new(3.into(), 2.into())]))
            .unwrap()
            .is_feasible());
        assert!(!decide(&net, &v(-1, 0)).unwrap().is_feasible());
    }

    #[test]
    fn decide_on_points_matches_gluing() {
        let net = fixtures::example1();
        let values = crate::gluing::feasible_flows(&net).unwrap().family.values();
        for x in 0..4 {
            for y in 0..4 {
                let f = v(x, y);
                assert_eq!(decide(&net, &f).unwrap().is_feasible(), values.contains(&f), "{f}");
            }
        }
    }

    #[test]
    fn equal_value_flows_differ_by_cycles() {
        let net = fixtures::gluing();
        let sys = cycle_basis(&net).unwrap();
        let fam = crate::gluing::feasible_flows(&net).unwrap().family;
        for (_, flows) in fam.by_value() {
            let (a, b) = (&flows[0].assignment, &flows[flows.len() - 1].assignment);
            let d: ArcAssignment = a.iter().map(|(id, x)| (id.clone(), x - &b[id])).collect();
            assert!(sys.coordinates(&net, &d).is_some());
        }
    }
}
