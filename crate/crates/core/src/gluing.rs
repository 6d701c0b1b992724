//! Local flows over cuts and the gluing engine.
//!
//! Every cut contributes the family of capacity-respecting assignments to
//! its arcs (and to `e`, which carries the net value). Folding the cuts
//! together, keeping only pairs that agree on shared arcs, yields exactly
//! the feasible flows of the network.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::cuts::{enumerate_cuts, fold_order, Cut};
use crate::error::{Error, Result};
use crate::model::{ArcAssignment, EnhancedNetwork, RETURN_ARC};
use crate::num::Vector;

/// Default cap on the number of enumerated assignments.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// An assignment over the arcs of a set of cuts, `e` included.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalFlow {
    /// Indices (binary-counter positions) of the cuts covered.
    pub cuts: BTreeSet<usize>,
    pub assignment: ArcAssignment,
}

impl LocalFlow {
    pub fn value(&self) -> &Vector {
        &self.assignment[RETURN_ARC]
    }

    /// The same flow restricted to `arcs` (and `e`).
    pub fn restrict<'a>(&self, cuts: &BTreeSet<usize>, arcs: impl IntoIterator<Item = &'a str>) -> LocalFlow {
        let mut assignment: ArcAssignment = arcs
            .into_iter()
            .filter_map(|a| self.assignment.get(a).map(|v| (a.to_string(), v.clone())))
            .collect();
        assignment.insert(RETURN_ARC.into(), self.value().clone());
        LocalFlow {
            cuts: cuts.clone(),
            assignment,
        }
    }
}

/// Local flows over one set of cuts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LocalFlowFamily {
    pub cuts: BTreeSet<usize>,
    /// Sorted by assignment.
    pub flows: Vec<LocalFlow>,
}

impl LocalFlowFamily {
    fn new(cuts: BTreeSet<usize>, mut flows: Vec<LocalFlow>) -> Self {
        flows.sort();
        flows.dedup();
        LocalFlowFamily { cuts, flows }
    }

    pub fn len(&self) -> usize {
        self.flows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flows.is_empty()
    }

    pub fn values(&self) -> BTreeSet<Vector> {
        self.flows.iter().map(|f| f.value().clone()).collect()
    }

    /// Level sets of the value map.
    pub fn by_value(&self) -> BTreeMap<Vector, Vec<&LocalFlow>> {
        let mut out: BTreeMap<Vector, Vec<&LocalFlow>> = BTreeMap::new();
        for f in &self.flows {
            out.entry(f.value().clone()).or_default().push(f);
        }
        out
    }

    pub fn assignments(&self) -> BTreeSet<ArcAssignment> {
        self.flows.iter().map(|f| f.assignment.clone()).collect()
    }
}

/// Operation counts of one run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Counters {
    /// Textbook count: for gluing, `|partials| × |family|` summed over
    /// fold steps; for brute force, assignments examined times node checks.
    pub semantic: u64,
    /// Work actually done: candidate pairs inspected after hashing, or
    /// node balance checks performed.
    pub actual: u64,
    /// Semantic count per fold step (gluing only).
    pub steps: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub family: LocalFlowFamily,
    pub counters: Counters,
}

fn points_of<'a>(net: &'a EnhancedNetwork, id: &str) -> Result<Vec<&'a Vector>> {
    let arc = net.arc(id).ok_or_else(|| Error::UnknownArc(id.into()))?;
    arc.capacity
        .point_set()
        .map(|p| p.iter().collect())
        .ok_or_else(|| Error::NotEnumerable(id.into()))
}

/// Every capacity-respecting assignment to the arcs of `c` whose net value
/// is admissible on `e` (nonnegative).
pub fn local_flows_of_cut(net: &EnhancedNetwork, c: &Cut) -> Result<LocalFlowFamily> {
    local_flows_with_budget(net, c, DEFAULT_BUDGET)
}

pub fn local_flows_with_budget(net: &EnhancedNetwork, c: &Cut, budget: u64) -> Result<LocalFlowFamily> {
    let arcs: Vec<(&str, bool)> = c.oriented_arcs().collect();
    let choices = arcs
        .iter()
        .map(|(id, _)| points_of(net, id))
        .collect::<Result<Vec<_>>>()?;
    let size = choices.iter().fold(1u64, |acc, c| acc.saturating_mul(c.len() as u64));
    if size > budget {
        return Err(Error::BudgetExceeded(budget));
    }
    let mut flows = Vec::new();
    let mut pick = vec![0usize; arcs.len()];
    if choices.iter().all(|c| !c.is_empty()) {
        loop {
            let mut value = Vector::zero(net.k());
            let mut assignment = ArcAssignment::new();
            for (i, (id, forward)) in arcs.iter().enumerate() {
                let v = choices[i][pick[i]];
                if *forward {
                    value += v;
                } else {
                    value -= v;
                }
                assignment.insert(id.to_string(), v.clone());
            }
            if value.is_nonnegative() {
                assignment.insert(RETURN_ARC.into(), value);
                flows.push(LocalFlow {
                    cuts: [c.index].into(),
                    assignment,
                });
            }
            let mut i = 0;
            while i < pick.len() {
                pick[i] += 1;
                if pick[i] < choices[i].len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
            if i == pick.len() {
                break;
            }
        }
    }
    Ok(LocalFlowFamily::new([c.index].into(), flows))
}

/// Local flows agree on every arc they share, `e` included.
pub fn compatible(f1: &LocalFlow, f2: &LocalFlow) -> bool {
    f1.assignment
        .iter()
        .all(|(a, v)| f2.assignment.get(a).is_none_or(|w| w == v))
}

/// The unique local flow over the union of the contributors' cuts.
pub fn glue(flows: &[&LocalFlow]) -> Result<LocalFlow> {
    let mut cuts = BTreeSet::new();
    let mut assignment = ArcAssignment::new();
    for f in flows {
        cuts.extend(f.cuts.iter().copied());
        for (a, v) in &f.assignment {
            match assignment.get(a) {
                Some(w) if w != v => return Err(Error::Incompatible(a.clone())),
                Some(_) => {}
                None => {
                    assignment.insert(a.clone(), v.clone());
                }
            }
        }
    }
    Ok(LocalFlow { cuts, assignment })
}

/// Folds the cuts left to right, gluing each surviving partial flow with
/// every compatible local flow of the next cut.
pub fn mutual_capacity(net: &EnhancedNetwork, cuts: &[Cut]) -> Result<Outcome> {
    mutual_capacity_with_budget(net, cuts, DEFAULT_BUDGET)
}

pub fn mutual_capacity_with_budget(net: &EnhancedNetwork, cuts: &[Cut], budget: u64) -> Result<Outcome> {
    let mut counters = Counters::default();
    let Some((first, rest)) = cuts.split_first() else {
        return Err(Error::InvalidParameter("no cuts to glue".into()));
    };
    let mut partial = local_flows_with_budget(net, first, budget)?;
    let mut covered: BTreeSet<&str> = first.oriented_arcs().map(|(a, _)| a).collect();
    for c in rest {
        let family = local_flows_with_budget(net, c, budget)?;
        let step = (partial.len() as u64).saturating_mul(family.len() as u64);
        counters.steps.push(step);
        counters.semantic = counters.semantic.saturating_add(step);

        let mut shared: Vec<&str> = c.oriented_arcs().map(|(a, _)| a).filter(|a| covered.contains(a)).collect();
        shared.push(RETURN_ARC);
        let key = |f: &LocalFlow| -> Vec<Vector> { shared.iter().map(|a| f.assignment[*a].clone()).collect() };
        let mut buckets: HashMap<Vec<Vector>, Vec<&LocalFlow>> = HashMap::new();
        for f in &family.flows {
            buckets.entry(key(f)).or_default().push(f);
        }
        let mut glued = Vec::new();
        for p in &partial.flows {
            if let Some(matches) = buckets.get(&key(p)) {
                counters.actual += matches.len() as u64;
                for m in matches {
                    glued.push(glue(&[p, m])?);
                }
            }
            if glued.len() as u64 > budget {
                return Err(Error::BudgetExceeded(budget));
            }
        }
        let mut cut_set = partial.cuts.clone();
        cut_set.insert(c.index);
        partial = LocalFlowFamily::new(cut_set, glued);
        covered.extend(c.oriented_arcs().map(|(a, _)| a));
    }
    Ok(Outcome {
        family: partial,
        counters,
    })
}

/// Mutual capacity of every cut of the network, in fold order.
pub fn feasible_flows(net: &EnhancedNetwork) -> Result<Outcome> {
    feasible_flows_with_budget(net, DEFAULT_BUDGET)
}

pub fn feasible_flows_with_budget(net: &EnhancedNetwork, budget: u64) -> Result<Outcome> {
    mutual_capacity_with_budget(net, &fold_order(enumerate_cuts(net)), budget)
}

/// Exhaustive search over the product of arc capacities, keeping the
/// assignments that conserve flow at every node.
pub fn brute_force(net: &EnhancedNetwork) -> Result<Outcome> {
    brute_force_with_budget(net, DEFAULT_BUDGET)
}

pub fn brute_force_with_budget(net: &EnhancedNetwork, budget: u64) -> Result<Outcome> {
    let arcs = net.arcs();
    let choices = arcs
        .iter()
        .map(|a| points_of(net, &a.id))
        .collect::<Result<Vec<_>>>()?;
    let product = choices.iter().fold(1u64, |acc, c| acc.saturating_mul(c.len() as u64));
    if product > budget {
        return Err(Error::BudgetExceeded(budget));
    }
    let nodes = net.nodes();
    let index: HashMap<&str, usize> = nodes.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let ends: Vec<(usize, usize)> = arcs
        .iter()
        .map(|a| (index[a.tail.as_str()], index[a.head.as_str()]))
        .collect();
    let (s, t) = (index[net.source()], index[net.sink()]);
    // Nodes whose last incident arc is arc i get checked right after it.
    let mut settle: Vec<Vec<usize>> = vec![Vec::new(); arcs.len()];
    for v in 0..nodes.len() {
        if v == t {
            continue;
        }
        if let Some(last) = ends.iter().rposition(|&(a, b)| a == v || b == v) {
            settle[last].push(v);
        }
    }

    let mut search = Search {
        ends: &ends,
        choices: &choices,
        settle: &settle,
        s,
        t,
        balance: vec![Vector::zero(net.k()); nodes.len()],
        picked: Vec::with_capacity(arcs.len()),
        checks: 0,
        found: Vec::new(),
    };
    search.run(0);
    let flows = search
        .found
        .into_iter()
        .map(|picked| {
            let mut assignment: ArcAssignment = arcs
                .iter()
                .zip(&picked)
                .zip(&choices)
                .map(|((a, &i), c)| (a.id.clone(), c[i].clone()))
                .collect();
            let value = value_at_source(net, &assignment);
            assignment.insert(RETURN_ARC.into(), value);
            assignment
        })
        .collect::<Vec<_>>();
    let all_cuts: BTreeSet<usize> = enumerate_cuts(net).iter().map(|c| c.index).collect();
    let family = LocalFlowFamily::new(
        all_cuts.clone(),
        flows
            .into_iter()
            .map(|assignment| LocalFlow {
                cuts: all_cuts.clone(),
                assignment,
            })
            .collect(),
    );
    Ok(Outcome {
        family,
        counters: Counters {
            semantic: product.saturating_mul(nodes.len() as u64),
            actual: search.checks,
            steps: Vec::new(),
        },
    })
}

fn value_at_source(net: &EnhancedNetwork, f: &ArcAssignment) -> Vector {
    let mut v = Vector::zero(net.k());
    for a in net.arcs() {
        if a.tail == net.source() {
            v += &f[&a.id];
        }
        if a.head == net.source() {
            v -= &f[&a.id];
        }
    }
    v
}

struct Search<'a> {
    ends: &'a [(usize, usize)],
    choices: &'a [Vec<&'a Vector>],
    settle: &'a [Vec<usize>],
    s: usize,
    t: usize,
    /// Outflow minus inflow over base arcs.
    balance: Vec<Vector>,
    picked: Vec<usize>,
    checks: u64,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, i: usize) {
        if i == self.ends.len() {
            // e closes the circulation: it carries the source's net outflow
            // into s and the same amount out of t.
            self.checks += 1;
            let value = self.balance[self.s].clone();
            if value.is_nonnegative() && self.balance[self.t] == -&value {
                self.found.push(self.picked.clone());
            }
            return;
        }
        let (tail, head) = self.ends[i];
        for (j, v) in self.choices[i].iter().enumerate() {
            self.balance[tail] += v;
            self.balance[head] -= v;
            self.picked.push(j);
            let mut ok = true;
            for &n in &self.settle[i] {
                self.checks += 1;
                let b = &self.balance[n];
                ok = if n == self.s { b.is_nonnegative() } else { b.is_zero() };
                if !ok {
                    break;
                }
            }
            if ok {
                self.run(i + 1);
            }
            self.picked.pop();
            self.balance[tail] -= v;
            self.balance[head] += v;
        }
    }
}
