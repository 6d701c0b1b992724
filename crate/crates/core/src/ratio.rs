//! Binary search for the largest feasible multiple of a ratio vector.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cycles::{cycle_basis, decide_with_system, CycleSystem, Decision, DEFAULT_BRANCH_BUDGET};
use crate::error::{Error, Result};
use crate::model::{ArcAssignment, EnhancedNetwork};
use crate::num::{ceil, floor, format_rational, ratio, Rational, Vector};
use crate::regions::RegionKind;

/// Cap on how often an initially feasible upper bound is doubled.
const MAX_DOUBLINGS: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioProblem {
    pub ratio: Vector,
    /// Initial overestimate `B⁺` of the maximum multiple.
    pub upper: Rational,
    pub epsilon: Rational,
    /// Proceed without checking capacities for downward closure.
    pub assume_reducible: bool,
    pub budget: u64,
}

impl RatioProblem {
    pub fn new(ratio: Vector, upper: Rational, epsilon: Rational) -> Self {
        RatioProblem {
            ratio,
            upper,
            epsilon,
            assume_reducible: false,
            budget: DEFAULT_BRANCH_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioResult {
    /// `B⁻`: a verified feasible multiple.
    pub lower: Rational,
    /// `B⁺` at termination: never verified feasible.
    pub upper: Rational,
    /// Iterations of the halving loop.
    pub iterations: usize,
    /// Times the initial `B⁺` had to be doubled.
    pub doublings: usize,
    /// Flow with value `lower · ratio`.
    pub witness: ArcAssignment,
    /// Downward closure was not certified for every capacity.
    pub reducibility_assumed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntRatioResult {
    /// Largest integer `P` with `P · ratio` feasible.
    pub best: BigInt,
    pub search: RatioResult,
    /// Flow with value `best · ratio`.
    pub witness: ArcAssignment,
}

struct Oracle<'a> {
    net: &'a EnhancedNetwork,
    sys: CycleSystem,
    ratio: &'a Vector,
    budget: u64,
    probes: usize,
}

impl Oracle<'_> {
    fn test(&mut self, t: &Rational) -> Result<Decision> {
        self.probes += 1;
        decide_with_system(self.net, &self.sys, &self.ratio.scale(t), self.budget)
    }
}

/// Returns whether reducibility had to be assumed.
fn check_reducible(net: &EnhancedNetwork, assume: bool) -> Result<bool> {
    let certified = net.arcs().iter().all(|a| a.capacity.kind() == RegionKind::Points);
    if assume {
        return Ok(!(certified && net.is_reducible()));
    }
    // Point sets are checked exactly; polygons only on their lattice points,
    // so a failure there is a genuine counterexample but a pass is not proof.
    if let Some(a) = net.arcs().iter().find(|a| !a.capacity.is_reducible()) {
        return Err(Error::NotReducible(a.id.clone()));
    }
    Ok(!certified)
}

fn validate(net: &EnhancedNetwork, prob: &RatioProblem) -> Result<()> {
    if !prob.epsilon.is_positive() {
        return Err(Error::InvalidParameter(format!("epsilon must be positive, got {}", format_rational(&prob.epsilon))));
    }
    if !prob.upper.is_positive() {
        return Err(Error::InvalidParameter("upper bound must be positive".into()));
    }
    if prob.ratio.dim() != net.k() {
        return Err(Error::Dimension {
            expected: net.k(),
            found: prob.ratio.dim(),
            context: Some("ratio".into()),
        });
    }
    if !prob.ratio.is_nonnegative() || prob.ratio.is_zero() {
        return Err(Error::InvalidParameter("ratio must be nonnegative and nonzero".into()));
    }
    Ok(())
}

/// ε-approximate maximum feasible multiple: returns `B⁻` feasible with the
/// true maximum in `[B⁻, B⁻ + ε]`.
pub fn ratio_max(net: &EnhancedNetwork, prob: &RatioProblem) -> Result<RatioResult> {
    validate(net, prob)?;
    let assumed = check_reducible(net, prob.assume_reducible)?;
    let mut oracle = Oracle {
        net,
        sys: cycle_basis(net)?,
        ratio: &prob.ratio,
        budget: prob.budget,
        probes: 0,
    };
    search(&mut oracle, prob, assumed)
}

fn search(oracle: &mut Oracle<'_>, prob: &RatioProblem, assumed: bool) -> Result<RatioResult> {
    let mut lower = Rational::zero();
    let mut witness = match oracle.test(&lower)? {
        Decision::Feasible(w) => w,
        Decision::Infeasible => {
            return Err(Error::InvalidParameter("the zero flow is infeasible; capacities must contain 0".into()))
        }
    };
    let mut upper = prob.upper.clone();
    let mut doublings = 0;
    // The bound must be infeasible for the loop invariant to hold.
    while let Decision::Feasible(w) = oracle.test(&upper)? {
        if doublings == MAX_DOUBLINGS {
            return Err(Error::InvalidParameter("upper bound keeps being feasible".into()));
        }
        lower = upper.clone();
        witness = w;
        upper = &upper * Rational::from_integer(2.into());
        doublings += 1;
    }
    let two = Rational::from_integer(2.into());
    let mut iterations = 0;
    while &upper - &lower > prob.epsilon {
        let t = (&upper + &lower) / &two;
        match oracle.test(&t)? {
            Decision::Feasible(w) => {
                lower = t;
                witness = w;
            }
            Decision::Infeasible => upper = t,
        }
        iterations += 1;
    }
    Ok(RatioResult {
        lower,
        upper,
        iterations,
        doublings,
        witness,
        reducibility_assumed: assumed,
    })
}

/// Largest integer multiple: the halving loop followed by one test at
/// `ceil(B⁻)`. Requires `ε < 1/2`.
pub fn int_ratio_max(net: &EnhancedNetwork, prob: &RatioProblem) -> Result<IntRatioResult> {
    if prob.epsilon >= ratio(1, 2) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be below 1/2 for the integer search, got {}",
            format_rational(&prob.epsilon)
        )));
    }
    validate(net, prob)?;
    let assumed = check_reducible(net, prob.assume_reducible)?;
    let mut oracle = Oracle {
        net,
        sys: cycle_basis(net)?,
        ratio: &prob.ratio,
        budget: prob.budget,
        probes: 0,
    };
    let result = search(&mut oracle, prob, assumed)?;
    let up = ceil(&result.lower);
    let (best, witness) = if Rational::from_integer(up.clone()) == result.lower {
        (up, result.witness.clone())
    } else {
        match oracle.test(&Rational::from_integer(up.clone()))? {
            Decision::Feasible(w) => (up, w),
            Decision::Infeasible => {
                let down = floor(&result.lower);
                let w = oracle
                    .test(&Rational::from_integer(down.clone()))?
                    .witness()
                    .cloned()
                    .ok_or_else(|| Error::NotReducible("feasible multiples are not downward closed".into()))?;
                (down, w)
            }
        }
    };
    Ok(IntRatioResult {
        best,
        search: result,
        witness,
    })
}

/// Number of halving iterations for a given starting gap: the smallest `n`
/// with `gap / 2^n <= ε`.
pub fn expected_iterations(gap: &Rational, epsilon: &Rational) -> usize {
    let mut n = 0;
    let mut d = gap.clone();
    let two = Rational::from_integer(2.into());
    while &d > epsilon {
        d /= &two;
        n += 1;
    }
    n
}

/// Largest integer `P` with `P · ratio` feasible, by ascending scan up to
/// `limit`. Used to cross-check [`int_ratio_max`].
pub fn int_ratio_scan(net: &EnhancedNetwork, ratio: &Vector, limit: u64) -> Result<BigInt> {
    let sys = cycle_basis(net)?;
    let mut best = BigInt::zero();
    let mut p = BigInt::one();
    while p <= BigInt::from(limit) {
        let t = Rational::from_integer(p.clone());
        if !decide_with_system(net, &sys, &ratio.scale(&t), DEFAULT_BRANCH_BUDGET)?.is_feasible() {
            break;
        }
        best = p.clone();
        p += 1;
    }
    Ok(best)
}
