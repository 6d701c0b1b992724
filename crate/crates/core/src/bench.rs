//! Operation counts of gluing versus brute force on the three-arc chain.

use std::time::{Duration, Instant};

use crate::cuts::{enumerate_cuts, fold_order, Cut};
use crate::error::Result;
use crate::gluing::{brute_force, local_flows_of_cut, mutual_capacity};
use crate::model::{build_network, Arc, EnhancedNetwork};
use crate::num::Vector;
use crate::regions::Region;

/// `s → v1 → v2 → t` with lattice capacities: `x + y <= 2` on the first
/// arc, `[0,U] × [0,3]` on the second and `[0,3] × [0,U]` on the third.
pub fn chain_network(u: u32) -> EnhancedNetwork {
    let u = i64::from(u);
    let lattice = |xs: i64, ys: i64, keep: &dyn Fn(i64, i64) -> bool| {
        let pts = (0..=xs).flat_map(|x| (0..=ys).map(move |y| (x, y)));
        Region::points(2, pts.filter(|&(x, y)| keep(x, y)).map(|(x, y)| Vector::from_ints(&[x, y]))).expect("2-d points")
    };
    build_network(
        2,
        ["s", "v1", "v2", "t"].map(String::from).to_vec(),
        vec![
            Arc::new("s-v1", "s", "v1", lattice(2, 2, &|x, y| x + y <= 2)),
            Arc::new("v1-v2", "v1", "v2", lattice(u, 3, &|_, _| true)),
            Arc::new("v2-t", "v2", "t", lattice(3, u, &|_, _| true)),
        ],
        "s",
        "t",
    )
    .expect("chain is well formed")
}

/// The chain's three single-arc cuts, left to right.
pub fn chain_cuts(net: &EnhancedNetwork) -> Vec<Cut> {
    fold_order(enumerate_cuts(net))
        .into_iter()
        .filter(|c| c.backward.is_empty() && c.forward.len() == 1)
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub u: u32,
    pub first_cut_flows: usize,
    pub gluing_semantic: u64,
    pub gluing_actual: u64,
    pub gluing_steps: Vec<u64>,
    pub brute_semantic: u64,
    pub brute_actual: u64,
    pub feasible_values: usize,
    pub gluing_time: Duration,
    pub brute_time: Duration,
}

impl BenchRow {
    /// Closed forms for the counts: `48(U+1)` and `384(U+1)²`.
    pub fn closed_forms(u: u32) -> (u64, u64) {
        let w = u64::from(u) + 1;
        (48 * w, 384 * w * w)
    }
}

pub fn bench_chain(u: u32) -> Result<BenchRow> {
    let net = chain_network(u);
    let cuts = chain_cuts(&net);
    let first_cut_flows = local_flows_of_cut(&net, &cuts[0])?.len();
    let start = Instant::now();
    let glued = mutual_capacity(&net, &cuts)?;
    let gluing_time = start.elapsed();
    let start = Instant::now();
    let brute = brute_force(&net)?;
    let brute_time = start.elapsed();
    debug_assert_eq!(glued.family.assignments(), brute.family.assignments());
    Ok(BenchRow {
        u,
        first_cut_flows,
        gluing_semantic: glued.counters.semantic,
        gluing_actual: glued.counters.actual,
        gluing_steps: glued.counters.steps,
        brute_semantic: brute.counters.semantic,
        brute_actual: brute.counters.actual,
        feasible_values: glued.family.values().len(),
        gluing_time,
        brute_time,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of `ln(count)` against `ln(U+1)`.
    pub gluing_exponent: f64,
    pub brute_exponent: f64,
}

pub fn bench_sweep(us: &[u32]) -> Result<BenchReport> {
    let rows = us.iter().map(|&u| bench_chain(u)).collect::<Result<Vec<_>>>()?;
    let xs: Vec<f64> = rows.iter().map(|r| f64::from(r.u + 1)).collect();
    let g: Vec<f64> = rows.iter().map(|r| r.gluing_semantic as f64).collect();
    let b: Vec<f64> = rows.iter().map(|r| r.brute_semantic as f64).collect();
    Ok(BenchReport {
        gluing_exponent: loglog_slope(&xs, &g),
        brute_exponent: loglog_slope(&xs, &b),
        rows,
    })
}

/// Slope of the least-squares line through `(ln x, ln y)`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let cov: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    cov / var
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_fixture_is_the_u1_chain() {
        assert_eq!(chain_network(1).base(), crate::fixtures::chain().base());
    }

    #[test]
    fn first_cut_has_six_flows() {
        assert_eq!(bench_chain(0).unwrap().first_cut_flows, 6);
    }

    #[test]
    fn large_u_matches_closed_forms() {
        for u in [2, 3, 5] {
            let row = bench_chain(u).unwrap();
            let (g, b) = BenchRow::closed_forms(u);
            assert_eq!(row.gluing_semantic, g);
            assert_eq!(row.brute_semantic, b);
            assert_eq!(row.gluing_steps[0], 24 * (u64::from(u) + 1));
        }
    }

    #[test]
    fn slope_of_exact_power_law() {
        let xs = [1.0, 2.0, 4.0, 8.0];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 3.0 * x * x).collect();
        assert!((loglog_slope(&xs, &ys) - 2.0).abs() < 1e-12);
    }
}
