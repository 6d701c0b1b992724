//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

use mcflow::model::{build_network, Arc, EnhancedNetwork};
use mcflow::num::{rat, Vector};
use mcflow::regions::{ConvexPolygon, Halfspace, Region};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

fn node_names(n: usize) -> Vec<String> {
    let mut names = vec!["s".to_string()];
    names.extend((1..n - 1).map(|i| format!("v{i}")));
    names.push("t".into());
    names
}

/// Nonempty random subset of `{0,1,2}²` with at most `max` points.
pub fn random_points(rng: &mut Rng8, max: usize) -> Region {
    let mut all: Vec<Vector> = (0..3).flat_map(|x| (0..3).map(move |y| Vector::from_ints(&[x, y]))).collect();
    all.shuffle(rng);
    let size = rng.gen_range(1..=max);
    Region::points(2, all.into_iter().take(size)).unwrap()
}

/// Random network with `2..=max_nodes` nodes and up to `max_arcs` arcs
/// whose capacities are small subsets of `{0,1,2}²`.
pub fn random_point_network(rng: &mut Rng8, max_nodes: usize, max_arcs: usize, max_points: usize) -> EnhancedNetwork {
    let n = rng.gen_range(2..=max_nodes);
    let names = node_names(n);
    let m = rng.gen_range(1..=max_arcs);
    let arcs = (0..m)
        .map(|i| {
            let tail = rng.gen_range(0..n);
            let mut head = rng.gen_range(0..n - 1);
            if head >= tail {
                head += 1;
            }
            Arc::new(format!("a{i}"), names[tail].clone(), names[head].clone(), random_points(rng, max_points))
        })
        .collect();
    build_network(2, names, arcs, "s", "t").unwrap()
}

/// Parallel internally disjoint s–t paths with point capacities.
pub fn random_disjoint_network(rng: &mut Rng8, max_paths: usize, max_len: usize) -> EnhancedNetwork {
    let mut nodes = vec!["s".to_string(), "t".to_string()];
    let mut arcs = Vec::new();
    let paths = rng.gen_range(1..=max_paths);
    for p in 0..paths {
        let len = rng.gen_range(1..=max_len);
        let mut prev = "s".to_string();
        for i in 0..len {
            let next = if i + 1 == len {
                "t".to_string()
            } else {
                let name = format!("p{p}n{i}");
                nodes.push(name.clone());
                name
            };
            arcs.push(Arc::new(format!("p{p}a{i}"), prev, next.clone(), random_points(rng, 5)));
            prev = next;
        }
    }
    build_network(2, nodes, arcs, "s", "t").unwrap()
}

/// `{x, y >= 0, x <= a, y <= b, x + y <= c}`: compact and downward closed.
pub fn random_reducible_polygon(rng: &mut Rng8) -> Region {
    let a = rng.gen_range(0..=3);
    let b = rng.gen_range(0..=3);
    let c = rng.gen_range(0..=4);
    let hs = vec![
        Halfspace::new(rat(-1), rat(0), rat(0)),
        Halfspace::new(rat(0), rat(-1), rat(0)),
        Halfspace::new(rat(1), rat(0), rat(a)),
        Halfspace::new(rat(0), rat(1), rat(b)),
        Halfspace::new(rat(1), rat(1), rat(c)),
    ];
    Region::polygon(ConvexPolygon::from_halfspaces(hs).unwrap().unwrap())
}

/// Connected network (random spanning tree plus extra arcs) with random
/// reducible polygonal capacities.
pub fn random_reducible_network(rng: &mut Rng8, max_nodes: usize, extra_arcs: usize) -> EnhancedNetwork {
    let n = rng.gen_range(2..=max_nodes);
    let names = node_names(n);
    let mut arcs = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let j = order[rng.gen_range(0..i)];
        let (a, b) = if rng.gen_bool(0.5) { (order[i], j) } else { (j, order[i]) };
        arcs.push(Arc::new(format!("a{}", arcs.len()), names[a].clone(), names[b].clone(), random_reducible_polygon(rng)));
    }
    for _ in 0..rng.gen_range(0..=extra_arcs) {
        let tail = rng.gen_range(0..n);
        let mut head = rng.gen_range(0..n - 1);
        if head >= tail {
            head += 1;
        }
        arcs.push(Arc::new(format!("a{}", arcs.len()), names[tail].clone(), names[head].clone(), random_reducible_polygon(rng)));
    }
    build_network(2, names, arcs, "s", "t").unwrap()
}
