use std::collections::BTreeSet;

use mcflow::num::{rat, Vector};
use mcflow::regions::{convex_hull, ConvexPolygon, Region};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Vector> {
    (-3i64..=3, -3i64..=3).prop_map(|(x, y)| Vector::from_ints(&[x, y]))
}

fn point_set() -> impl Strategy<Value = BTreeSet<Vector>> {
    prop::collection::btree_set(point(), 1..6)
}

fn polygon() -> impl Strategy<Value = ConvexPolygon> {
    prop::collection::vec(point(), 1..6).prop_filter_map("degenerate", |pts| ConvexPolygon::from_vertices(&pts).ok())
}

fn sum_oracle(a: &BTreeSet<Vector>, b: &BTreeSet<Vector>) -> BTreeSet<Vector> {
    a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect()
}

proptest! {
    #[test]
    fn point_sum_matches_pairwise_sums(a in point_set(), b in point_set()) {
        let ra = Region::points(2, a.clone()).unwrap();
        let rb = Region::points(2, b.clone()).unwrap();
        let sum = ra.minkowski_sum(&rb).unwrap();
        prop_assert_eq!(sum.point_set().unwrap(), &sum_oracle(&a, &b));
        prop_assert_eq!(sum, rb.minkowski_sum(&ra).unwrap());
    }

    #[test]
    fn point_intersection_is_set_intersection(a in point_set(), b in point_set()) {
        let r = Region::points(2, a.clone()).unwrap().intersect(&Region::points(2, b.clone()).unwrap()).unwrap();
        let expected: BTreeSet<Vector> = a.intersection(&b).cloned().collect();
        prop_assert_eq!(r.point_set().unwrap(), &expected);
    }

    #[test]
    fn polygon_sum_is_hull_of_vertex_sums(p in polygon(), q in polygon()) {
        let sum = p.minkowski_sum(&q);
        let sums: Vec<Vector> = p.vertices().iter().flat_map(|x| q.vertices().iter().map(move |y| x + y)).collect();
        let mut got = sum.vertices().to_vec();
        let mut want = convex_hull(&sums);
        got.sort();
        want.sort();
        prop_assert_eq!(got, want);
        let rp = Region::polygon(p.clone());
        let rq = Region::polygon(q.clone());
        prop_assert_eq!(rp.minkowski_sum(&rq).unwrap(), rq.minkowski_sum(&rp).unwrap());
    }

    #[test]
    fn negation_distributes_over_sums(p in polygon(), q in polygon(), a in point_set(), b in point_set()) {
        let rp = Region::polygon(p);
        let rq = Region::polygon(q);
        prop_assert_eq!(
            rp.minkowski_sum(&rq).unwrap().negate(),
            rp.negate().minkowski_sum(&rq.negate()).unwrap()
        );
        let ra = Region::points(2, a).unwrap();
        let rb = Region::points(2, b).unwrap();
        prop_assert_eq!(
            ra.minkowski_sum(&rb).unwrap().negate(),
            ra.negate().minkowski_sum(&rb.negate()).unwrap()
        );
    }

    #[test]
    fn intersection_membership(p in polygon(), q in polygon(), x in point()) {
        let r = Region::polygon(p.clone()).intersect(&Region::polygon(q.clone())).unwrap();
        prop_assert_eq!(r.contains(&x).unwrap(), p.contains(&x) && q.contains(&x));
    }

    #[test]
    fn integer_points_match_grid_scan(p in polygon()) {
        let got: BTreeSet<Vector> = p.integer_points().into_iter().collect();
        let want: BTreeSet<Vector> = (-3..=3)
            .flat_map(|x| (-3..=3).map(move |y| Vector::from_ints(&[x, y])))
            .filter(|v| p.contains(v))
            .collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn translation_moves_membership(p in polygon(), x in point(), d in point()) {
        let r = Region::polygon(p.clone()).translate(&d).unwrap();
        prop_assert_eq!(r.contains(&(&x + &d)).unwrap(), p.contains(&x));
    }
}

#[test]
fn area_of_unit_square() {
    let sq = ConvexPolygon::rectangle(rat(0), rat(1), rat(0), rat(1)).unwrap();
    assert_eq!(sq.area(), rat(1));
    assert_eq!(sq.minkowski_sum(&sq).area(), rat(4));
}
