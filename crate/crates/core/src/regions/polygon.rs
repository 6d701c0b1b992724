//! Exact convex polygons in the plane.
//!
//! A piece is stored twice: as the halfspaces it was built from (each either
//! `a·x <= b` or strict `a·x < b`) and as the canonical vertex list of its
//! closure, counter-clockwise starting at the lexicographically smallest
//! vertex. Segments and single points are valid pieces.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::num::{ceil, floor, Rational, Vector};

/// `normal · x <= offset`, or `<` when `strict`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub normal: [Rational; 2],
    pub offset: Rational,
    pub strict: bool,
}

impl Halfspace {
    pub fn new(a: Rational, b: Rational, offset: Rational) -> Self {
        Halfspace {
            normal: [a, b],
            offset,
            strict: false,
        }
    }

    pub fn strict(a: Rational, b: Rational, offset: Rational) -> Self {
        Halfspace {
            normal: [a, b],
            offset,
            strict: true,
        }
    }

    fn eval(&self, p: &Vector) -> Rational {
        &self.normal[0] * &p[0] + &self.normal[1] * &p[1]
    }

    pub fn contains(&self, p: &Vector) -> bool {
        let lhs = self.eval(p);
        if self.strict {
            lhs < self.offset
        } else {
            lhs <= self.offset
        }
    }

    fn contains_closure(&self, p: &Vector) -> bool {
        self.eval(p) <= self.offset
    }

    fn strictly_inside(&self, p: &Vector) -> bool {
        self.eval(p) < self.offset
    }

    fn is_trivial(&self) -> bool {
        self.normal[0].is_zero() && self.normal[1].is_zero()
    }

    pub fn negated(&self) -> Halfspace {
        Halfspace {
            normal: [-&self.normal[0], -&self.normal[1]],
            offset: self.offset.clone(),
            strict: self.strict,
        }
    }

    pub fn translated(&self, by: &Vector) -> Halfspace {
        Halfspace {
            normal: self.normal.clone(),
            offset: &self.offset + self.eval(by),
            strict: self.strict,
        }
    }

    /// Scaled so the first nonzero normal entry has absolute value one.
    fn normalized(&self) -> Halfspace {
        let pivot = if self.normal[0].is_zero() {
            self.normal[1].abs()
        } else {
            self.normal[0].abs()
        };
        if pivot.is_zero() {
            return self.clone();
        }
        Halfspace {
            normal: [&self.normal[0] / &pivot, &self.normal[1] / &pivot],
            offset: &self.offset / &pivot,
            strict: self.strict,
        }
    }
}

impl fmt::Debug for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}x + {}y {} {}",
            self.normal[0],
            self.normal[1],
            if self.strict { "<" } else { "<=" },
            self.offset
        )
    }
}

fn cross(o: &Vector, a: &Vector, b: &Vector) -> Rational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

fn cross_vec(u: &Vector, v: &Vector) -> Rational {
    &u[0] * &v[1] - &u[1] * &v[0]
}

/// Convex hull, counter-clockwise from the lexicographically smallest point,
/// with collinear points removed. Collinear input yields its two extremes.
pub fn convex_hull(points: &[Vector]) -> Vec<Vector> {
    let mut pts: Vec<Vector> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Vector> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vector> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    lower
}

/// A convex piece of a planar region.
#[derive(Clone)]
pub struct ConvexPolygon {
    halfspaces: Vec<Halfspace>,
    vertices: Vec<Vector>,
}

impl ConvexPolygon {
    /// Builds a piece from halfspaces. `Ok(None)` means the set is empty.
    pub fn from_halfspaces(halfspaces: Vec<Halfspace>) -> Result<Option<Self>> {
        let mut hs: Vec<Halfspace> = Vec::with_capacity(halfspaces.len());
        for h in halfspaces {
            if h.is_trivial() {
                // 0 <= b or 0 < b
                let ok = if h.strict { h.offset.is_positive() } else { !h.offset.is_negative() };
                if !ok {
                    return Ok(None);
                }
                continue;
            }
            hs.push(h);
        }

        let spans = hs.iter().enumerate().any(|(i, a)| {
            hs[i + 1..]
                .iter()
                .any(|b| !(&a.normal[0] * &b.normal[1] - &a.normal[1] * &b.normal[0]).is_zero())
        });
        if !spans {
            return if parallel_family_feasible(&hs) {
                Err(Error::Unbounded)
            } else {
                Ok(None)
            };
        }

        let mut candidates = Vec::new();
        for i in 0..hs.len() {
            for j in i + 1..hs.len() {
                if let Some(p) = line_intersection(&hs[i], &hs[j]) {
                    if hs.iter().all(|h| h.contains_closure(&p)) {
                        candidates.push(p);
                    }
                }
            }
        }
        if candidates.is_empty() {
            return Ok(None);
        }
        for h in &hs {
            for dir in [
                Vector::new(vec![-&h.normal[1], h.normal[0].clone()]),
                Vector::new(vec![h.normal[1].clone(), -&h.normal[0]]),
            ] {
                let recedes = hs
                    .iter()
                    .all(|g| !(&g.normal[0] * &dir[0] + &g.normal[1] * &dir[1]).is_positive());
                if recedes {
                    return Err(Error::Unbounded);
                }
            }
        }
        let vertices = convex_hull(&candidates);
        // Nonempty under strict constraints iff each strict halfspace is
        // strictly satisfied somewhere on the closure (then the average of
        // those witnesses satisfies all of them at once).
        for h in hs.iter().filter(|h| h.strict) {
            if !vertices.iter().any(|v| h.strictly_inside(v)) {
                return Ok(None);
            }
        }
        // Keep the closure's edge halfspaces plus the strict halfspaces that
        // touch it; the rest are redundant and would pile up under repeated
        // intersection.
        let mut halfspaces: Vec<Halfspace> = halfspaces_of_hull(&vertices).iter().map(Halfspace::normalized).collect();
        for h in hs.iter().filter(|h| h.strict) {
            let h = h.normalized();
            if !vertices.iter().all(|v| h.strictly_inside(v)) && !halfspaces.contains(&h) {
                halfspaces.push(h);
            }
        }
        Ok(Some(ConvexPolygon { halfspaces, vertices }))
    }

    /// Closed convex hull of the given points.
    pub fn from_vertices(points: &[Vector]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyRegion);
        }
        if let Some(p) = points.iter().find(|p| p.dim() != 2) {
            return Err(Error::PolygonDimension(p.dim()));
        }
        let vertices = convex_hull(points);
        let halfspaces = halfspaces_of_hull(&vertices);
        Ok(ConvexPolygon { halfspaces, vertices })
    }

    /// Axis-aligned box `[x0,x1] × [y0,y1]`.
    pub fn rectangle(x0: Rational, x1: Rational, y0: Rational, y1: Rational) -> Result<Self> {
        let corners = vec![
            Vector::new(vec![x0.clone(), y0.clone()]),
            Vector::new(vec![x1.clone(), y0]),
            Vector::new(vec![x1, y1.clone()]),
            Vector::new(vec![x0, y1]),
        ];
        Self::from_vertices(&corners)
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    /// Canonical vertices of the closure.
    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.halfspaces.iter().all(|h| !h.strict)
    }

    /// 0 for a point, 1 for a segment, 2 otherwise.
    pub fn dimension(&self) -> usize {
        self.vertices.len().min(3) - 1
    }

    pub fn contains(&self, p: &Vector) -> bool {
        self.halfspaces.iter().all(|h| h.contains(p))
    }

    pub fn contains_closure(&self, p: &Vector) -> bool {
        self.halfspaces.iter().all(|h| h.contains_closure(p))
    }

    /// Conservative containment test: `true` guarantees `self ⊆ other`.
    pub fn is_subset_of(&self, other: &ConvexPolygon) -> bool {
        let own: Vec<Halfspace> = self
            .halfspaces
            .iter()
            .filter(|h| h.strict)
            .map(Halfspace::normalized)
            .collect();
        other.halfspaces.iter().all(|h| {
            if !self.vertices.iter().all(|v| h.contains_closure(v)) {
                return false;
            }
            if !h.strict {
                return true;
            }
            self.vertices.iter().all(|v| h.strictly_inside(v)) || own.contains(&h.normalized())
        })
    }

    pub fn negate(&self) -> ConvexPolygon {
        let negated: Vec<Vector> = self.vertices.iter().map(|v| -v).collect();
        ConvexPolygon {
            halfspaces: self.halfspaces.iter().map(Halfspace::negated).collect(),
            vertices: convex_hull(&negated),
        }
    }

    pub fn translate(&self, by: &Vector) -> ConvexPolygon {
        ConvexPolygon {
            halfspaces: self.halfspaces.iter().map(|h| h.translated(by)).collect(),
            vertices: self.vertices.iter().map(|v| v + by).collect(),
        }
    }

    pub fn intersect(&self, other: &ConvexPolygon) -> Result<Option<ConvexPolygon>> {
        let mut hs = self.halfspaces.clone();
        hs.extend(other.halfspaces.iter().cloned());
        ConvexPolygon::from_halfspaces(hs)
    }

    /// Minkowski sum by merging edge sequences in angular order.
    ///
    /// The result is closed: strictness of the summands is dropped.
    pub fn minkowski_sum(&self, other: &ConvexPolygon) -> ConvexPolygon {
        if self.vertices.len() == 1 {
            return ConvexPolygon::closed_from_hull(
                other.vertices.iter().map(|v| v + &self.vertices[0]).collect(),
            );
        }
        if other.vertices.len() == 1 {
            return ConvexPolygon::closed_from_hull(
                self.vertices.iter().map(|v| v + &other.vertices[0]).collect(),
            );
        }
        let p = bottom_first(&self.vertices);
        let q = bottom_first(&other.vertices);
        let (n, m) = (p.len(), q.len());
        let at = |poly: &Vec<Vector>, i: usize| poly[i % poly.len()].clone();
        let mut out = Vec::with_capacity(n + m);
        let (mut i, mut j) = (0usize, 0usize);
        while i < n || j < m {
            out.push(&at(&p, i) + &at(&q, j));
            let ep = &at(&p, i + 1) - &at(&p, i);
            let eq = &at(&q, j + 1) - &at(&q, j);
            let c = cross_vec(&ep, &eq);
            let advance_p = !c.is_negative() && i < n;
            let advance_q = !c.is_positive() && j < m;
            if advance_p {
                i += 1;
            }
            if advance_q {
                j += 1;
            }
            if !advance_p && !advance_q {
                // one side exhausted; walk the other
                if i < n {
                    i += 1;
                } else {
                    j += 1;
                }
            }
        }
        ConvexPolygon::closed_from_hull(out)
    }

    fn closed_from_hull(points: Vec<Vector>) -> ConvexPolygon {
        let vertices = convex_hull(&points);
        let halfspaces = halfspaces_of_hull(&vertices);
        ConvexPolygon { halfspaces, vertices }
    }

    /// The closure of this piece.
    pub fn closure(&self) -> ConvexPolygon {
        ConvexPolygon::closed_from_hull(self.vertices.clone())
    }

    /// Area of the closure.
    pub fn area(&self) -> Rational {
        polygon_area(&self.vertices)
    }

    /// Integer points of the piece (strictness respected).
    pub fn integer_points(&self) -> Vec<Vector> {
        let (lo, hi) = self.bounding_box();
        let mut out = Vec::new();
        let mut x = ceil(&lo[0]);
        let x_end = floor(&hi[0]);
        while x <= x_end {
            let mut y = ceil(&lo[1]);
            let y_end = floor(&hi[1]);
            while y <= y_end {
                let p = Vector::new(vec![
                    Rational::from_integer(x.clone()),
                    Rational::from_integer(y.clone()),
                ]);
                if self.contains(&p) {
                    out.push(p);
                }
                y += BigInt::from(1);
            }
            x += BigInt::from(1);
        }
        out
    }

    pub fn bounding_box(&self) -> (Vector, Vector) {
        let xs = self.vertices.iter().map(|v| &v[0]);
        let ys = self.vertices.iter().map(|v| &v[1]);
        let lo = Vector::new(vec![xs.clone().min().unwrap().clone(), ys.clone().min().unwrap().clone()]);
        let hi = Vector::new(vec![xs.max().unwrap().clone(), ys.max().unwrap().clone()]);
        (lo, hi)
    }

    /// Key used for equality and canonical ordering: closure vertices plus
    /// the normalized strict halfspaces.
    fn canonical_key(&self) -> (Vec<Vector>, Vec<(Vector, Rational)>) {
        let mut strict: Vec<(Vector, Rational)> = self
            .halfspaces
            .iter()
            .filter(|h| h.strict)
            .map(|h| {
                let n = h.normalized();
                (Vector::new(n.normal.to_vec()), n.offset)
            })
            .collect();
        strict.sort();
        strict.dedup();
        (self.vertices.clone(), strict)
    }
}

impl PartialEq for ConvexPolygon {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_key() == other.canonical_key()
    }
}

impl Eq for ConvexPolygon {}

impl PartialOrd for ConvexPolygon {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ConvexPolygon {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl fmt::Debug for ConvexPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polygon[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        if !self.is_closed() {
            write!(f, " | open edges")?;
        }
        write!(f, "]")
    }
}

fn line_intersection(a: &Halfspace, b: &Halfspace) -> Option<Vector> {
    let det = &a.normal[0] * &b.normal[1] - &a.normal[1] * &b.normal[0];
    if det.is_zero() {
        return None;
    }
    let x = (&a.offset * &b.normal[1] - &a.normal[1] * &b.offset) / &det;
    let y = (&a.normal[0] * &b.offset - &a.offset * &b.normal[0]) / &det;
    Some(Vector::new(vec![x, y]))
}

/// All normals parallel: project onto the common direction and check that
/// the resulting interval is nonempty.
fn parallel_family_feasible(hs: &[Halfspace]) -> bool {
    let Some(first) = hs.first() else {
        return true;
    };
    let axis = &first.normal;
    let use_x = !axis[0].is_zero();
    let mut upper: Option<(Rational, bool)> = None;
    let mut lower: Option<(Rational, bool)> = None;
    for h in hs {
        // h.normal = c * axis
        let c = if use_x { &h.normal[0] / &axis[0] } else { &h.normal[1] / &axis[1] };
        let bound = &h.offset / &c;
        if c.is_positive() {
            let tighter = match &upper {
                None => true,
                Some((u, s)) => bound < *u || (bound == *u && h.strict && !s),
            };
            if tighter {
                upper = Some((bound, h.strict));
            }
        } else {
            let tighter = match &lower {
                None => true,
                Some((l, s)) => bound > *l || (bound == *l && h.strict && !s),
            };
            if tighter {
                lower = Some((bound, h.strict));
            }
        }
    }
    match (lower, upper) {
        (Some((l, ls)), Some((u, us))) => l < u || (l == u && !ls && !us),
        _ => true,
    }
}

fn halfspaces_of_hull(vertices: &[Vector]) -> Vec<Halfspace> {
    match vertices.len() {
        0 => Vec::new(),
        1 => {
            let p = &vertices[0];
            let one = Rational::from_integer(1.into());
            let zero = Rational::zero();
            vec![
                Halfspace::new(one.clone(), zero.clone(), p[0].clone()),
                Halfspace::new(-&one, zero.clone(), -&p[0]),
                Halfspace::new(zero.clone(), one.clone(), p[1].clone()),
                Halfspace::new(zero, -&one, -&p[1]),
            ]
        }
        2 => {
            let (p, q) = (&vertices[0], &vertices[1]);
            let d = q - p;
            let n = [-&d[1], d[0].clone()];
            let along = |v: &Vector| &d[0] * &v[0] + &d[1] * &v[1];
            let across = &n[0] * &p[0] + &n[1] * &p[1];
            vec![
                Halfspace::new(n[0].clone(), n[1].clone(), across.clone()),
                Halfspace::new(-&n[0], -&n[1], -across),
                Halfspace::new(d[0].clone(), d[1].clone(), along(q)),
                Halfspace::new(-&d[0], -&d[1], -along(p)),
            ]
        }
        n => (0..n)
            .map(|i| {
                let p = &vertices[i];
                let q = &vertices[(i + 1) % n];
                let normal = [&q[1] - &p[1], &p[0] - &q[0]];
                let offset = &normal[0] * &p[0] + &normal[1] * &p[1];
                Halfspace::new(normal[0].clone(), normal[1].clone(), offset)
            })
            .collect(),
    }
}

/// Rotates a canonical vertex list to start at the lowest (y, x) vertex.
fn bottom_first(vertices: &[Vector]) -> Vec<Vector> {
    let start = (0..vertices.len())
        .min_by(|&a, &b| {
            (&vertices[a][1], &vertices[a][0]).cmp(&(&vertices[b][1], &vertices[b][0]))
        })
        .unwrap_or(0);
    vertices[start..].iter().chain(&vertices[..start]).cloned().collect()
}

/// Shoelace area of a convex vertex list (zero for degenerate lists).
pub fn polygon_area(vertices: &[Vector]) -> Rational {
    if vertices.len() < 3 {
        return Rational::zero();
    }
    let n = vertices.len();
    let twice: Rational = (0..n)
        .map(|i| {
            let p = &vertices[i];
            let q = &vertices[(i + 1) % n];
            &p[0] * &q[1] - &q[0] * &p[1]
        })
        .sum();
    (twice / Rational::from_integer(2.into())).abs()
}

/// Vertical extent of a full-dimensional convex piece at abscissa `x`.
fn vertical_extent(vertices: &[Vector], x: &Rational) -> Option<(Rational, Rational)> {
    let n = vertices.len();
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for i in 0..n {
        let p = &vertices[i];
        let q = &vertices[(i + 1) % n];
        let (x0, x1) = if p[0] <= q[0] { (&p[0], &q[0]) } else { (&q[0], &p[0]) };
        if x < x0 || x > x1 || p[0] == q[0] {
            continue;
        }
        let y = &p[1] + (x - &p[0]) * (&q[1] - &p[1]) / (&q[0] - &p[0]);
        if lo.as_ref().is_none_or(|l| y < *l) {
            lo = Some(y.clone());
        }
        if hi.as_ref().is_none_or(|h| y > *h) {
            hi = Some(y);
        }
    }
    lo.zip(hi)
}

fn segment_crossing_x(a: &Vector, b: &Vector, c: &Vector, d: &Vector) -> Option<Rational> {
    let r = b - a;
    let s = d - c;
    let denom = cross_vec(&r, &s);
    if denom.is_zero() {
        return None;
    }
    let ca = c - a;
    let t = cross_vec(&ca, &s) / &denom;
    let u = cross_vec(&ca, &r) / &denom;
    let zero = Rational::zero();
    let one = Rational::from_integer(1.into());
    if t < zero || t > one || u < zero || u > one {
        return None;
    }
    Some(&a[0] + t * &r[0])
}

/// Exact area of a union of convex pieces (degenerate pieces contribute
/// nothing), computed slab by slab between all critical abscissae.
pub fn union_area(pieces: &[&ConvexPolygon]) -> Rational {
    let full: Vec<&ConvexPolygon> = pieces.iter().copied().filter(|p| p.dimension() == 2).collect();
    if full.is_empty() {
        return Rational::zero();
    }
    let mut xs: Vec<Rational> = full
        .iter()
        .flat_map(|p| p.vertices.iter().map(|v| v[0].clone()))
        .collect();
    for (i, p) in full.iter().enumerate() {
        for q in &full[i + 1..] {
            let pn = p.vertices.len();
            let qn = q.vertices.len();
            for a in 0..pn {
                for b in 0..qn {
                    if let Some(x) = segment_crossing_x(
                        &p.vertices[a],
                        &p.vertices[(a + 1) % pn],
                        &q.vertices[b],
                        &q.vertices[(b + 1) % qn],
                    ) {
                        xs.push(x);
                    }
                }
            }
        }
    }
    xs.sort();
    xs.dedup();
    let two = Rational::from_integer(2.into());
    let mut total = Rational::zero();
    for w in xs.windows(2) {
        let mid = (&w[0] + &w[1]) / &two;
        let mut intervals: Vec<(Rational, Rational)> =
            full.iter().filter_map(|p| vertical_extent(&p.vertices, &mid)).collect();
        intervals.sort();
        let mut covered = Rational::zero();
        let mut current: Option<(Rational, Rational)> = None;
        for (lo, hi) in intervals {
            match &mut current {
                Some((_, chi)) if lo <= *chi => {
                    if hi > *chi {
                        *chi = hi;
                    }
                }
                _ => {
                    if let Some((clo, chi)) = current.take() {
                        covered += chi - clo;
                    }
                    current = Some((lo, hi));
                }
            }
        }
        if let Some((clo, chi)) = current {
            covered += chi - clo;
        }
        total += (&w[1] - &w[0]) * covered;
    }
    total
}

/// `Some(hull)` when the union of the closed pieces is itself convex.
pub fn convex_union(pieces: &[&ConvexPolygon]) -> Option<ConvexPolygon> {
    if pieces.is_empty() || pieces.iter().any(|p| !p.is_closed()) {
        return None;
    }
    let all: Vec<Vector> = pieces.iter().flat_map(|p| p.vertices.iter().cloned()).collect();
    let hull = ConvexPolygon::closed_from_hull(all);
    match hull.dimension() {
        2 => (union_area(pieces) == hull.area()).then_some(hull),
        1 => {
            // collinear pieces: the union is a segment iff the projected
            // intervals chain together without gaps
            let dir = &hull.vertices[1] - &hull.vertices[0];
            let proj = |v: &Vector| &dir[0] * &v[0] + &dir[1] * &v[1];
            let mut intervals: Vec<(Rational, Rational)> = pieces
                .iter()
                .map(|p| {
                    let vals: Vec<Rational> = p.vertices.iter().map(proj).collect();
                    (vals.iter().min().unwrap().clone(), vals.iter().max().unwrap().clone())
                })
                .collect();
            intervals.sort();
            let mut reach = intervals[0].1.clone();
            for (lo, hi) in &intervals[1..] {
                if *lo > reach {
                    return None;
                }
                if *hi > reach {
                    reach = hi.clone();
                }
            }
            Some(hull)
        }
        _ => Some(hull),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, ratio};

    fn v(x: i64, y: i64) -> Vector {
        Vector::from_ints(&[x, y])
    }

    fn poly(points: &[(i64, i64)]) -> ConvexPolygon {
        let pts: Vec<Vector> = points.iter().map(|&(x, y)| v(x, y)).collect();
        ConvexPolygon::from_vertices(&pts).unwrap()
    }

    fn hull_oracle(a: &ConvexPolygon, b: &ConvexPolygon) -> Vec<Vector> {
        let sums: Vec<Vector> = a
            .vertices()
            .iter()
            .flat_map(|p| b.vertices().iter().map(move |q| p + q))
            .collect();
        convex_hull(&sums)
    }

    #[test]
    fn hull_is_ccw_from_lexicographic_minimum() {
        let h = convex_hull(&[v(2, 2), v(0, 0), v(2, 0), v(0, 2), v(1, 1), v(1, 0)]);
        assert_eq!(h, vec![v(0, 0), v(2, 0), v(2, 2), v(0, 2)]);
        assert_eq!(convex_hull(&[v(0, 0), v(1, 1), v(2, 2)]), vec![v(0, 0), v(2, 2)]);
        assert_eq!(convex_hull(&[v(3, 1), v(3, 1)]), vec![v(3, 1)]);
    }

    #[test]
    fn triangle_plus_box_is_pentagon() {
        let tri = poly(&[(0, 0), (1, 0), (0, 1)]);
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let sum = tri.minkowski_sum(&sq);
        assert_eq!(sum.vertices(), &[v(0, 0), v(2, 0), v(2, 1), v(1, 2), v(0, 2)]);
    }

    #[test]
    fn edge_merge_matches_hull_oracle_on_degenerate_pieces() {
        let seg = poly(&[(0, 0), (0, 2)]);
        let seg2 = poly(&[(0, 0), (2, 0)]);
        let tri = poly(&[(0, 0), (3, 1), (1, 2)]);
        let pt = poly(&[(5, -1)]);
        for a in [&seg, &seg2, &tri, &pt] {
            for b in [&seg, &seg2, &tri, &pt] {
                assert_eq!(a.minkowski_sum(b).vertices(), hull_oracle(a, b).as_slice());
            }
        }
        assert_eq!(seg.minkowski_sum(&seg2).vertices(), &[v(0, 0), v(2, 0), v(2, 2), v(0, 2)]);
    }

    #[test]
    fn halfspaces_detect_empty_and_unbounded() {
        let one = rat(1);
        let zero = rat(0);
        let y_le_0 = Halfspace::new(zero.clone(), one.clone(), zero.clone());
        let y_ge_1 = Halfspace::new(zero.clone(), -&one, -&one);
        assert!(ConvexPolygon::from_halfspaces(vec![y_le_0.clone(), y_ge_1]).unwrap().is_none());
        assert_eq!(
            ConvexPolygon::from_halfspaces(vec![y_le_0.clone()]).err(),
            Some(Error::Unbounded)
        );
        let x_ge_0 = Halfspace::new(-&one, zero.clone(), zero.clone());
        let y_ge_0 = Halfspace::new(zero.clone(), -&one, zero.clone());
        assert_eq!(
            ConvexPolygon::from_halfspaces(vec![x_ge_0, y_ge_0]).err(),
            Some(Error::Unbounded)
        );
    }

    #[test]
    fn strict_halfspace_excludes_boundary_but_keeps_closure() {
        let zero = rat(0);
        let one = rat(1);
        // 0 <= x <= 2, 1 < y <= 2
        let hs = vec![
            Halfspace::new(-&one, zero.clone(), zero.clone()),
            Halfspace::new(one.clone(), zero.clone(), rat(2)),
            Halfspace::strict(zero.clone(), -&one, -&one),
            Halfspace::new(zero.clone(), one.clone(), rat(2)),
        ];
        let p = ConvexPolygon::from_halfspaces(hs).unwrap().unwrap();
        assert!(!p.contains(&v(1, 1)));
        assert!(p.contains(&v(1, 2)));
        assert!(p.contains(&Vector::new(vec![rat(1), ratio(3, 2)])));
        assert!(p.contains_closure(&v(1, 1)));
        assert_eq!(p.integer_points(), vec![v(0, 2), v(1, 2), v(2, 2)]);
        // strict set with empty interior is empty
        let flat = vec![
            Halfspace::new(-&one, zero.clone(), zero.clone()),
            Halfspace::new(one.clone(), zero.clone(), rat(2)),
            Halfspace::strict(zero.clone(), -&one, -&one),
            Halfspace::new(zero.clone(), one.clone(), one.clone()),
        ];
        assert!(ConvexPolygon::from_halfspaces(flat).unwrap().is_none());
    }

    #[test]
    fn union_area_counts_overlap_once() {
        let a = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let b = poly(&[(1, 1), (3, 1), (3, 3), (1, 3)]);
        assert_eq!(union_area(&[&a, &b]), rat(7));
        let left = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let right = poly(&[(1, 0), (2, 0), (2, 1), (1, 1)]);
        let merged = convex_union(&[&left, &right]).unwrap();
        assert_eq!(merged.vertices(), &[v(0, 0), v(2, 0), v(2, 1), v(0, 1)]);
        assert!(convex_union(&[&a, &b]).is_none());
    }

    #[test]
    fn collinear_segments_merge_only_when_touching() {
        let a = poly(&[(0, 0), (1, 0)]);
        let b = poly(&[(1, 0), (3, 0)]);
        let c = poly(&[(4, 0), (5, 0)]);
        assert_eq!(convex_union(&[&a, &b]).unwrap().vertices(), &[v(0, 0), v(3, 0)]);
        assert!(convex_union(&[&a, &c]).is_none());
    }

    #[test]
    fn negation_keeps_canonical_order() {
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(sq.negate().vertices(), &[v(-1, -1), v(0, -1), v(0, 0), v(-1, 0)]);
        assert_eq!(sq.negate().negate(), sq);
    }
}
