//! Capacity regions and their algebra.
//!
//! Two representations are supported: finite point sets in any dimension,
//! and (for two commodities) finite unions of convex polygons. Polygonal
//! results are kept in a canonical form so that regions compare by value.

mod polygon;

pub use polygon::{convex_hull, polygon_area, union_area, ConvexPolygon, Halfspace};

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::num::{Rational, Vector};

/// Which representation a region uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionKind {
    Points,
    Polygons,
}

/// A capacity region.
#[derive(Clone, PartialEq, Eq)]
pub enum Region {
    /// Finite, duplicate-free set of vectors of a fixed dimension.
    Points { dim: usize, points: BTreeSet<Vector> },
    /// Union of convex pieces in the plane; empty list is the empty set.
    Polygons(Vec<ConvexPolygon>),
}

impl fmt::Debug for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Points { points, .. } => f.debug_set().entries(points.iter()).finish(),
            Region::Polygons(pieces) => f.debug_list().entries(pieces.iter()).finish(),
        }
    }
}

impl Region {
    pub fn points<I: IntoIterator<Item = Vector>>(dim: usize, points: I) -> Result<Region> {
        let points: BTreeSet<Vector> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::Dimension {
                expected: dim,
                found: p.dim(),
                context: Some(format!("point {p}")),
            });
        }
        Ok(Region::Points { dim, points })
    }

    /// Convenience constructor from integer coordinates.
    pub fn int_points(dim: usize, points: &[&[i64]]) -> Result<Region> {
        Region::points(dim, points.iter().map(|p| Vector::from_ints(p)))
    }

    /// Canonicalized union of convex pieces.
    pub fn polygons(pieces: Vec<ConvexPolygon>) -> Region {
        Region::Polygons(canonicalize(pieces))
    }

    /// Union of pieces as given, without merging. Used for capacities read
    /// from input so the stored halfspaces survive untouched.
    pub fn polygons_raw(pieces: Vec<ConvexPolygon>) -> Region {
        Region::Polygons(pieces)
    }

    pub fn polygon(piece: ConvexPolygon) -> Region {
        Region::Polygons(vec![piece])
    }

    /// `{0}` in the same representation as `self`.
    pub fn zero_like(&self) -> Region {
        Region::zero(self.kind(), self.dim())
    }

    pub fn zero(kind: RegionKind, dim: usize) -> Region {
        match kind {
            RegionKind::Points => Region::Points {
                dim,
                points: std::iter::once(Vector::zero(dim)).collect(),
            },
            RegionKind::Polygons => Region::Polygons(vec![
                ConvexPolygon::from_vertices(&[Vector::zero(2)]).expect("origin"),
            ]),
        }
    }

    pub fn kind(&self) -> RegionKind {
        match self {
            Region::Points { .. } => RegionKind::Points,
            Region::Polygons(_) => RegionKind::Polygons,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Region::Points { dim, .. } => *dim,
            Region::Polygons(_) => 2,
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            Region::Points { points, .. } => points.is_empty(),
            Region::Polygons(pieces) => pieces.is_empty(),
        }
    }

    pub fn point_set(&self) -> Option<&BTreeSet<Vector>> {
        match self {
            Region::Points { points, .. } => Some(points),
            Region::Polygons(_) => None,
        }
    }

    pub fn pieces(&self) -> &[ConvexPolygon] {
        match self {
            Region::Points { .. } => &[],
            Region::Polygons(pieces) => pieces,
        }
    }

    fn check_dim(&self, x: &Vector) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                found: x.dim(),
                context: None,
            });
        }
        Ok(())
    }

    pub fn contains(&self, x: &Vector) -> Result<bool> {
        self.check_dim(x)?;
        Ok(match self {
            Region::Points { points, .. } => points.contains(x),
            Region::Polygons(pieces) => pieces.iter().any(|p| p.contains(x)),
        })
    }

    pub fn negate(&self) -> Region {
        match self {
            Region::Points { dim, points } => Region::Points {
                dim: *dim,
                points: points.iter().map(|p| -p).collect(),
            },
            Region::Polygons(pieces) => Region::Polygons(pieces.iter().map(ConvexPolygon::negate).collect()),
        }
    }

    /// `{x + by : x ∈ self}`.
    pub fn translate(&self, by: &Vector) -> Result<Region> {
        self.check_dim(by)?;
        Ok(match self {
            Region::Points { dim, points } => Region::Points {
                dim: *dim,
                points: points.iter().map(|p| p + by).collect(),
            },
            Region::Polygons(pieces) => Region::Polygons(pieces.iter().map(|p| p.translate(by)).collect()),
        })
    }

    fn check_same_dim(&self, other: &Region) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                found: other.dim(),
                context: None,
            });
        }
        Ok(())
    }

    /// Minkowski sum. Polygonal sums are closed (strict edges are relaxed).
    pub fn minkowski_sum(&self, other: &Region) -> Result<Region> {
        self.check_same_dim(other)?;
        match (self, other) {
            (Region::Points { dim, points: a }, Region::Points { points: b, .. }) => {
                let points = a.iter().flat_map(|p| b.iter().map(move |q| p + q)).collect();
                Ok(Region::Points { dim: *dim, points })
            }
            (Region::Polygons(a), Region::Polygons(b)) => {
                let pieces = a
                    .iter()
                    .flat_map(|p| b.iter().map(move |q| p.minkowski_sum(q)))
                    .collect();
                Ok(Region::polygons(pieces))
            }
            _ => Err(Error::MixedVariants),
        }
    }

    pub fn intersect(&self, other: &Region) -> Result<Region> {
        self.check_same_dim(other)?;
        match (self, other) {
            (Region::Points { dim, points: a }, Region::Points { points: b, .. }) => Ok(Region::Points {
                dim: *dim,
                points: a.intersection(b).cloned().collect(),
            }),
            (Region::Polygons(a), Region::Polygons(b)) => {
                let mut pieces = Vec::new();
                for p in a {
                    for q in b {
                        if let Some(r) = p.intersect(q)? {
                            pieces.push(r);
                        }
                    }
                }
                Ok(Region::polygons(pieces))
            }
            (Region::Points { dim, points }, poly @ Region::Polygons(_))
            | (poly @ Region::Polygons(_), Region::Points { dim, points }) => {
                let mut kept = BTreeSet::new();
                for p in points {
                    if poly.contains(p)? {
                        kept.insert(p.clone());
                    }
                }
                Ok(Region::Points { dim: *dim, points: kept })
            }
        }
    }

    /// Integer vectors in the region, in lexicographic order.
    pub fn integer_points(&self) -> Result<BTreeSet<Vector>> {
        Ok(match self {
            Region::Points { points, .. } => points.iter().filter(|p| p.is_integral()).cloned().collect(),
            Region::Polygons(pieces) => pieces.iter().flat_map(ConvexPolygon::integer_points).collect(),
        })
    }

    /// The integer points as a point-set region.
    pub fn discretize(&self) -> Result<Region> {
        Ok(Region::Points {
            dim: self.dim(),
            points: self.integer_points()?,
        })
    }

    /// Downward closure within the nonnegative orthant.
    ///
    /// Point sets are checked against every lattice vector `0 <= f' <= f`;
    /// polygonal regions are checked only on their integer grid, which is a
    /// necessary condition rather than a certificate.
    pub fn is_reducible(&self) -> bool {
        let members: Vec<Vector> = match self {
            Region::Points { points, .. } => points.iter().cloned().collect(),
            Region::Polygons(_) => match self.integer_points() {
                Ok(pts) => pts.into_iter().collect(),
                Err(_) => return false,
            },
        };
        for f in members.iter().filter(|f| f.is_nonnegative()) {
            let upper: Vec<BigInt> = f.entries().iter().map(crate::num::floor).collect();
            let mut below = vec![BigInt::zero(); upper.len()];
            loop {
                let candidate = Vector::new(below.iter().cloned().map(Rational::from_integer).collect());
                if !self.contains(&candidate).unwrap_or(false) {
                    return false;
                }
                // odometer over the lattice box
                let mut i = 0;
                loop {
                    if i == below.len() {
                        break;
                    }
                    if below[i] < upper[i] {
                        below[i] += 1;
                        break;
                    }
                    below[i] = BigInt::zero();
                    i += 1;
                }
                if i == below.len() {
                    break;
                }
            }
            // non-integral members have fractional parts the lattice walk cannot see
            if !f.is_integral() && matches!(self, Region::Points { .. }) {
                return false;
            }
        }
        true
    }

    /// Axis-aligned bounding box, or `None` for the empty region.
    pub fn bounding_box(&self) -> Option<(Vector, Vector)> {
        let corners: Vec<Vector> = match self {
            Region::Points { points, .. } => points.iter().cloned().collect(),
            Region::Polygons(pieces) => pieces.iter().flat_map(|p| p.vertices().iter().cloned()).collect(),
        };
        let first = corners.first()?;
        let mut lo = first.clone().into_entries();
        let mut hi = lo.clone();
        for c in &corners[1..] {
            for (i, v) in c.entries().iter().enumerate() {
                if *v < lo[i] {
                    lo[i] = v.clone();
                }
                if *v > hi[i] {
                    hi[i] = v.clone();
                }
            }
        }
        Some((Vector::new(lo), Vector::new(hi)))
    }

    /// Canonical form: the same region with pieces merged and sorted.
    pub fn canonical(&self) -> Region {
        match self {
            Region::Points { .. } => self.clone(),
            Region::Polygons(pieces) => Region::Polygons(canonicalize(pieces.clone())),
        }
    }

    /// Canonical vertex lists, one per piece (points listed one per piece).
    pub fn vertex_lists(&self) -> Vec<Vec<Vector>> {
        match self.canonical() {
            Region::Points { points, .. } => points.into_iter().map(|p| vec![p]).collect(),
            Region::Polygons(pieces) => pieces.iter().map(|p| p.vertices().to_vec()).collect(),
        }
    }

    /// Set inclusion. Exact for point sets; for polygons each piece of
    /// `self` must be covered by the union of `other`'s pieces (checked by
    /// exact area for full-dimensional pieces).
    pub fn is_subset_of(&self, other: &Region) -> Result<bool> {
        self.check_same_dim(other)?;
        match (self, other) {
            (Region::Points { points, .. }, _) => {
                for p in points {
                    if !other.contains(p)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            (Region::Polygons(_), Region::Points { .. }) => Ok(self.is_empty()),
            (Region::Polygons(mine), Region::Polygons(theirs)) => {
                for piece in mine {
                    if theirs.iter().any(|t| piece.is_subset_of(t)) {
                        continue;
                    }
                    if !piece.vertices().iter().all(|v| theirs.iter().any(|t| t.contains_closure(v))) {
                        return Ok(false);
                    }
                    if piece.dimension() < 2 {
                        return Ok(false);
                    }
                    let mut clipped = Vec::new();
                    for t in theirs {
                        if let Some(c) = piece.closure().intersect(&t.closure())? {
                            clipped.push(c);
                        }
                    }
                    let refs: Vec<&ConvexPolygon> = clipped.iter().collect();
                    if union_area(&refs) != piece.area() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }
}

/// Merges and orders pieces so that equal unions get equal piece lists
/// in the common cases (single convex union, disjoint pieces).
fn canonicalize(pieces: Vec<ConvexPolygon>) -> Vec<ConvexPolygon> {
    let mut pieces = drop_contained(pieces);
    if pieces.len() > 1 {
        let refs: Vec<&ConvexPolygon> = pieces.iter().collect();
        if let Some(hull) = polygon::convex_union(&refs) {
            return vec![hull];
        }
    }
    'merge: loop {
        for i in 0..pieces.len() {
            for j in i + 1..pieces.len() {
                if let Some(hull) = polygon::convex_union(&[&pieces[i], &pieces[j]]) {
                    pieces.swap_remove(j);
                    pieces[i] = hull;
                    pieces = drop_contained(pieces);
                    continue 'merge;
                }
            }
        }
        break;
    }
    pieces.sort();
    pieces
}

fn drop_contained(mut pieces: Vec<ConvexPolygon>) -> Vec<ConvexPolygon> {
    pieces.sort();
    pieces.dedup();
    let mut keep = vec![true; pieces.len()];
    for i in 0..pieces.len() {
        for j in 0..pieces.len() {
            if i != j && keep[j] && pieces[i].is_subset_of(&pieces[j]) {
                keep[i] = false;
                break;
            }
        }
    }
    pieces
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect()
}
