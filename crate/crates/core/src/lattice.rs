//! Exact geometry on the integer lattice ℤ².
//!
//! Areas are carried as *twice-areas*: the shoelace sum of a lattice polygon is
//! always an integer, so nothing here ever needs rational or floating-point
//! arithmetic. Every intermediate product is computed in `i128` and narrowed
//! back with a checked conversion, so overflow surfaces as
//! [`GeometryError::Overflow`] instead of wrapping.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::radical::exact_sqrt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices {index} and {next} coincide at {point}")]
    RepeatedVertex {
        index: usize,
        next: usize,
        point: LatticePoint,
    },
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("degenerate polygon: zero area")]
    Degenerate,
}

/// A point of ℤ². Serialized as a two-element array `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// Image of this point under a lattice symmetry fixing the origin.
    pub fn apply(self, sym: Symmetry) -> Result<Self, GeometryError> {
        let (mut x, mut y) = if sym.swap {
            (self.y, self.x)
        } else {
            (self.x, self.y)
        };
        if sym.negate_x {
            x = x.checked_neg().ok_or(GeometryError::Overflow("symmetry"))?;
        }
        if sym.negate_y {
            y = y.checked_neg().ok_or(GeometryError::Overflow("symmetry"))?;
        }
        Ok(Self { x, y })
    }

    pub fn translate(self, dx: i64, dy: i64) -> Result<Self, GeometryError> {
        Ok(Self {
            x: self
                .x
                .checked_add(dx)
                .ok_or(GeometryError::Overflow("translation"))?,
            y: self
                .y
                .checked_add(dy)
                .ok_or(GeometryError::Overflow("translation"))?,
        })
    }

    /// Squared Euclidean distance to `other`, always an integer.
    pub fn squared_distance(self, other: Self) -> Result<u64, GeometryError> {
        let dx = other.x as i128 - self.x as i128;
        let dy = other.y as i128 - self.y as i128;
        let sq = dx
            .checked_mul(dx)
            .and_then(|a| dy.checked_mul(dy).and_then(|b| a.checked_add(b)))
            .ok_or(GeometryError::Overflow("squared distance"))?;
        u64::try_from(sq).map_err(|_| GeometryError::Overflow("squared distance"))
    }
}

impl From<[i64; 2]> for LatticePoint {
    fn from([x, y]: [i64; 2]) -> Self {
        Self { x, y }
    }
}

impl From<LatticePoint> for [i64; 2] {
    fn from(p: LatticePoint) -> Self {
        [p.x, p.y]
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// One of the eight linear isometries of ℤ² (the dihedral group of the
/// square). Applied as: optionally swap coordinates, then optionally negate
/// each coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Symmetry {
    pub swap: bool,
    pub negate_x: bool,
    pub negate_y: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry {
        swap: false,
        negate_x: false,
        negate_y: false,
    };

    pub fn all() -> [Symmetry; 8] {
        let mut out = [Self::IDENTITY; 8];
        for (i, s) in out.iter_mut().enumerate() {
            s.swap = i & 1 != 0;
            s.negate_x = i & 2 != 0;
            s.negate_y = i & 4 != 0;
        }
        out
    }
}

/// How much of the simplicity precondition was actually checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Simplicity {
    /// Non-collinear triangle or axis-aligned rectangle.
    Verified,
    /// Any other polygon: simplicity is the caller's obligation.
    Assumed,
}

/// A closed polygon with lattice vertices, listed in boundary order
/// (clockwise or counter-clockwise).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<LatticePoint>", into = "Vec<LatticePoint>")]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

impl TryFrom<Vec<LatticePoint>> for LatticePolygon {
    type Error = GeometryError;

    fn try_from(vertices: Vec<LatticePoint>) -> Result<Self, Self::Error> {
        Self::new(vertices)
    }
}

impl From<LatticePolygon> for Vec<LatticePoint> {
    fn from(p: LatticePolygon) -> Self {
        p.vertices
    }
}

impl LatticePolygon {
    /// Builds a polygon, rejecting fewer than three vertices and repeated
    /// consecutive vertices (including the closing edge).
    pub fn new(vertices: Vec<LatticePoint>) -> Result<Self, GeometryError> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeometryError::TooFewVertices(n));
        }
        for i in 0..n {
            let next = (i + 1) % n;
            if vertices[i] == vertices[next] {
                return Err(GeometryError::RepeatedVertex {
                    index: i,
                    next,
                    point: vertices[i],
                });
            }
        }
        Ok(Self { vertices })
    }

    pub fn triangle(
        a: LatticePoint,
        b: LatticePoint,
        c: LatticePoint,
    ) -> Result<Self, GeometryError> {
        Self::new(vec![a, b, c])
    }

    /// Builds a polygon from `(x, y)` pairs.
    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self, GeometryError> {
        Self::new(
            coords
                .iter()
                .map(|&(x, y)| LatticePoint::new(x, y))
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Directed edges `(v[i], v[i+1])`, wrapping around to close the polygon.
    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Twice the enclosed area, via the shoelace formula. Orientation
    /// independent. Zero for collinear triangles.
    pub fn twice_area(&self) -> Result<u64, GeometryError> {
        let mut acc: i128 = 0;
        for (p, q) in self.edges() {
            let term = (p.x as i128 * q.y as i128)
                .checked_sub(q.x as i128 * p.y as i128)
                .ok_or(GeometryError::Overflow("twice area"))?;
            acc = acc
                .checked_add(term)
                .ok_or(GeometryError::Overflow("twice area"))?;
        }
        u64::try_from(acc.unsigned_abs()).map_err(|_| GeometryError::Overflow("twice area"))
    }

    /// Number of lattice points on the boundary: Σ gcd(|Δx|, |Δy|) over edges.
    pub fn boundary_point_count(&self) -> Result<u64, GeometryError> {
        if self.twice_area()? == 0 {
            return Err(GeometryError::Degenerate);
        }
        let mut total: u64 = 0;
        for (p, q) in self.edges() {
            let dx = (q.x as i128 - p.x as i128).unsigned_abs();
            let dy = (q.y as i128 - p.y as i128).unsigned_abs();
            let g = u64::try_from(dx.gcd(&dy))
                .map_err(|_| GeometryError::Overflow("boundary count"))?;
            total = total
                .checked_add(g)
                .ok_or(GeometryError::Overflow("boundary count"))?;
        }
        Ok(total)
    }

    /// Number of strictly interior lattice points, from Pick's theorem:
    /// `2A = 2I + B - 2`.
    pub fn interior_point_count(&self) -> Result<u64, GeometryError> {
        let twice_area = self.twice_area()?;
        let boundary = self.boundary_point_count()?;
        // Pick guarantees twice_area + 2 - boundary is even and non-negative
        // for simple polygons; a violation means the polygon was not simple.
        let numerator = (twice_area as u128 + 2)
            .checked_sub(boundary as u128)
            .ok_or(GeometryError::Degenerate)?;
        Ok((numerator / 2) as u64)
    }

    /// Per-edge squared lengths `Δx² + Δy²`, in vertex order.
    pub fn squared_side_lengths(&self) -> Result<Vec<u64>, GeometryError> {
        self.edges().map(|(p, q)| p.squared_distance(q)).collect()
    }

    /// Integer side lengths in edge order, or `None` if some side is
    /// irrational.
    pub fn integer_side_lengths(&self) -> Result<Option<Vec<u64>>, GeometryError> {
        Ok(self
            .squared_side_lengths()?
            .into_iter()
            .map(exact_sqrt)
            .collect::<Option<Vec<_>>>())
    }

    /// Checks the simplicity precondition where it can be checked exactly:
    /// triangles must be non-collinear, four-gons are accepted as verified
    /// when they are axis-aligned rectangles.
    pub fn simplicity(&self) -> Result<Simplicity, GeometryError> {
        match self.vertices.len() {
            3 => {
                if self.twice_area()? == 0 {
                    Err(GeometryError::Degenerate)
                } else {
                    Ok(Simplicity::Verified)
                }
            }
            4 if self.is_axis_aligned_rectangle() => Ok(Simplicity::Verified),
            _ => Ok(Simplicity::Assumed),
        }
    }

    /// True when the polygon is a non-degenerate rectangle with sides
    /// parallel to the axes, listed in boundary order.
    pub fn is_axis_aligned_rectangle(&self) -> bool {
        if self.vertices.len() != 4 {
            return false;
        }
        let horizontal = |p: LatticePoint, q: LatticePoint| p.y == q.y && p.x != q.x;
        let vertical = |p: LatticePoint, q: LatticePoint| p.x == q.x && p.y != q.y;
        let v = &self.vertices;
        let starts_horizontal = horizontal(v[0], v[1]);
        let alternating = (0..4).all(|i| {
            let (p, q) = (v[i], v[(i + 1) % 4]);
            if (i % 2 == 0) == starts_horizontal {
                horizontal(p, q)
            } else {
                vertical(p, q)
            }
        });
        // Alternating axis-parallel edges with v0 != v2 close into a rectangle
        // only if opposite edges have equal length.
        alternating
            && v[0].squared_distance(v[1]).ok() == v[2].squared_distance(v[3]).ok()
            && v[1].squared_distance(v[2]).ok() == v[3].squared_distance(v[0]).ok()
    }

    /// Image of the polygon under a lattice symmetry fixing the origin.
    pub fn apply(&self, sym: Symmetry) -> Result<Self, GeometryError> {
        let vertices = self
            .vertices
            .iter()
            .map(|p| p.apply(sym))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { vertices })
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Result<Self, GeometryError> {
        let vertices = self
            .vertices
            .iter()
            .map(|p| p.translate(dx, dy))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { vertices })
    }

    /// True if some lattice isometry (one of the eight symmetries followed by
    /// a translation) carries `other` onto `self`, vertex cycle onto vertex
    /// cycle in either direction.
    pub fn is_lattice_congruent(&self, other: &LatticePolygon) -> bool {
        let n = self.vertices.len();
        if n != other.vertices.len() {
            return false;
        }
        for sym in Symmetry::all() {
            let Ok(image) = other.apply(sym) else {
                continue;
            };
            for reversed in [false, true] {
                let mut cycle = image.vertices.clone();
                if reversed {
                    cycle.reverse();
                }
                for shift in 0..n {
                    let dx = self.vertices[0].x as i128 - cycle[shift].x as i128;
                    let dy = self.vertices[0].y as i128 - cycle[shift].y as i128;
                    let matches = (0..n).all(|i| {
                        let p = cycle[(shift + i) % n];
                        p.x as i128 + dx == self.vertices[i].x as i128
                            && p.y as i128 + dy == self.vertices[i].y as i128
                    });
                    if matches {
                        return true;
                    }
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coords: &[(i64, i64)]) -> LatticePolygon {
        LatticePolygon::from_coords(coords).unwrap()
    }

    fn unit_square() -> LatticePolygon {
        poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])
    }

    /// Counts boundary points by walking every lattice point of the bounding
    /// box and testing whether it lies on some edge.
    fn scan_boundary(p: &LatticePolygon) -> u64 {
        let (min_x, max_x, min_y, max_y) = bbox(p);
        let mut count = 0;
        for x in min_x..=max_x {
            for y in min_y..=max_y {
                if p.edges().any(|(a, b)| on_segment(a, b, x, y)) {
                    count += 1;
                }
            }
        }
        count
    }

    fn bbox(p: &LatticePolygon) -> (i64, i64, i64, i64) {
        let xs = p.vertices().iter().map(|v| v.x);
        let ys = p.vertices().iter().map(|v| v.y);
        (
            xs.clone().min().unwrap(),
            xs.max().unwrap(),
            ys.clone().min().unwrap(),
            ys.max().unwrap(),
        )
    }

    fn on_segment(a: LatticePoint, b: LatticePoint, x: i64, y: i64) -> bool {
        let cross = (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x);
        cross == 0
            && x >= a.x.min(b.x)
            && x <= a.x.max(b.x)
            && y >= a.y.min(b.y)
            && y <= a.y.max(b.y)
    }

    #[test]
    fn twice_area_examples() {
        assert_eq!(poly(&[(0, 0), (24, 7), (24, 10)]).twice_area().unwrap(), 72);
        assert_eq!(poly(&[(0, 0), (1, 0), (0, 1)]).twice_area().unwrap(), 1);
        assert_eq!(poly(&[(0, 0), (2, 4), (1, 2)]).twice_area().unwrap(), 0);
        assert_eq!(
            poly(&[(0, 0), (7, 0), (7, 10), (0, 10)])
                .twice_area()
                .unwrap(),
            140
        );
    }

    #[test]
    fn twice_area_ignores_orientation() {
        let ccw = poly(&[(0, 0), (7, 0), (7, 10), (0, 10)]);
        let cw = poly(&[(0, 0), (0, 10), (7, 10), (7, 0)]);
        assert_eq!(ccw.twice_area(), cw.twice_area());
    }

    #[test]
    fn boundary_counts_match_scan() {
        let cases = [
            poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]),
            poly(&[(0, 0), (0, 9), (12, 0)]),
            poly(&[(0, 0), (24, 7), (24, 10)]),
        ];
        for p in &cases {
            assert_eq!(p.boundary_point_count().unwrap(), scan_boundary(p), "{p:?}");
        }
        // Frozen from the scan above.
        assert_eq!(cases[0].boundary_point_count().unwrap(), 4);
        assert_eq!(cases[1].boundary_point_count().unwrap(), 24);
        assert_eq!(cases[2].boundary_point_count().unwrap(), 6);
    }

    #[test]
    fn interior_counts() {
        assert_eq!(unit_square().interior_point_count().unwrap(), 0);
        assert_eq!(
            poly(&[(0, 0), (0, 9), (12, 0)])
                .interior_point_count()
                .unwrap(),
            43
        );
        assert_eq!(
            poly(&[(0, 0), (24, 7), (24, 10)])
                .interior_point_count()
                .unwrap(),
            34
        );
        assert_eq!(
            poly(&[(0, 0), (1, 0), (0, 1)])
                .interior_point_count()
                .unwrap(),
            0
        );
    }

    #[test]
    fn degenerate_polygons_have_no_pick_counts() {
        let flat = poly(&[(0, 0), (2, 4), (1, 2)]);
        assert_eq!(flat.boundary_point_count(), Err(GeometryError::Degenerate));
        assert_eq!(flat.interior_point_count(), Err(GeometryError::Degenerate));
        assert_eq!(flat.simplicity(), Err(GeometryError::Degenerate));
    }

    #[test]
    fn squared_sides() {
        assert_eq!(
            poly(&[(0, 0), (24, 7), (24, 10)])
                .squared_side_lengths()
                .unwrap(),
            vec![625, 9, 676]
        );
        assert_eq!(
            poly(&[(0, 0), (0, 9), (12, 0)])
                .squared_side_lengths()
                .unwrap(),
            vec![81, 225, 144]
        );
        assert_eq!(
            unit_square().squared_side_lengths().unwrap(),
            vec![1, 1, 1, 1]
        );
    }

    #[test]
    fn integer_sides() {
        assert_eq!(
            poly(&[(0, 0), (24, 7), (24, 10)])
                .integer_side_lengths()
                .unwrap(),
            Some(vec![25, 3, 26])
        );
        assert_eq!(
            poly(&[(0, 0), (1, 0), (0, 1)])
                .integer_side_lengths()
                .unwrap(),
            None
        );
        assert_eq!(
            poly(&[(0, 0), (7, 0), (7, 10), (0, 10)])
                .integer_side_lengths()
                .unwrap(),
            Some(vec![7, 10, 7, 10])
        );
    }

    #[test]
    fn constructor_rejects_bad_vertex_lists() {
        assert_eq!(
            LatticePolygon::from_coords(&[(0, 0), (1, 1)]),
            Err(GeometryError::TooFewVertices(2))
        );
        assert!(matches!(
            LatticePolygon::from_coords(&[(0, 0), (1, 0), (0, 0)]),
            Err(GeometryError::RepeatedVertex {
                index: 2,
                next: 0,
                ..
            })
        ));
    }

    #[test]
    fn overflow_is_reported() {
        let huge = poly(&[(0, 0), (i64::MAX, 0), (0, i64::MAX)]);
        assert!(matches!(
            huge.squared_side_lengths(),
            Err(GeometryError::Overflow(_))
        ));
        assert!(matches!(huge.twice_area(), Err(GeometryError::Overflow(_))));
        assert!(LatticePoint::new(i64::MIN, 0)
            .apply(Symmetry {
                swap: false,
                negate_x: true,
                negate_y: false
            })
            .is_err());
    }

    #[test]
    fn simplicity_levels() {
        assert_eq!(unit_square().simplicity(), Ok(Simplicity::Verified));
        assert_eq!(
            poly(&[(0, 0), (3, 0), (0, 4)]).simplicity(),
            Ok(Simplicity::Verified)
        );
        let kite = poly(&[(0, 0), (2, -1), (4, 0), (2, 3)]);
        assert_eq!(kite.simplicity(), Ok(Simplicity::Assumed));
        let bowtie = poly(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        assert!(!bowtie.is_axis_aligned_rectangle());
    }

    #[test]
    fn symmetries_are_distinct_and_preserve_norm() {
        let p = LatticePoint::new(2, 5);
        let images: std::collections::HashSet<_> = Symmetry::all()
            .iter()
            .map(|&s| p.apply(s).unwrap())
            .collect();
        assert_eq!(images.len(), 8);
        for q in images {
            assert_eq!(q.squared_distance(LatticePoint::ORIGIN).unwrap(), 29);
        }
    }

    #[test]
    fn congruence_under_isometries() {
        let a = poly(&[(0, 0), (0, 9), (12, 0)]);
        let b = poly(&[(5, 5), (-7, 5), (5, -4)]);
        assert!(a.is_lattice_congruent(&b));
        let c = poly(&[(0, 0), (0, 9), (13, 0)]);
        assert!(!a.is_lattice_congruent(&c));
    }

    #[test]
    fn points_serialize_as_pairs() {
        let p = LatticePoint::new(24, -7);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[24,-7]");
        let back: LatticePoint = serde_json::from_str("[24,-7]").unwrap();
        assert_eq!(back, p);
    }
}
