//! Heronian triangles, their amicable pairs, equable triangles, and explicit
//! lattice embeddings.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{GeometryError, LatticePoint, LatticePolygon, Symmetry};
use crate::radical::{exact_sqrt, exact_sqrt_u128};
use crate::search::{match_amicable, SearchError, ShapeFingerprint, ShapeId};

/// Largest perimeter accepted by [`TriangleSides`]. Keeps `16·A²` inside
/// `u128` and the area inside `u64`.
pub const MAX_PERIMETER: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("triangle sides must be positive, got {0:?}")]
    ZeroSide([u32; 3]),
    #[error("sides {0:?} violate the strict triangle inequality")]
    Degenerate([u32; 3]),
    #[error("perimeter of {0:?} exceeds {MAX_PERIMETER}")]
    TooLarge([u32; 3]),
    #[error("perimeter bound {0} is too small, need at least 3")]
    BoundTooSmall(u32),
    #[error("{sides} is not heronian: 16·area² = {sixteen_area_sq}")]
    NotHeronian {
        sides: TriangleSides,
        sixteen_area_sq: u128,
    },
    #[error("{first} and {second} are not amicable")]
    NotAmicable {
        first: TriangleSides,
        second: TriangleSides,
    },
    #[error("{0} cannot be paired with itself")]
    SelfPair(TriangleSides),
    #[error("no lattice embedding found for {0}")]
    NoEmbedding(TriangleSides),
    #[error("embedding {vertices:?} does not realize {sides}")]
    BadEmbedding {
        sides: TriangleSides,
        vertices: [LatticePoint; 3],
    },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// Canonical side triple, `a ≤ b ≤ c` and `a + b > c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[u32; 3]", into = "[u32; 3]")]
pub struct TriangleSides {
    a: u32,
    b: u32,
    c: u32,
}

impl TryFrom<[u32; 3]> for TriangleSides {
    type Error = TriangleError;

    fn try_from([a, b, c]: [u32; 3]) -> Result<Self, Self::Error> {
        Self::new(a, b, c)
    }
}

impl From<TriangleSides> for [u32; 3] {
    fn from(t: TriangleSides) -> Self {
        t.sides()
    }
}

impl TriangleSides {
    /// Sides in any order; sorted on construction.
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self, TriangleError> {
        let mut s = [a, b, c];
        s.sort_unstable();
        let [a, b, c] = s;
        if a == 0 {
            return Err(TriangleError::ZeroSide(s));
        }
        if a as u64 + b as u64 <= c as u64 {
            return Err(TriangleError::Degenerate(s));
        }
        if a as u64 + b as u64 + c as u64 > MAX_PERIMETER {
            return Err(TriangleError::TooLarge(s));
        }
        Ok(Self { a, b, c })
    }

    pub fn sides(&self) -> [u32; 3] {
        [self.a, self.b, self.c]
    }

    pub fn perimeter(&self) -> u64 {
        self.a as u64 + self.b as u64 + self.c as u64
    }

    /// `16·A² = (a+b+c)(−a+b+c)(a−b+c)(a+b−c)`, Heron's formula in integers.
    pub fn sixteen_area_sq(&self) -> u128 {
        let (a, b, c) = (self.a as u128, self.b as u128, self.c as u128);
        (a + b + c) * (b + c - a) * (a + c - b) * (a + b - c)
    }

    pub fn squared_sides(&self) -> [u64; 3] {
        self.sides().map(|s| s as u64 * s as u64)
    }

    pub fn shape_id(&self) -> ShapeId {
        ShapeId::triangle(self.a, self.b, self.c)
    }
}

impl fmt::Display for TriangleSides {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// A triangle with integer sides and certified integer area.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HeronianTriangle {
    sides: TriangleSides,
    area: u64,
}

impl HeronianTriangle {
    pub fn sides(&self) -> TriangleSides {
        self.sides
    }

    pub fn area(&self) -> u64 {
        self.area
    }

    pub fn perimeter(&self) -> u64 {
        self.sides.perimeter()
    }

    pub fn is_equable(&self) -> bool {
        self.area == self.perimeter()
    }

    pub fn fingerprint(&self) -> ShapeFingerprint {
        ShapeFingerprint::new(self.area, self.perimeter(), self.sides.shape_id())
    }
}

impl fmt::Display for HeronianTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} area {}", self.sides, self.area)
    }
}

/// The heronian certificate for `t`, if its area is an integer.
pub fn as_heronian(t: TriangleSides) -> Option<HeronianTriangle> {
    let s16 = t.sixteen_area_sq();
    let root = exact_sqrt_u128(s16)?;
    if root % 4 != 0 {
        return None;
    }
    let area = u64::try_from(root / 4).ok()?;
    let a = area as u128;
    (16 * a * a == s16).then_some(HeronianTriangle { sides: t, area })
}

/// Heronian triangles with perimeter ≤ `max_perimeter`, ordered by
/// `(perimeter, a, b)`.
pub fn enumerate_heronian(max_perimeter: u32) -> Result<Vec<HeronianTriangle>, TriangleError> {
    if max_perimeter < 3 {
        return Err(TriangleError::BoundTooSmall(max_perimeter));
    }
    let max_perimeter = max_perimeter.min(MAX_PERIMETER as u32);
    // Perimeters are independent; indexed collection keeps the output order.
    let found = (3..=max_perimeter)
        .into_par_iter()
        .flat_map_iter(heronian_with_perimeter)
        .collect();
    Ok(found)
}

fn heronian_with_perimeter(p: u32) -> impl Iterator<Item = HeronianTriangle> {
    (1..=p / 3).flat_map(move |a| {
        let b_max = (p - a) / 2;
        (a..=b_max).filter_map(move |b| {
            let c = p - a - b;
            if c < b || a + b <= c {
                return None;
            }
            as_heronian(TriangleSides { a, b, c })
        })
    })
}

/// Unordered amicable pair of distinct heronian triangles, `first < second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TrianglePair {
    first: HeronianTriangle,
    second: HeronianTriangle,
}

impl TrianglePair {
    /// Re-checks both cross equalities and distinctness.
    pub fn new(p: HeronianTriangle, q: HeronianTriangle) -> Result<Self, TriangleError> {
        if p.sides == q.sides {
            return Err(TriangleError::SelfPair(p.sides));
        }
        if p.area != q.perimeter() || q.area != p.perimeter() {
            return Err(TriangleError::NotAmicable {
                first: p.sides,
                second: q.sides,
            });
        }
        let (first, second) = if p.sides < q.sides { (p, q) } else { (q, p) };
        Ok(Self { first, second })
    }

    pub fn first(&self) -> HeronianTriangle {
        self.first
    }

    pub fn second(&self) -> HeronianTriangle {
        self.second
    }
}

impl fmt::Display for TrianglePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ↔ {}", self.first.sides, self.second.sides)
    }
}

/// Amicable pairs among heronian triangles with perimeter ≤ `max_perimeter`,
/// found by joining area/perimeter fingerprints.
pub fn find_amicable_triangle_pairs(
    max_perimeter: u32,
) -> Result<Vec<TrianglePair>, TriangleError> {
    let triangles = enumerate_heronian(max_perimeter)?;
    amicable_pairs_among(&triangles)
}

pub(crate) fn amicable_pairs_among(
    triangles: &[HeronianTriangle],
) -> Result<Vec<TrianglePair>, TriangleError> {
    let by_id: HashMap<ShapeId, HeronianTriangle> =
        triangles.iter().map(|t| (t.sides.shape_id(), *t)).collect();
    let fingerprints: Vec<ShapeFingerprint> = triangles
        .iter()
        .map(HeronianTriangle::fingerprint)
        .collect();
    let mut pairs = BTreeSet::new();
    for m in match_amicable(&fingerprints)? {
        let p = by_id[m.first().shape_id()];
        let q = by_id[m.second().shape_id()];
        pairs.insert(TrianglePair::new(p, q)?);
    }
    Ok(pairs.into_iter().collect())
}

/// Heronian triangles whose area equals their perimeter.
pub fn find_equable_triangles(max_perimeter: u32) -> Result<Vec<HeronianTriangle>, TriangleError> {
    Ok(enumerate_heronian(max_perimeter)?
        .into_iter()
        .filter(HeronianTriangle::is_equable)
        .collect())
}

/// All `(p, q)` with `p, q ≥ 0` and `p² + q² = n`, ordered by `p`.
pub fn sum_two_squares_reps(n: u64) -> Vec<LatticePoint> {
    (0..=n.isqrt())
        .filter_map(|p| {
            let q = exact_sqrt(n - p * p)?;
            Some(LatticePoint::new(p as i64, q as i64))
        })
        .collect()
}

fn signed_reps(n: u64) -> Vec<LatticePoint> {
    let mut out = BTreeSet::new();
    for p in sum_two_squares_reps(n) {
        for (sx, sy) in [(1, 1), (-1, 1), (1, -1), (-1, -1)] {
            out.insert(LatticePoint::new(sx * p.x, sy * p.y));
        }
    }
    out.into_iter().collect()
}

/// A heronian triangle placed on the lattice, first vertex at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleEmbedding {
    triangle: HeronianTriangle,
    vertices: [LatticePoint; 3],
}

impl TriangleEmbedding {
    /// Checks that the vertices realize the side triple and the area.
    pub fn new(
        triangle: HeronianTriangle,
        vertices: [LatticePoint; 3],
    ) -> Result<Self, TriangleError> {
        let bad = || TriangleError::BadEmbedding {
            sides: triangle.sides,
            vertices,
        };
        let polygon = LatticePolygon::new(vertices.to_vec()).map_err(|_| bad())?;
        let mut squared = polygon.squared_side_lengths()?;
        squared.sort_unstable();
        if squared != triangle.sides.squared_sides() {
            return Err(bad());
        }
        if polygon.twice_area()? != 2 * triangle.area {
            return Err(bad());
        }
        Ok(Self { triangle, vertices })
    }

    pub fn triangle(&self) -> HeronianTriangle {
        self.triangle
    }

    pub fn vertices(&self) -> [LatticePoint; 3] {
        self.vertices
    }

    pub fn polygon(&self) -> LatticePolygon {
        LatticePolygon::new(self.vertices.to_vec()).expect("validated on construction")
    }

    pub fn twice_area(&self) -> u64 {
        2 * self.triangle.area
    }

    /// Squared lengths of the edges v0v1, v1v2, v2v0.
    pub fn squared_side_lengths(&self) -> Vec<u64> {
        self.polygon()
            .squared_side_lengths()
            .expect("validated on construction")
    }
}

fn flatten(v: &[LatticePoint; 3]) -> [i64; 6] {
    [v[0].x, v[0].y, v[1].x, v[1].y, v[2].x, v[2].y]
}

/// Places `t` on the lattice with the vertex between the two longest sides at
/// the origin. Among all placements, both orders of the other two vertices,
/// and the eight lattice symmetries, the lexicographically smallest flattened
/// vertex list is returned.
pub fn embed_triangle(t: &HeronianTriangle) -> Result<TriangleEmbedding, TriangleError> {
    let [a, b, c] = t.sides.squared_sides();
    let far = signed_reps(c);
    let near = signed_reps(b);
    let mut best: Option<[LatticePoint; 3]> = None;
    for &p in &far {
        for &q in &near {
            if p.squared_distance(q)? != a {
                continue;
            }
            for order in [[LatticePoint::ORIGIN, p, q], [LatticePoint::ORIGIN, q, p]] {
                for sym in Symmetry::all() {
                    let image = [
                        order[0].apply(sym)?,
                        order[1].apply(sym)?,
                        order[2].apply(sym)?,
                    ];
                    if best
                        .as_ref()
                        .is_none_or(|cur| flatten(&image) < flatten(cur))
                    {
                        best = Some(image);
                    }
                }
            }
        }
    }
    let vertices = best.ok_or(TriangleError::NoEmbedding(t.sides))?;
    TriangleEmbedding::new(*t, vertices)
}
