//! Shape-agnostic amicability matching.
//!
//! Shapes enter as [`ShapeFingerprint`]s: exact area, exact perimeter, and a
//! canonical [`ShapeId`]. Amicable pairs are found with a keyed join of
//! `(area, perimeter)` against `(perimeter, area)`, never by comparing every
//! pair.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rectangles::RectSides;
use crate::triangles::{as_heronian, TriangleSides};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("shape {0} appears more than once")]
    DuplicateShape(ShapeId),
    #[error("malformed shape id {0:?}")]
    MalformedId(String),
    #[error("shape {0} is not a valid integral shape")]
    InvalidShape(ShapeId),
    #[error("certificate failure for {first} and {second}: {reason}")]
    Certificate {
        first: ShapeId,
        second: ShapeId,
        reason: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShapeKind {
    Rectangle,
    Triangle,
}

impl ShapeKind {
    fn tag(self) -> &'static str {
        match self {
            ShapeKind::Rectangle => "rect",
            ShapeKind::Triangle => "tri",
        }
    }

    pub fn side_count(self) -> usize {
        match self {
            ShapeKind::Rectangle => 2,
            ShapeKind::Triangle => 3,
        }
    }
}

/// Family tag plus ascending side list, rendered as `rect:1,34` or
/// `tri:3,25,26`. Ordering is by kind, then numerically by sides.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ShapeId {
    kind: ShapeKind,
    sides: Vec<u32>,
}

impl ShapeId {
    pub fn rectangle(short: u32, long: u32) -> Self {
        Self {
            kind: ShapeKind::Rectangle,
            sides: vec![short.min(long), short.max(long)],
        }
    }

    pub fn triangle(a: u32, b: u32, c: u32) -> Self {
        let mut sides = vec![a, b, c];
        sides.sort_unstable();
        Self {
            kind: ShapeKind::Triangle,
            sides,
        }
    }

    pub fn kind(&self) -> ShapeKind {
        self.kind
    }

    pub fn sides(&self) -> &[u32] {
        &self.sides
    }

    /// Recomputes the fingerprint from the side list alone.
    pub fn fingerprint(&self) -> Result<ShapeFingerprint, SearchError> {
        let invalid = || SearchError::InvalidShape(self.clone());
        let (area, perimeter) = match (self.kind, self.sides.as_slice()) {
            (ShapeKind::Rectangle, &[a, b]) => {
                let r = RectSides::new(a, b).map_err(|_| invalid())?;
                (r.area(), r.perimeter())
            }
            (ShapeKind::Triangle, &[a, b, c]) => {
                let t = TriangleSides::new(a, b, c).map_err(|_| invalid())?;
                let h = as_heronian(t).ok_or_else(invalid)?;
                (h.area(), h.perimeter())
            }
            _ => return Err(invalid()),
        };
        Ok(ShapeFingerprint::new(area, perimeter, self.clone()))
    }
}

impl fmt::Display for ShapeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.kind.tag())?;
        for (i, s) in self.sides.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for ShapeId {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || SearchError::MalformedId(s.to_string());
        let (tag, rest) = s.split_once(':').ok_or_else(malformed)?;
        let kind = match tag {
            "rect" => ShapeKind::Rectangle,
            "tri" => ShapeKind::Triangle,
            _ => return Err(malformed()),
        };
        let sides = rest
            .split(',')
            .map(|t| t.parse::<u32>().map_err(|_| malformed()))
            .collect::<Result<Vec<_>, _>>()?;
        if sides.len() != kind.side_count() || sides.windows(2).any(|w| w[0] > w[1]) {
            return Err(malformed());
        }
        Ok(Self { kind, sides })
    }
}

impl TryFrom<String> for ShapeId {
    type Error = SearchError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<ShapeId> for String {
    fn from(id: ShapeId) -> Self {
        id.to_string()
    }
}

/// Exact area and perimeter of a shape, keyed by its canonical id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShapeFingerprint {
    pub area: u64,
    pub perimeter: u64,
    pub shape_id: ShapeId,
}

impl ShapeFingerprint {
    pub fn new(area: u64, perimeter: u64, shape_id: ShapeId) -> Self {
        Self {
            area,
            perimeter,
            shape_id,
        }
    }

    pub fn shape_id(&self) -> &ShapeId {
        &self.shape_id
    }

    pub fn is_equable(&self) -> bool {
        self.area == self.perimeter
    }
}

/// Unordered pair of distinct shapes with crossed area and perimeter,
/// `first.shape_id < second.shape_id`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AmicablePair {
    first: ShapeFingerprint,
    second: ShapeFingerprint,
}

impl AmicablePair {
    pub fn new(p: ShapeFingerprint, q: ShapeFingerprint) -> Result<Self, SearchError> {
        let fail = |reason: &str| SearchError::Certificate {
            first: p.shape_id.clone(),
            second: q.shape_id.clone(),
            reason: reason.to_string(),
        };
        if p.shape_id == q.shape_id {
            return Err(fail("a shape cannot be amicable with itself"));
        }
        if p.area != q.perimeter || q.area != p.perimeter {
            return Err(fail("area and perimeter do not cross-match"));
        }
        let (first, second) = if p.shape_id < q.shape_id {
            (p, q)
        } else {
            (q, p)
        };
        Ok(Self { first, second })
    }

    pub fn first(&self) -> &ShapeFingerprint {
        &self.first
    }

    pub fn second(&self) -> &ShapeFingerprint {
        &self.second
    }

    /// True when the two shapes come from different families.
    pub fn is_mixed(&self) -> bool {
        self.first.shape_id.kind != self.second.shape_id.kind
    }
}

/// All unordered amicable pairs among `shapes`, sorted by shape id.
pub fn match_amicable(shapes: &[ShapeFingerprint]) -> Result<Vec<AmicablePair>, SearchError> {
    let mut seen = HashSet::with_capacity(shapes.len());
    for s in shapes {
        if !seen.insert(&s.shape_id) {
            return Err(SearchError::DuplicateShape(s.shape_id.clone()));
        }
    }

    let mut by_key: HashMap<(u64, u64), Vec<&ShapeFingerprint>> = HashMap::new();
    for s in shapes {
        by_key.entry((s.area, s.perimeter)).or_default().push(s);
    }

    let mut pairs = Vec::new();
    for s in shapes {
        let Some(partners) = by_key.get(&(s.perimeter, s.area)) else {
            continue;
        };
        for t in partners {
            // Emits each unordered pair once and skips s itself.
            if s.shape_id < t.shape_id {
                pairs.push(AmicablePair::new(s.clone(), (*t).clone())?);
            }
        }
    }
    pairs.sort_by(|p, q| {
        (&p.first.shape_id, &p.second.shape_id).cmp(&(&q.first.shape_id, &q.second.shape_id))
    });
    Ok(pairs)
}
