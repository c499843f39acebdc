//! Certificate-carrying search reports.
//!
//! A [`SearchReport`] lists every pair found together with the side records,
//! areas and perimeters that justify it. Loading a report with
//! [`SearchReport::from_json`] recomputes all of those from the sides, so a
//! tampered or stale report is rejected rather than trusted.

use std::collections::HashSet;
use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::LatticePoint;
use crate::search::{AmicablePair, SearchError, ShapeFingerprint, ShapeId, ShapeKind};
use crate::triangles::TriangleEmbedding;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("report check failed: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Rectangles,
    Triangles,
    EquableRectangles,
    EquableTriangles,
}

impl Family {
    pub fn shape_kind(self) -> ShapeKind {
        match self {
            Family::Rectangles | Family::EquableRectangles => ShapeKind::Rectangle,
            Family::Triangles | Family::EquableTriangles => ShapeKind::Triangle,
        }
    }

    pub fn is_equable(self) -> bool {
        matches!(self, Family::EquableRectangles | Family::EquableTriangles)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Rectangles => "rectangles",
            Family::Triangles => "triangles",
            Family::EquableRectangles => "equable-rectangles",
            Family::EquableTriangles => "equable-triangles",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sides (ascending), area and perimeter of one shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeRecord {
    pub sides: Vec<u32>,
    pub area: u64,
    pub perimeter: u64,
}

impl ShapeRecord {
    fn from_fingerprint(f: &ShapeFingerprint) -> Self {
        Self {
            sides: f.shape_id().sides().to_vec(),
            area: f.area,
            perimeter: f.perimeter,
        }
    }

    fn shape_id(&self, kind: ShapeKind) -> Result<ShapeId, ReportError> {
        let id = match (kind, self.sides.as_slice()) {
            (ShapeKind::Rectangle, &[a, b]) if a <= b => ShapeId::rectangle(a, b),
            (ShapeKind::Triangle, &[a, b, c]) if a <= b && b <= c => ShapeId::triangle(a, b, c),
            _ => {
                return Err(ReportError::Invalid(format!(
                    "sides {:?} are not a canonical {kind:?}",
                    self.sides
                )))
            }
        };
        Ok(id)
    }

    /// Recomputes area and perimeter from the sides.
    fn verify(&self, kind: ShapeKind) -> Result<ShapeFingerprint, ReportError> {
        let fp = self.shape_id(kind)?.fingerprint()?;
        if fp.area != self.area || fp.perimeter != self.perimeter {
            return Err(ReportError::Invalid(format!(
                "{} records area {} perimeter {}, sides give {} and {}",
                fp.shape_id, self.area, self.perimeter, fp.area, fp.perimeter
            )));
        }
        Ok(fp)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCertificate {
    pub first: ShapeRecord,
    pub second: ShapeRecord,
}

/// Run-dependent data, excluded from canonical comparison.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Volatile {
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub family: Family,
    pub bound: u32,
    pub shapes_scanned: u64,
    /// What the search establishes, e.g. whether it is bounded.
    pub scope: String,
    pub pairs: Vec<PairCertificate>,
    /// Equable shapes, for the equable families.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub equable: Vec<ShapeRecord>,
    #[serde(default)]
    pub volatile: Volatile,
}

/// Builds a report from a finished search, re-verifying every pair against
/// its shapes. For equable families the equable shapes among `shapes` are
/// listed as well.
pub fn assemble_report(
    family: Family,
    bound: u32,
    scope: impl Into<String>,
    shapes: &[ShapeFingerprint],
    pairs: &[AmicablePair],
    elapsed: Duration,
) -> Result<SearchReport, ReportError> {
    let known: HashSet<&ShapeFingerprint> = shapes.iter().collect();
    let mut certs = Vec::with_capacity(pairs.len());
    for pair in pairs {
        for member in [pair.first(), pair.second()] {
            if !known.contains(member) {
                return Err(ReportError::Invalid(format!(
                    "{} is not among the scanned shapes",
                    member.shape_id()
                )));
            }
            if member.shape_id().kind() != family.shape_kind() {
                return Err(ReportError::Invalid(format!(
                    "{} does not belong to {family}",
                    member.shape_id()
                )));
            }
        }
        // Re-check from scratch rather than trusting the pair's constructor.
        AmicablePair::new(
            pair.first().shape_id().fingerprint()?,
            pair.second().shape_id().fingerprint()?,
        )?;
        certs.push(PairCertificate {
            first: ShapeRecord::from_fingerprint(pair.first()),
            second: ShapeRecord::from_fingerprint(pair.second()),
        });
    }
    certs.sort_by(|p, q| (&p.first.sides, &p.second.sides).cmp(&(&q.first.sides, &q.second.sides)));

    let mut equable: Vec<ShapeRecord> = if family.is_equable() {
        shapes
            .iter()
            .filter(|s| s.is_equable())
            .map(ShapeRecord::from_fingerprint)
            .collect()
    } else {
        Vec::new()
    };
    equable.sort_by(|p, q| p.sides.cmp(&q.sides));

    let report = SearchReport {
        family,
        bound,
        shapes_scanned: shapes.len() as u64,
        scope: scope.into(),
        pairs: certs,
        equable,
        volatile: Volatile {
            elapsed_us: elapsed.as_micros().min(u64::MAX as u128) as u64,
        },
    };
    report.verify()?;
    Ok(report)
}

impl SearchReport {
    /// Recomputes every certificate from side lengths.
    pub fn verify(&self) -> Result<(), ReportError> {
        let kind = self.family.shape_kind();
        for cert in &self.pairs {
            let p = cert.first.verify(kind)?;
            let q = cert.second.verify(kind)?;
            AmicablePair::new(p, q)?;
        }
        for shape in &self.equable {
            let fp = shape.verify(kind)?;
            if !fp.is_equable() {
                return Err(ReportError::Invalid(format!(
                    "{} is not equable",
                    fp.shape_id
                )));
            }
        }
        if !self.family.is_equable() && !self.equable.is_empty() {
            return Err(ReportError::Invalid(format!(
                "{} report lists equable shapes",
                self.family
            )));
        }
        let sorted = self.pairs.windows(2).all(|w| {
            (&w[0].first.sides, &w[0].second.sides) < (&w[1].first.sides, &w[1].second.sides)
        });
        if !sorted {
            return Err(ReportError::Invalid(
                "pairs are not in canonical order".into(),
            ));
        }
        Ok(())
    }

    pub fn elapsed(&self) -> Duration {
        Duration::from_micros(self.volatile.elapsed_us)
    }

    /// Parses and re-verifies a JSON report.
    pub fn from_json(json: &str) -> Result<Self, ReportError> {
        let report: SearchReport = serde_json::from_str(json)?;
        report.verify()?;
        Ok(report)
    }
}

/// A lattice placement with the data that certifies it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingRecord {
    pub sides: [u32; 3],
    pub area: u64,
    pub vertices: [LatticePoint; 3],
    pub squared_sides: Vec<u64>,
    pub twice_area: u64,
}

impl From<&TriangleEmbedding> for EmbeddingRecord {
    fn from(e: &TriangleEmbedding) -> Self {
        let t = e.triangle();
        Self {
            sides: t.sides().sides(),
            area: t.area(),
            vertices: e.vertices(),
            squared_sides: e.squared_side_lengths(),
            twice_area: e.twice_area(),
        }
    }
}

/// Removes every `"volatile"` member, recursively, so reports from separate
/// runs can be compared.
pub fn strip_volatile(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            map.remove("volatile");
            map.values_mut().for_each(strip_volatile);
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(strip_volatile),
        _ => {}
    }
}
