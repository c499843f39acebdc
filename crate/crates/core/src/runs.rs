//! Complete search runs, each producing a verified [`SearchReport`].

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::rectangles::{
    brute_force_pairs, canonical_rectangles, enumerate_by_divisors, RectAmicablePair,
};
use crate::report::{assemble_report, Family, ReportError, SearchReport};
use crate::search::{match_amicable, AmicablePair, ShapeFingerprint};
use crate::triangles::{enumerate_heronian, find_amicable_triangle_pairs, TriangleError};

/// Default search bounds. Every valid amicable rectangle side is at most 54
/// and the amicable triangles have perimeters 36 and 54.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub rect_max_side: u32,
    pub tri_max_perimeter: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            rect_max_side: 200,
            tri_max_perimeter: 120,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error(transparent)]
    Triangle(#[from] TriangleError),
}

fn rect_pair(p: &RectAmicablePair) -> Result<AmicablePair, ReportError> {
    Ok(AmicablePair::new(
        p.first().fingerprint(),
        p.second().fingerprint(),
    )?)
}

/// The divisor enumeration. `bound` records the largest side that occurs.
pub fn rectangle_divisor_report() -> Result<SearchReport, RunError> {
    let start = Instant::now();
    let pairs = enumerate_by_divisors();
    let mut shapes: Vec<ShapeFingerprint> = pairs
        .iter()
        .flat_map(|p| [p.first().fingerprint(), p.second().fingerprint()])
        .collect();
    shapes.sort_by(|a, b| a.shape_id.cmp(&b.shape_id));
    shapes.dedup();
    let matched = match_amicable(&shapes).map_err(ReportError::from)?;
    let bound = pairs
        .iter()
        .map(|p| p.first().long().max(p.second().long()))
        .max()
        .unwrap_or(0);
    Ok(assemble_report(
        Family::Rectangles,
        bound,
        "complete: divisor enumeration over short sides 1 and 2",
        &shapes,
        &matched,
        start.elapsed(),
    )?)
}

/// The exhaustive rectangle oracle over all sides ≤ `max_side`.
pub fn rectangle_oracle_report(max_side: u32) -> Result<SearchReport, RunError> {
    let start = Instant::now();
    let pairs = brute_force_pairs(max_side)
        .iter()
        .map(rect_pair)
        .collect::<Result<Vec<_>, _>>()?;
    let shapes: Vec<_> = canonical_rectangles(max_side)
        .map(|r| r.fingerprint())
        .collect();
    Ok(assemble_report(
        Family::Rectangles,
        max_side,
        format!("exhaustive: all rectangles with sides <= {max_side}"),
        &shapes,
        &pairs,
        start.elapsed(),
    )?)
}

/// Amicable heronian triangles with perimeter ≤ `max_perimeter`.
pub fn triangle_report(max_perimeter: u32) -> Result<SearchReport, RunError> {
    let start = Instant::now();
    let triangles = enumerate_heronian(max_perimeter)?;
    let shapes: Vec<_> = triangles.iter().map(|t| t.fingerprint()).collect();
    let pairs = find_amicable_triangle_pairs(max_perimeter)?
        .iter()
        .map(|p| AmicablePair::new(p.first().fingerprint(), p.second().fingerprint()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(ReportError::from)?;
    Ok(assemble_report(
        Family::Triangles,
        max_perimeter,
        format!(
            "bounded: heronian triangles with perimeter <= {max_perimeter}; uniqueness beyond this bound is not checked here"
        ),
        &shapes,
        &pairs,
        start.elapsed(),
    )?)
}

pub fn equable_rectangle_report(max_side: u32) -> Result<SearchReport, RunError> {
    let start = Instant::now();
    let shapes: Vec<_> = canonical_rectangles(max_side)
        .map(|r| r.fingerprint())
        .collect();
    Ok(assemble_report(
        Family::EquableRectangles,
        max_side,
        format!("exhaustive: all rectangles with sides <= {max_side}"),
        &shapes,
        &[],
        start.elapsed(),
    )?)
}

pub fn equable_triangle_report(max_perimeter: u32) -> Result<SearchReport, RunError> {
    let start = Instant::now();
    let shapes: Vec<_> = enumerate_heronian(max_perimeter)?
        .iter()
        .map(|t| t.fingerprint())
        .collect();
    Ok(assemble_report(
        Family::EquableTriangles,
        max_perimeter,
        format!("exhaustive: heronian triangles with perimeter <= {max_perimeter}"),
        &shapes,
        &[],
        start.elapsed(),
    )?)
}
