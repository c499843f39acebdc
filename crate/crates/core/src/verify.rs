//! The full verification suite behind `verify all`.
//!
//! Each check recomputes its result from the library and compares it with the
//! known answer. A failing check never aborts the suite; it is recorded with a
//! diagnostic and the suite carries on.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lattice::{LatticePoint, LatticePolygon};
use crate::rectangles::{
    brute_force_pairs, enumerate_by_divisors, equable_rectangles, partner_closed_form,
    perimeter_dominant, small_side_candidates, ClosedForm, NoSolution, RectAmicablePair, RectSides,
};
use crate::report::{EmbeddingRecord, SearchReport};
use crate::runs::{equable_triangle_report, rectangle_divisor_report, triangle_report, Bounds};
use crate::triangles::{
    as_heronian, embed_triangle, find_amicable_triangle_pairs, find_equable_triangles,
    TriangleEmbedding, TriangleSides,
};

/// The five amicable rectangle pairs, as `(a, b, x, y)`.
pub const RECTANGLE_PAIRS: [(u32, u32, u32, u32); 5] = [
    (1, 34, 7, 10),
    (1, 38, 6, 13),
    (1, 54, 5, 22),
    (2, 10, 4, 6),
    (2, 13, 3, 10),
];

/// The amicable triangle pair.
pub const TRIANGLE_PAIR: ([u32; 3], [u32; 3]) = ([3, 25, 26], [9, 12, 15]);

/// Side triple and lattice vertices of a placed triangle.
pub type Placement = ([u32; 3], [(i64, i64); 3]);

/// Reference placements for the amicable triangles.
pub const TRIANGLE_PLACEMENTS: [Placement; 2] = [
    ([9, 12, 15], [(0, 0), (0, 9), (12, 0)]),
    ([3, 25, 26], [(0, 0), (24, 7), (24, 10)]),
];

/// Deliberate corruption of one intermediate result, for exercising the
/// failure path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Drop the last pair from the divisor enumeration.
    DropRectanglePair,
    /// Move one vertex of each triangle embedding.
    PerturbEmbedding,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub bounds: Bounds,
    pub fault: Option<Fault>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckResult {
    fn from_outcome(name: &str, outcome: Result<String, String>) -> Self {
        let (status, detail) = match outcome {
            Ok(d) => (CheckStatus::Pass, d),
            Err(d) => (CheckStatus::Fail, d),
        };
        Self {
            name: name.to_string(),
            status,
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub family: String,
    pub bounds: Bounds,
    pub checks: Vec<CheckResult>,
    pub reports: Vec<SearchReport>,
    pub embeddings: Vec<EmbeddingRecord>,
    pub amicable_pairs_total: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    /// Re-verifies every embedded search report.
    pub fn verify_certificates(&self) -> Result<(), crate::report::ReportError> {
        self.reports.iter().try_for_each(SearchReport::verify)
    }
}

fn expected_rectangle_pairs() -> Vec<RectAmicablePair> {
    RECTANGLE_PAIRS
        .iter()
        .map(|&(a, b, x, y)| {
            RectAmicablePair::new(RectSides::new(a, b).unwrap(), RectSides::new(x, y).unwrap())
                .expect("listed pairs are amicable")
        })
        .collect()
}

fn divisor_pairs(fault: Option<Fault>) -> Vec<RectAmicablePair> {
    let mut pairs = enumerate_by_divisors();
    if fault == Some(Fault::DropRectanglePair) {
        pairs.pop();
    }
    pairs
}

fn check_divisors_vs_oracle(bounds: &Bounds, fault: Option<Fault>) -> Result<String, String> {
    let divisors = divisor_pairs(fault);
    let oracle = brute_force_pairs(bounds.rect_max_side);
    if divisors == oracle {
        Ok(format!(
            "{} pairs from both routes at max side {}",
            oracle.len(),
            bounds.rect_max_side
        ))
    } else {
        Err(format!(
            "divisor enumeration gave {} pairs, oracle at max side {} gave {}",
            divisors.len(),
            bounds.rect_max_side,
            oracle.len()
        ))
    }
}

fn check_known_pairs(fault: Option<Fault>) -> Result<String, String> {
    let found = divisor_pairs(fault);
    if found == expected_rectangle_pairs() {
        Ok(found
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; "))
    } else {
        Err(format!(
            "expected the five listed pairs, got {}",
            found.len()
        ))
    }
}

fn check_small_side_filter(bounds: &Bounds) -> Result<String, String> {
    let shorts = small_side_candidates(bounds.rect_max_side).map_err(|e| e.to_string())?;
    if shorts != [1, 2] {
        return Err(format!("short sides of dominant rectangles: {shorts:?}"));
    }
    for pair in brute_force_pairs(bounds.rect_max_side) {
        let dominant: Vec<_> = [pair.first(), pair.second()]
            .into_iter()
            .filter(|r| perimeter_dominant(*r))
            .collect();
        if dominant.is_empty() || dominant.iter().any(|r| r.short() > 2) {
            return Err(format!("{pair} breaks the dominance filter"));
        }
    }
    Ok(format!(
        "dominant members have short side 1 or 2 up to max side {}",
        bounds.rect_max_side
    ))
}

fn check_equable_rectangles(bounds: &Bounds) -> Result<String, String> {
    let equable = equable_rectangles(bounds.rect_max_side);
    let expected = [RectSides::new(3, 6).unwrap(), RectSides::new(4, 4).unwrap()];
    if equable != expected {
        return Err(format!("equable rectangles: {equable:?}"));
    }
    let pairs = brute_force_pairs(bounds.rect_max_side);
    if let Some(p) = pairs
        .iter()
        .find(|p| equable.contains(&p.first()) || equable.contains(&p.second()))
    {
        return Err(format!("equable rectangle appears in amicable pair {p}"));
    }
    Ok("3×6 and 4×4 are equable and in no amicable pair".into())
}

fn check_closed_form() -> Result<String, String> {
    // Cramer's y = (2a² + 4x)/(ax − 4) against the specialized forms
    // (4x + 2)/(x − 4) for a = 1 and (2x + 4)/(x − 2) for a = 2.
    for (a, special_num, special_den) in [
        (
            1i64,
            (|x: i64| 4 * x + 2) as fn(i64) -> i64,
            (|x: i64| x - 4) as fn(i64) -> i64,
        ),
        (2, |x| 2 * x + 4, |x| x - 2),
    ] {
        for x in 1..=500i64 {
            let det = a * x - 4;
            if det == 0 {
                continue;
            }
            let cramer_num = 2 * a * a + 4 * x;
            if cramer_num * special_den(x) != special_num(x) * det {
                return Err(format!("y formulas differ at a={a}, x={x}"));
            }
        }
    }
    for (a, x, expected) in [(1, 7, (34, 10)), (1, 5, (54, 22)), (2, 3, (13, 10))] {
        match partner_closed_form(a, x) {
            Ok(ClosedForm::Solution { b, y }) if (b, y) == expected => {}
            other => return Err(format!("a={a}, x={x} gave {other:?}")),
        }
    }
    for (a, x) in [(1, 4), (2, 2)] {
        if partner_closed_form(a, x) != Ok(ClosedForm::None(NoSolution::Singular)) {
            return Err(format!("a={a}, x={x} should be singular"));
        }
    }
    Ok("closed form agrees with the specialized formulas for x in 1..=500".into())
}

fn check_triangle_search(bounds: &Bounds) -> Result<String, String> {
    let pairs =
        find_amicable_triangle_pairs(bounds.tri_max_perimeter).map_err(|e| e.to_string())?;
    let [pair] = pairs.as_slice() else {
        return Err(format!(
            "expected one pair at max perimeter {}, found {}",
            bounds.tri_max_perimeter,
            pairs.len()
        ));
    };
    let (p, q) = (pair.first(), pair.second());
    if (p.sides().sides(), q.sides().sides()) != TRIANGLE_PAIR {
        return Err(format!("unexpected pair {pair}"));
    }
    if p.area() != q.perimeter() || q.area() != p.perimeter() {
        return Err(format!("{pair} fails the cross equalities"));
    }
    Ok(format!(
        "{pair}: areas {} and {} equal the opposite perimeters (bounded to perimeter {})",
        p.area(),
        q.area(),
        bounds.tri_max_perimeter
    ))
}

fn embedding_for(sides: [u32; 3], fault: Option<Fault>) -> Result<EmbeddingRecord, String> {
    let t = TriangleSides::new(sides[0], sides[1], sides[2]).map_err(|e| e.to_string())?;
    let h = as_heronian(t).ok_or_else(|| format!("{t} is not heronian"))?;
    let e: TriangleEmbedding = embed_triangle(&h).map_err(|e| e.to_string())?;
    let mut record = EmbeddingRecord::from(&e);
    if fault == Some(Fault::PerturbEmbedding) {
        record.vertices[2].x += 1;
    }
    Ok(record)
}

fn check_embedding(
    record: &Result<EmbeddingRecord, String>,
    placement: [(i64, i64); 3],
) -> Result<String, String> {
    let record = record.as_ref().map_err(Clone::clone)?;
    let polygon = LatticePolygon::new(record.vertices.to_vec()).map_err(|e| e.to_string())?;
    let twice_area = polygon.twice_area().map_err(|e| e.to_string())?;
    let mut squared = polygon.squared_side_lengths().map_err(|e| e.to_string())?;
    squared.sort_unstable();
    let mut expected_sq: Vec<u64> = record.sides.iter().map(|&s| s as u64 * s as u64).collect();
    expected_sq.sort_unstable();
    if twice_area != 2 * record.area || squared != expected_sq {
        return Err(format!(
            "vertices {:?}: twice-area {twice_area}, squared sides {squared:?}",
            record.vertices
        ));
    }
    let reference = LatticePolygon::new(
        placement
            .iter()
            .map(|&(x, y)| LatticePoint::new(x, y))
            .collect(),
    )
    .map_err(|e| e.to_string())?;
    if !polygon.is_lattice_congruent(&reference) {
        return Err(format!(
            "{:?} is not congruent to {placement:?}",
            record.vertices
        ));
    }
    Ok(format!(
        "vertices {:?}, twice-area {twice_area}, squared sides {squared:?}",
        record.vertices.map(<[i64; 2]>::from)
    ))
}

fn check_equable_triangles(bounds: &Bounds) -> Result<String, String> {
    let found = find_equable_triangles(bounds.tri_max_perimeter).map_err(|e| e.to_string())?;
    if found.len() != 5 || found.iter().any(|t| !t.is_equable()) {
        return Err(format!("found {} equable triangles", found.len()));
    }
    Ok(found
        .iter()
        .map(|t| t.sides().to_string())
        .collect::<Vec<_>>()
        .join(" "))
}

/// Runs every check and gathers the underlying reports.
pub fn verify_all(options: &VerifyOptions) -> VerificationReport {
    let bounds = options.bounds;
    let fault = options.fault;
    let mut checks = Vec::new();
    let mut push = |name: &str, outcome| checks.push(CheckResult::from_outcome(name, outcome));

    push(
        "rect-divisors-vs-oracle",
        check_divisors_vs_oracle(&bounds, fault),
    );
    push("rect-known-pairs", check_known_pairs(fault));
    push("rect-small-side-filter", check_small_side_filter(&bounds));
    push("rect-equable-excluded", check_equable_rectangles(&bounds));
    push("rect-closed-form", check_closed_form());
    push("tri-amicable-search", check_triangle_search(&bounds));

    let mut embeddings = Vec::new();
    for (sides, placement) in TRIANGLE_PLACEMENTS {
        let record = embedding_for(sides, fault);
        let name = format!("tri-embed-{}-{}-{}", sides[0], sides[1], sides[2]);
        push(&name, check_embedding(&record, placement));
        if let Ok(r) = record {
            embeddings.push(r);
        }
    }
    push("tri-equable-count", check_equable_triangles(&bounds));

    let mut reports = Vec::new();
    let mut pair_total = 0;
    let runs = [
        ("rect-report", rectangle_divisor_report()),
        ("tri-report", triangle_report(bounds.tri_max_perimeter)),
        (
            "tri-equable-report",
            equable_triangle_report(bounds.tri_max_perimeter),
        ),
    ];
    for (name, run) in runs {
        match run {
            Ok(mut report) => {
                if name == "rect-report" && fault == Some(Fault::DropRectanglePair) {
                    report.pairs.pop();
                }
                pair_total += report.pairs.len();
                let found = if report.family.is_equable() {
                    format!("{} equable", report.equable.len())
                } else {
                    format!("{} amicable pairs", report.pairs.len())
                };
                push(
                    name,
                    Ok(format!("{found} among {} shapes", report.shapes_scanned)),
                );
                reports.push(report);
            }
            Err(e) => push(name, Err(e.to_string())),
        }
    }
    match crate::runs::equable_rectangle_report(bounds.rect_max_side) {
        Ok(report) => {
            push(
                "rect-equable-report",
                Ok(format!("{} equable rectangles", report.equable.len())),
            );
            reports.push(report);
        }
        Err(e) => push("rect-equable-report", Err(e.to_string())),
    }

    VerificationReport {
        family: "all".into(),
        bounds,
        checks,
        reports,
        embeddings,
        amicable_pairs_total: pair_total,
    }
}
