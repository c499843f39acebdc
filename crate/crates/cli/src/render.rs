//! Table, JSON and CSV rendering. Everything goes through one writer.

use std::io::Write;

use amicable_core::report::{EmbeddingRecord, Family, SearchReport, ShapeRecord};
use amicable_core::verify::VerificationReport;
use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

pub fn json<W: Write, T: Serialize>(out: &mut W, value: &T) -> anyhow::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn shape_label(family: Family, sides: &[u32]) -> String {
    let parts: Vec<String> = sides.iter().map(u32::to_string).collect();
    match family {
        Family::Rectangles | Family::EquableRectangles => parts.join("×"),
        Family::Triangles | Family::EquableTriangles => format!("({})", parts.join(", ")),
    }
}

pub fn report_table<W: Write>(out: &mut W, report: &SearchReport) -> anyhow::Result<()> {
    writeln!(
        out,
        "{} (bound {}, {} shapes scanned)",
        report.family, report.bound, report.shapes_scanned
    )?;
    writeln!(out, "scope: {}", report.scope)?;
    if report.family.is_equable() {
        writeln!(out, "{:<16} {:>8} {:>10}", "shape", "area", "perimeter")?;
        for s in &report.equable {
            writeln!(
                out,
                "{:<16} {:>8} {:>10}",
                shape_label(report.family, &s.sides),
                s.area,
                s.perimeter
            )?;
        }
        writeln!(out, "{} equable shapes", report.equable.len())?;
    } else {
        writeln!(
            out,
            "{:<14}    {:<14} {:>7} {:>7} {:>7} {:>7}",
            "first", "second", "area1", "perim1", "area2", "perim2"
        )?;
        for p in &report.pairs {
            writeln!(
                out,
                "{:<14} ↔  {:<14} {:>7} {:>7} {:>7} {:>7}",
                shape_label(report.family, &p.first.sides),
                shape_label(report.family, &p.second.sides),
                p.first.area,
                p.first.perimeter,
                p.second.area,
                p.second.perimeter
            )?;
        }
        writeln!(out, "{} amicable pairs", report.pairs.len())?;
    }
    Ok(())
}

fn side_headers(prefix: &[&str]) -> Vec<String> {
    prefix.iter().map(|s| s.to_string()).collect()
}

/// CSV for a search report. Rectangle pairs use the flat
/// `family,a,b,x,y,area1,perim1,area2,perim2` layout; triangle pairs spell out
/// all six sides.
pub fn report_csv<W: Write>(out: W, report: &SearchReport) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let family = report.family.as_str().to_string();
    if report.family.is_equable() {
        let mut header = vec!["family".to_string()];
        header.extend(side_headers(match report.family {
            Family::EquableRectangles => &["a", "b"],
            _ => &["a", "b", "c"],
        }));
        header.extend(["area".to_string(), "perimeter".to_string()]);
        w.write_record(&header)?;
        for s in &report.equable {
            w.write_record(shape_row(&family, &[s]))?;
        }
    } else {
        let mut header = vec!["family".to_string()];
        header.extend(side_headers(match report.family {
            Family::Rectangles => &["a", "b", "x", "y"],
            _ => &["a1", "b1", "c1", "a2", "b2", "c2"],
        }));
        header.extend(["area1", "perim1", "area2", "perim2"].map(String::from));
        w.write_record(&header)?;
        for p in &report.pairs {
            w.write_record(shape_row(&family, &[&p.first, &p.second]))?;
        }
    }
    w.flush()?;
    Ok(())
}

fn shape_row(family: &str, shapes: &[&ShapeRecord]) -> Vec<String> {
    let mut row = vec![family.to_string()];
    for s in shapes {
        row.extend(s.sides.iter().map(u32::to_string));
    }
    for s in shapes {
        row.push(s.area.to_string());
        row.push(s.perimeter.to_string());
    }
    row
}

pub fn embedding_table<W: Write>(out: &mut W, e: &EmbeddingRecord) -> anyhow::Result<()> {
    writeln!(out, "triangle {:?}, area {}", e.sides, e.area)?;
    let verts: Vec<String> = e.vertices.iter().map(|v| v.to_string()).collect();
    writeln!(out, "vertices: {}", verts.join(", "))?;
    writeln!(out, "squared sides: {:?}", e.squared_sides)?;
    writeln!(out, "twice-area: {}", e.twice_area)?;
    Ok(())
}

pub fn embedding_csv<W: Write>(out: W, e: &EmbeddingRecord) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "a",
        "b",
        "c",
        "area",
        "x0",
        "y0",
        "x1",
        "y1",
        "x2",
        "y2",
        "twice_area",
    ])?;
    let mut row: Vec<String> = e.sides.iter().map(u32::to_string).collect();
    row.push(e.area.to_string());
    for v in &e.vertices {
        row.push(v.x.to_string());
        row.push(v.y.to_string());
    }
    row.push(e.twice_area.to_string());
    w.write_record(&row)?;
    w.flush()?;
    Ok(())
}

pub fn verification_table<W: Write>(
    out: &mut W,
    report: &VerificationReport,
) -> anyhow::Result<()> {
    writeln!(
        out,
        "verification (rect max side {}, tri max perimeter {})",
        report.bounds.rect_max_side, report.bounds.tri_max_perimeter
    )?;
    let width = report
        .checks
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(0);
    for c in &report.checks {
        writeln!(out, "  [{}] {:<width$}  {}", c.status, c.name, c.detail)?;
    }
    writeln!(out, "{} amicable pairs total", report.amicable_pairs_total)?;
    Ok(())
}

pub fn verification_csv<W: Write>(out: W, report: &VerificationReport) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["check", "status", "detail"])?;
    for c in &report.checks {
        w.write_record([c.name.as_str(), &c.status.to_string(), c.detail.as_str()])?;
    }
    w.flush()?;
    Ok(())
}
