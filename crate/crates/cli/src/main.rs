//! `amicable`: enumerate, solve, embed and verify amicable lattice polygons.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 well-formed input with a
//! negative mathematical result, 3 verification mismatch.

mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use amicable_core::rectangles::{partner_closed_form, ClosedForm, NoSolution, RectSides};
use amicable_core::report::{EmbeddingRecord, SearchReport};
use amicable_core::runs::{self, Bounds};
use amicable_core::triangles::{as_heronian, embed_triangle, TriangleSides};
use amicable_core::verify::{verify_all, Fault, VerifyOptions};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use render::OutputFormat;

const EXIT_USAGE: u8 = 1;
const EXIT_NEGATIVE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "amicable")]
#[command(about = "Amicable and equable triangles and rectangles on the integer lattice")]
#[command(version)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Amicable rectangles
    #[command(subcommand)]
    Rect(RectCommand),
    /// Heronian and amicable triangles
    #[command(subcommand)]
    Tri(TriCommand),
    /// Equable shapes
    #[command(subcommand)]
    Equable(EquableCommand),
    /// Full verification suite
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand)]
enum RectCommand {
    /// List every amicable rectangle pair via divisor enumeration
    Enumerate,
    /// Solve for the partner b×y of a×x's amicable pair
    Solve {
        #[arg(short = 'a', value_parser = clap::value_parser!(u32).range(1..))]
        a: u32,
        #[arg(short = 'x', value_parser = clap::value_parser!(u32).range(1..))]
        x: u32,
    },
    /// Exhaustive pair search over all rectangles with bounded sides
    Oracle {
        #[arg(long, default_value_t = Bounds::default().rect_max_side, value_parser = clap::value_parser!(u32).range(1..))]
        max_side: u32,
    },
}

#[derive(Subcommand)]
enum TriCommand {
    /// Amicable heronian triangle pairs up to a perimeter bound
    Search {
        #[arg(long, default_value_t = Bounds::default().tri_max_perimeter, value_parser = clap::value_parser!(u32).range(3..))]
        max_perimeter: u32,
    },
    /// Place a heronian triangle on the lattice
    Embed {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        a: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        b: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        c: u32,
    },
    /// Heronian triangles whose area equals their perimeter
    Equable {
        #[arg(long, default_value_t = Bounds::default().tri_max_perimeter, value_parser = clap::value_parser!(u32).range(3..))]
        max_perimeter: u32,
    },
}

#[derive(Subcommand)]
enum EquableCommand {
    /// Rectangles whose area equals their perimeter
    Rect {
        #[arg(long, default_value_t = Bounds::default().rect_max_side, value_parser = clap::value_parser!(u32).range(1..))]
        max_side: u32,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Run every check and print one consolidated report
    All {
        #[arg(long, default_value_t = Bounds::default().rect_max_side, value_parser = clap::value_parser!(u32).range(1..))]
        max_side: u32,
        #[arg(long, default_value_t = Bounds::default().tri_max_perimeter, value_parser = clap::value_parser!(u32).range(3..))]
        max_perimeter: u32,
        /// Corrupt one intermediate result (for testing the failure path)
        #[arg(long, hide = true, value_enum)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    DropRectPair,
    PerturbEmbedding,
}

impl From<FaultArg> for Fault {
    fn from(f: FaultArg) -> Self {
        match f {
            FaultArg::DropRectPair => Fault::DropRectanglePair,
            FaultArg::PerturbEmbedding => Fault::PerturbEmbedding,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => {
            let _ = out.flush();
            ExitCode::from(code)
        }
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run<W: Write>(cli: Cli, out: &mut W) -> anyhow::Result<u8> {
    let format = cli.format;
    match cli.command {
        Command::Rect(RectCommand::Enumerate) => {
            emit_report(out, format, &runs::rectangle_divisor_report()?)
        }
        Command::Rect(RectCommand::Solve { a, x }) => cmd_rect_solve(out, format, a, x),
        Command::Rect(RectCommand::Oracle { max_side }) => {
            emit_report(out, format, &runs::rectangle_oracle_report(max_side)?)
        }
        Command::Tri(TriCommand::Search { max_perimeter }) => {
            emit_report(out, format, &runs::triangle_report(max_perimeter)?)
        }
        Command::Tri(TriCommand::Embed { a, b, c }) => cmd_tri_embed(out, format, a, b, c),
        Command::Tri(TriCommand::Equable { max_perimeter }) => {
            emit_report(out, format, &runs::equable_triangle_report(max_perimeter)?)
        }
        Command::Equable(EquableCommand::Rect { max_side }) => {
            emit_report(out, format, &runs::equable_rectangle_report(max_side)?)
        }
        Command::Verify(VerifyCommand::All {
            max_side,
            max_perimeter,
            inject_fault,
        }) => cmd_verify_all(
            out,
            format,
            VerifyOptions {
                bounds: Bounds {
                    rect_max_side: max_side,
                    tri_max_perimeter: max_perimeter,
                },
                fault: inject_fault.map(Fault::from),
            },
        ),
    }
}

fn emit_report<W: Write>(
    out: &mut W,
    format: OutputFormat,
    report: &SearchReport,
) -> anyhow::Result<u8> {
    match format {
        OutputFormat::Table => render::report_table(out, report)?,
        OutputFormat::Json => render::json(out, report)?,
        OutputFormat::Csv => render::report_csv(out, report)?,
    }
    Ok(0)
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
enum SolveRecord {
    Solution {
        a: u32,
        x: u32,
        b: u32,
        y: u32,
        first: RectRecord,
        second: RectRecord,
    },
    NoSolution {
        a: u32,
        x: u32,
        reason: NoSolution,
    },
}

#[derive(Serialize)]
struct RectRecord {
    sides: [u32; 2],
    area: u64,
    perimeter: u64,
}

impl From<RectSides> for RectRecord {
    fn from(r: RectSides) -> Self {
        Self {
            sides: [r.short(), r.long()],
            area: r.area(),
            perimeter: r.perimeter(),
        }
    }
}

fn cmd_rect_solve<W: Write>(
    out: &mut W,
    format: OutputFormat,
    a: u32,
    x: u32,
) -> anyhow::Result<u8> {
    let record = match partner_closed_form(a, x)? {
        ClosedForm::Solution { b, y } => SolveRecord::Solution {
            a,
            x,
            b,
            y,
            first: RectSides::new(a, b)?.into(),
            second: RectSides::new(x, y)?.into(),
        },
        ClosedForm::None(reason) => SolveRecord::NoSolution { a, x, reason },
    };
    match format {
        OutputFormat::Json => render::json(out, &record)?,
        OutputFormat::Table => match &record {
            SolveRecord::Solution {
                a, x, b, y, first, ..
            } => {
                writeln!(out, "a={a}, x={x}: b={b}, y={y}")?;
                writeln!(
                    out,
                    "{a}×{b} (area {}, perimeter {}) ↔ {x}×{y}",
                    first.area, first.perimeter
                )?;
            }
            SolveRecord::NoSolution { a, x, reason } => {
                writeln!(out, "a={a}, x={x}: no solution ({reason})")?
            }
        },
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "family", "a", "b", "x", "y", "area1", "perim1", "area2", "perim2",
            ])?;
            match &record {
                SolveRecord::Solution {
                    a,
                    x,
                    b,
                    y,
                    first,
                    second,
                } => {
                    let row = [
                        "rectangles".to_string(),
                        a.to_string(),
                        b.to_string(),
                        x.to_string(),
                        y.to_string(),
                        first.area.to_string(),
                        first.perimeter.to_string(),
                        second.area.to_string(),
                        second.perimeter.to_string(),
                    ];
                    w.write_record(&row)?;
                }
                SolveRecord::NoSolution { reason, .. } => eprintln!("no solution: {reason}"),
            }
            w.flush()?;
        }
    }
    Ok(match record {
        SolveRecord::Solution { .. } => 0,
        SolveRecord::NoSolution { .. } => EXIT_NEGATIVE,
    })
}

#[derive(Serialize)]
struct NotHeronian {
    sides: [u32; 3],
    heronian: bool,
    sixteen_area_sq: String,
}

fn cmd_tri_embed<W: Write>(
    out: &mut W,
    format: OutputFormat,
    a: u32,
    b: u32,
    c: u32,
) -> anyhow::Result<u8> {
    let sides = match TriangleSides::new(a, b, c) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(EXIT_USAGE);
        }
    };
    let Some(heronian) = as_heronian(sides) else {
        let record = NotHeronian {
            sides: sides.sides(),
            heronian: false,
            sixteen_area_sq: sides.sixteen_area_sq().to_string(),
        };
        match format {
            OutputFormat::Json => render::json(out, &record)?,
            _ => writeln!(
                out,
                "{sides} is not heronian: 16·area² = {}",
                record.sixteen_area_sq
            )?,
        }
        return Ok(EXIT_NEGATIVE);
    };
    let embedding = match embed_triangle(&heronian) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(EXIT_MISMATCH);
        }
    };
    let record = EmbeddingRecord::from(&embedding);
    match format {
        OutputFormat::Json => render::json(out, &record)?,
        OutputFormat::Table => render::embedding_table(out, &record)?,
        OutputFormat::Csv => render::embedding_csv(&mut *out, &record)?,
    }
    Ok(0)
}

fn cmd_verify_all<W: Write>(
    out: &mut W,
    format: OutputFormat,
    options: VerifyOptions,
) -> anyhow::Result<u8> {
    let report = verify_all(&options);
    match format {
        OutputFormat::Json => render::json(out, &report)?,
        OutputFormat::Table => render::verification_table(out, &report)?,
        OutputFormat::Csv => render::verification_csv(&mut *out, &report)?,
    }
    if report.passed() {
        Ok(0)
    } else {
        for c in report.failed_checks() {
            eprintln!("check failed: {}: {}", c.name, c.detail);
        }
        Ok(EXIT_MISMATCH)
    }
}
