//! Command implementations behind the `exile` binary.

use std::fmt;
use std::io::Write;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use exile_core::greedy::{simulate_quadrant_by_columns, simulate_spiral};
use exile_core::grundy::{sg_quadrant, sg_spiral, sg_wythoff};
use exile_core::{BoardKind, SgTable};

pub mod format;
pub mod seq;
pub mod suites;

use format::{write_bfile, write_csv_seq, write_pgm, OutputFormat};
use seq::SeqName;
use suites::{Params, Suite};

/// A command-line usage error (exit status 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// Verification failed without a usage or resource error (exit status 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChecksFailed(pub usize);

impl fmt::Display for ChecksFailed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} check(s) failed", self.0)
    }
}

impl std::error::Error for ChecksFailed {}

#[derive(Debug, Parser)]
#[command(name = "exile", version, about = "Tribonacci queens: sequences, Sprague-Grundy tables and checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Board {
    Spiral,
    Quadrant,
    Wythoff,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum QueenBoard {
    Spiral,
    Quadrant,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the first terms of a sequence.
    Seq {
        name: SeqName,
        count: usize,
        #[arg(long, value_enum, default_value = "bfile")]
        format: OutputFormat,
        /// Index of the first term (A/B/C accept 0 or 1).
        #[arg(long)]
        offset: Option<u64>,
    },
    /// Print a Sprague-Grundy table.
    Sg {
        board: Board,
        /// Spiral cells.
        #[arg(long)]
        cells: Option<u64>,
        /// Quadrant antidiagonals.
        #[arg(long)]
        diagonals: Option<u64>,
        #[arg(long)]
        rows: Option<u64>,
        #[arg(long)]
        cols: Option<u64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        /// Clamp for pgm output.
        #[arg(long, default_value_t = 255)]
        max: u32,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        /// Treat conjecture experiments and as-printed checks as fatal.
        #[arg(long)]
        strict: bool,
        /// Horizon for sequence-level checks.
        #[arg(long, default_value_t = 1_000_000)]
        terms: u64,
        /// Spiral queens placed by spiral-queens.
        #[arg(long, default_value_t = 40_001)]
        queens: u64,
        #[arg(long, default_value_t = 100_000)]
        cells: u64,
        #[arg(long, default_value_t = 2000)]
        diagonals: u64,
        /// Column count: quadrant-queens scans this many, quasiperiod examines columns 1..=this.
        #[arg(long)]
        columns: Option<u64>,
        #[arg(long, default_value_t = 5000)]
        depth: u64,
    },
    /// Queen coordinates as CSV for plotting.
    PlotData { board: QueenBoard, count: usize },
}

pub fn run<W: Write>(cli: Cli, out: &mut W) -> Result<()> {
    match cli.command {
        Command::Seq { name, count, format, offset } => cmd_seq(out, name, count, format, offset),
        Command::Sg { board, cells, diagonals, rows, cols, format, max } => {
            let missing = |flag: &str| Usage(format!("{} board needs --{flag}", board_name(board)));
            let table = match board {
                Board::Spiral => sg_spiral(cells.ok_or_else(|| missing("cells"))?)?,
                Board::Quadrant => sg_quadrant(diagonals.ok_or_else(|| missing("diagonals"))?)?,
                Board::Wythoff => {
                    sg_wythoff(rows.ok_or_else(|| missing("rows"))?, cols.ok_or_else(|| missing("cols"))?)?
                }
            };
            cmd_sg(out, &table, format, max)
        }
        Command::Verify { suite, strict, terms, queens, cells, diagonals, columns, depth } => {
            let default_cols = if suite == Suite::Quasiperiod { 32 } else { 1_000_000 };
            let params = Params { terms, queens, cells, diagonals, columns: columns.unwrap_or(default_cols), depth };
            cmd_verify(out, suite, &params, strict)
        }
        Command::PlotData { board, count } => cmd_plot_data(out, board, count),
    }
}

fn board_name(b: Board) -> &'static str {
    match b {
        Board::Spiral => "spiral",
        Board::Quadrant => "quadrant",
        Board::Wythoff => "wythoff",
    }
}

pub fn cmd_seq<W: Write>(
    out: &mut W,
    name: SeqName,
    count: usize,
    format: OutputFormat,
    offset: Option<u64>,
) -> Result<()> {
    let start = offset.unwrap_or(name.default_offset());
    let terms = name.terms(count, offset)?;
    match format {
        OutputFormat::Bfile => write_bfile(out, start, terms)?,
        OutputFormat::Csv => write_csv_seq(out, start, terms)?,
        OutputFormat::Pgm => return Err(Usage("pgm applies to tables, not sequences".into()).into()),
    }
    Ok(())
}

/// Row `r` of a matrix-shaped table: the triangle `r + c < D` for the
/// quadrant, full rows for Wythoff.
fn matrix_row(t: &SgTable, r: i64) -> Vec<u32> {
    (0..).map_while(|c| t.at(r, c)).collect()
}

fn matrix_shape(t: &SgTable) -> (usize, usize) {
    let width = matrix_row(t, 0).len();
    let height = (0..).take_while(|&r| t.at(r, 0).is_some()).count();
    (height, width)
}

pub fn cmd_sg<W: Write>(out: &mut W, t: &SgTable, format: OutputFormat, max: u32) -> Result<()> {
    match (t.kind, format) {
        (_, OutputFormat::Bfile) => write_bfile(out, 0, t.values.iter().map(|&v| v as u64))?,
        (BoardKind::Spiral, OutputFormat::Csv) => {
            writeln!(out, "cell,x,y,value")?;
            for (n, &v) in t.values.iter().enumerate() {
                let (x, y) = t.coord(n as u64);
                writeln!(out, "{n},{x},{y},{v}")?;
            }
        }
        (BoardKind::Spiral, OutputFormat::Pgm) => {
            // x grows southward, so it indexes image rows
            let k = (0..t.len() as u64).map(|n| t.coord(n).0.abs().max(t.coord(n).1.abs())).max().unwrap_or(0);
            let side = 2 * k as usize + 1;
            let mut img = vec![0u32; side * side];
            for (n, &v) in t.values.iter().enumerate() {
                let (x, y) = t.coord(n as u64);
                img[(x + k) as usize * side + (y + k) as usize] = v;
            }
            write_pgm(out, side, side, max, img)?;
        }
        (_, OutputFormat::Csv) => {
            let (height, width) = matrix_shape(t);
            let header: Vec<String> = (0..width).map(|c| format!("c{c}")).collect();
            writeln!(out, "{}", header.join(","))?;
            for r in 0..height as i64 {
                let row: Vec<String> = matrix_row(t, r).iter().map(u32::to_string).collect();
                writeln!(out, "{}", row.join(","))?;
            }
        }
        (_, OutputFormat::Pgm) => {
            let (height, width) = matrix_shape(t);
            let pixels = (0..height as i64).flat_map(|r| {
                let mut row = matrix_row(t, r);
                row.resize(width, 0);
                row
            });
            write_pgm(out, width, height, max, pixels)?;
        }
    }
    Ok(())
}

pub fn cmd_verify<W: Write>(out: &mut W, suite: Suite, params: &Params, strict: bool) -> Result<()> {
    let outcomes = suites::run(suite, params)?;
    for o in &outcomes {
        writeln!(out, "{o}")?;
    }
    let fatal = outcomes.iter().filter(|o| o.is_fatal(strict)).count();
    let passed = outcomes.iter().filter(|o| o.passed).count();
    writeln!(out, "{passed}/{} passed", outcomes.len())?;
    if fatal > 0 {
        return Err(ChecksFailed(fatal).into());
    }
    Ok(())
}

pub fn cmd_plot_data<W: Write>(out: &mut W, board: QueenBoard, count: usize) -> Result<()> {
    match board {
        QueenBoard::Spiral => {
            writeln!(out, "n,x,y")?;
            for q in simulate_spiral(count) {
                writeln!(out, "{},{},{}", q.ordinal, q.coord.x, q.coord.y)?;
            }
        }
        QueenBoard::Quadrant => {
            // one queen per column, listed by column
            writeln!(out, "n,row,col")?;
            for (c, r) in simulate_quadrant_by_columns(count).into_iter().enumerate() {
                writeln!(out, "{c},{r},{c}")?;
            }
        }
    }
    Ok(())
}

/// Exit status for an error returned by [`run`].
pub fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<Usage>().is_some() {
        2
    } else if matches!(e.downcast_ref::<exile_core::Error>(), Some(exile_core::Error::Capacity { .. })) {
        3
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn output(args: &[&str]) -> (String, Result<()>) {
        let cli = Cli::try_parse_from(std::iter::once("exile").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let r = run(cli, &mut buf);
        (String::from_utf8(buf).unwrap(), r)
    }

    #[test]
    fn plot_rows() {
        let (s, _) = output(&["plot-data", "spiral", "5"]);
        assert_eq!(s, "n,x,y\n0,0,0\n1,1,2\n2,-2,1\n3,-1,-2\n4,2,-1\n");
        let (s, _) = output(&["plot-data", "quadrant", "3"]);
        assert_eq!(s, "n,row,col\n0,0,0\n1,2,1\n2,4,2\n");
        assert_eq!(output(&["plot-data", "spiral", "0"]).0, "n,x,y\n");
    }

    #[test]
    fn tables() {
        let (s, _) = output(&["sg", "quadrant", "--diagonals", "9"]);
        assert_eq!(s.lines().nth(1), Some("0,2,1,5,3,4,9,10,12"));
        assert_eq!(s.lines().last(), Some("8"));
        assert_eq!(output(&["sg", "wythoff", "--rows", "1", "--cols", "1"]).0, "c0\n0\n");
        assert_eq!(output(&["sg", "spiral", "--cells", "1"]).0, "cell,x,y,value\n0,0,0,0\n");
        let (pgm, _) = output(&["sg", "quadrant", "--diagonals", "3", "--format", "pgm", "--max", "1"]);
        assert_eq!(pgm, "P2\n3 3\n1\n0 1 1\n1 1 0\n1 0 0\n");
        let (pgm, _) = output(&["sg", "spiral", "--cells", "9", "--format", "pgm"]);
        assert!(pgm.starts_with("P2\n3 3\n255\n"));
    }

    #[test]
    fn errors_map_to_statuses() {
        let (_, r) = output(&["sg", "quadrant"]);
        assert_eq!(exit_code(&r.unwrap_err()), 2);
        let (_, r) = output(&["seq", "xymp-x", "3", "--format", "pgm"]);
        assert_eq!(exit_code(&r.unwrap_err()), 2);
        let (_, r) = output(&["sg", "quadrant", "--diagonals", "1125899906842624"]);
        assert_eq!(exit_code(&r.unwrap_err()), 3);
    }
}
