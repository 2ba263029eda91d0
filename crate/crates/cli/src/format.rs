use std::io::{self, Write};

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// `n value` per line, OEIS b-file layout.
    Bfile,
    /// Comma-separated with a header row.
    Csv,
    /// Plain-text P2 grayscale; values clamped to `--max`.
    Pgm,
}

pub fn write_bfile<W: Write>(out: &mut W, offset: u64, values: impl IntoIterator<Item = u64>) -> io::Result<()> {
    for (i, v) in values.into_iter().enumerate() {
        writeln!(out, "{} {v}", offset + i as u64)?;
    }
    Ok(())
}

pub fn write_csv_seq<W: Write>(out: &mut W, offset: u64, values: impl IntoIterator<Item = u64>) -> io::Result<()> {
    writeln!(out, "n,value")?;
    for (i, v) in values.into_iter().enumerate() {
        writeln!(out, "{},{v}", offset + i as u64)?;
    }
    Ok(())
}

/// Parses b-file text, skipping blank lines and `#` comments.
pub fn parse_bfile(text: &str) -> Result<Vec<(u64, u64)>, String> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| {
            let mut it = l.split_whitespace();
            let mut num = || -> Result<u64, String> {
                it.next()
                    .ok_or_else(|| format!("line {}: expected two fields", i + 1))?
                    .parse()
                    .map_err(|e| format!("line {}: {e}", i + 1))
            };
            let pair = (num()?, num()?);
            match it.next() {
                Some(_) => Err(format!("line {}: trailing fields", i + 1)),
                None => Ok(pair),
            }
        })
        .collect()
}

/// Writes a `width x height` P2 image from row-major values.
pub fn write_pgm<W: Write>(
    out: &mut W,
    width: usize,
    height: usize,
    max: u32,
    pixels: impl IntoIterator<Item = u32>,
) -> io::Result<()> {
    writeln!(out, "P2\n{width} {height}\n{max}")?;
    let mut pixels = pixels.into_iter();
    for _ in 0..height {
        let row: Vec<String> = pixels.by_ref().take(width).map(|v| v.min(max).to_string()).collect();
        writeln!(out, "{}", row.join(" "))?;
    }
    Ok(())
}
