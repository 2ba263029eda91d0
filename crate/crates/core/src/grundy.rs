//! Sprague-Grundy tables.
//!
//! A cell's value is the mex of the values one legal move away. In all three
//! games the legal targets of a cell are exactly the earlier-processed cells
//! on some of its lines, so each line keeps a bitset of the values seen on it
//! and a cell's value is the first value missing from the union of its line
//! sets.
//!
//! * spiral: all four lines through `(x, y)`, toward lower cell numbers;
//! * quadrant: `(r, c-d)`, `(r-d, c)`, `(r-d, c-d)` and `(r+d, c-d)`;
//! * Wythoff: `(x-d, y)`, `(x, y-d)`, `(x-d, y-d)`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::bits::{mex_of_union_from, BandBitSet, BitSet, SignedBitSet};
use crate::board::{quad_coord, shell_of, spiral_to_xy, xy_to_spiral, SpiralCoord, SpiralWalk};
use crate::greedy::{floor_div_phi, floor_mul_phi};
use crate::{Error, Result};

/// Minimum excluded value.
pub fn mex<I: IntoIterator<Item = u32>>(values: I) -> u32 {
    let mut seen = BitSet::new();
    for v in values {
        seen.insert(v as usize);
    }
    seen.first_absent_from(0) as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoardKind {
    Spiral,
    Quadrant,
    Wythoff,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extent {
    Cells(u64),
    Antidiagonals(u64),
    Grid { rows: u64, cols: u64 },
}

/// Values stored flat in cell-number order (row-major for Wythoff).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SgTable {
    pub kind: BoardKind,
    pub extent: Extent,
    pub values: Vec<u32>,
}

impl SgTable {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, cell: u64) -> Option<u32> {
        self.values.get(cell as usize).copied()
    }

    /// Board coordinates `(a, b)` of a cell: `(x, y)` on the spiral,
    /// `(r, c)` on the quadrant, `(x, y)` on the Wythoff grid.
    pub fn coord(&self, cell: u64) -> (i64, i64) {
        match (self.kind, self.extent) {
            (BoardKind::Spiral, _) => {
                let p = spiral_to_xy(cell);
                (p.x, p.y)
            }
            (BoardKind::Wythoff, Extent::Grid { cols, .. }) => ((cell / cols) as i64, (cell % cols) as i64),
            _ => {
                let q = quad_coord(cell);
                (q.r as i64, q.c as i64)
            }
        }
    }

    /// Value at board coordinates, if inside the computed extent.
    pub fn at(&self, a: i64, b: i64) -> Option<u32> {
        let cell = match (self.kind, self.extent) {
            (BoardKind::Spiral, _) => xy_to_spiral(SpiralCoord::new(a, b)),
            (BoardKind::Wythoff, Extent::Grid { rows, cols }) => {
                if a < 0 || b < 0 || a as u64 >= rows || b as u64 >= cols {
                    return None;
                }
                a as u64 * cols + b as u64
            }
            _ => {
                if a < 0 || b < 0 {
                    return None;
                }
                crate::board::quad_index(crate::QuadCoord::new(a as u64, b as u64))
            }
        };
        self.value(cell)
    }

    /// Cells holding value 0, in increasing order.
    pub fn zeros(&self) -> Vec<u64> {
        self.values.iter().enumerate().filter(|(_, &v)| v == 0).map(|(i, _)| i as u64).collect()
    }

    pub fn max_value(&self) -> u32 {
        self.values.iter().copied().max().unwrap_or(0)
    }
}

/// Per-line value sets over a dense key range, each with its own first
/// missing value.
#[derive(Clone, Debug)]
struct LineFamily {
    sets: Vec<BandBitSet>,
    first_absent: Vec<usize>,
    offset: i64,
}

impl LineFamily {
    fn new(lo: i64, hi: i64, unit: &'static str) -> Result<Self> {
        let n = (hi - lo + 1) as usize;
        let mut sets = Vec::new();
        let mut first_absent = Vec::new();
        if sets.try_reserve_exact(n).is_err() || first_absent.try_reserve_exact(n).is_err() {
            return Err(Error::Capacity { completed: 0, unit });
        }
        sets.resize(n, BandBitSet::new());
        first_absent.resize(n, 0);
        Ok(Self { sets, first_absent, offset: -lo })
    }

    #[inline]
    fn get(&self, key: i64) -> (&BandBitSet, usize) {
        let i = (key + self.offset) as usize;
        (&self.sets[i], self.first_absent[i])
    }

    #[inline]
    fn insert(&mut self, key: i64, v: u32) {
        let i = (key + self.offset) as usize;
        self.sets[i].insert(v as usize);
        if v as usize == self.first_absent[i] {
            self.first_absent[i] = self.sets[i].first_absent_from(v as usize);
        }
    }
}

/// Value-presence index for one board: rows, columns, diagonals, antidiagonals.
#[derive(Clone, Debug)]
pub struct LineValueIndex {
    families: Vec<LineFamily>,
}

impl LineValueIndex {
    fn keys(a: i64, b: i64) -> [i64; 4] {
        [a, b, b - a, a + b]
    }

    /// Index over coordinates in `[a_lo, a_hi] x [b_lo, b_hi]`.
    fn new(families: usize, (a_lo, a_hi): (i64, i64), (b_lo, b_hi): (i64, i64), unit: &'static str) -> Result<Self> {
        let ranges = [(a_lo, a_hi), (b_lo, b_hi), (b_lo - a_hi, b_hi - a_lo), (a_lo + b_lo, a_hi + b_hi)];
        let families =
            ranges[..families].iter().map(|&(lo, hi)| LineFamily::new(lo, hi, unit)).collect::<Result<_>>()?;
        Ok(Self { families })
    }

    #[inline]
    fn mex_at(&self, a: i64, b: i64) -> usize {
        let k = Self::keys(a, b);
        match self.families.as_slice() {
            [f0, f1, f2] => {
                let [(s0, m0), (s1, m1), (s2, m2)] = [f0.get(k[0]), f1.get(k[1]), f2.get(k[2])];
                mex_of_union_from(&[s0, s1, s2], m0.max(m1).max(m2))
            }
            [f0, f1, f2, f3] => {
                let [(s0, m0), (s1, m1), (s2, m2), (s3, m3)] = [f0.get(k[0]), f1.get(k[1]), f2.get(k[2]), f3.get(k[3])];
                mex_of_union_from(&[s0, s1, s2, s3], m0.max(m1).max(m2).max(m3))
            }
            _ => unreachable!(),
        }
    }

    #[inline]
    fn record(&mut self, a: i64, b: i64, v: u32) {
        let k = Self::keys(a, b);
        for (f, &key) in self.families.iter_mut().zip(&k) {
            f.insert(key, v);
        }
    }
}

fn to_value(v: usize, cell: usize) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::ValueOverflow(cell))
}

/// Spiral game over cells `0 .. num_cells`.
pub fn sg_spiral(num_cells: u64) -> Result<SgTable> {
    let top = shell_of(num_cells.saturating_sub(1)) as i64;
    let mut index = LineValueIndex::new(4, (-top, top), (-top, top), "shells")?;
    let mut values: Vec<u32> = Vec::new();
    let mut walk = SpiralWalk::new();
    let mut shell = 0u64;
    while (values.len() as u64) < num_cells {
        let end = (4 * shell * (shell + 1) + 1).min(num_cells);
        if values.try_reserve((end - values.len() as u64) as usize).is_err() {
            return Err(Error::Capacity { completed: shell as usize, unit: "shells" });
        }
        while (values.len() as u64) < end {
            let p = walk.next().expect("spiral walk is infinite");
            let v = to_value(index.mex_at(p.x, p.y), values.len())?;
            index.record(p.x, p.y, v);
            values.push(v);
        }
        shell += 1;
    }
    Ok(SgTable { kind: BoardKind::Spiral, extent: Extent::Cells(num_cells), values })
}

/// Values of the region `c <= max_col`, `r + c < num_antidiagonals`, in
/// antidiagonal order. The region is closed under moves.
fn quadrant_region(num_antidiagonals: u64, max_col: u64) -> Result<Vec<u32>> {
    let d = num_antidiagonals as i64;
    let w = max_col.min(num_antidiagonals.saturating_sub(1)) as i64;
    let mut index = LineValueIndex::new(4, (0, d), (0, w), "antidiagonals")?;
    let mut values = Vec::new();
    for s in 0..d {
        if values.try_reserve(s.min(w) as usize + 1).is_err() {
            return Err(Error::Capacity { completed: s as usize, unit: "antidiagonals" });
        }
        for c in 0..=s.min(w) {
            let r = s - c;
            let v = to_value(index.mex_at(r, c), values.len())?;
            index.record(r, c, v);
            values.push(v);
        }
    }
    Ok(values)
}

/// Quadrant game over the first `num_antidiagonals` antidiagonals.
pub fn sg_quadrant(num_antidiagonals: u64) -> Result<SgTable> {
    let values = quadrant_region(num_antidiagonals, num_antidiagonals)?;
    Ok(SgTable { kind: BoardKind::Quadrant, extent: Extent::Antidiagonals(num_antidiagonals), values })
}

/// Columns `0 ..= max_col` of the quadrant table, rows `0 .. depth` each.
pub fn sg_quadrant_columns(max_col: u64, depth: u64) -> Result<Vec<Vec<u32>>> {
    let values = quadrant_region(depth + max_col, max_col)?;
    let w = max_col;
    let pos = |r: u64, c: u64| -> usize {
        let s = r + c;
        let at = if s <= w { s * (s + 1) / 2 } else { (w + 1) * (w + 2) / 2 + (s - w - 1) * (w + 1) };
        (at + c) as usize
    };
    Ok((0..=max_col).map(|c| (0..depth).map(|r| values[pos(r, c)]).collect()).collect())
}

/// Wythoff's game on `rows x cols`, row-major.
pub fn sg_wythoff(rows: u64, cols: u64) -> Result<SgTable> {
    let (h, w) = (rows as i64, cols as i64);
    let mut index = LineValueIndex::new(3, (0, h.max(1) - 1), (0, w.max(1) - 1), "rows")?;
    let mut values = Vec::new();
    for x in 0..h {
        if values.try_reserve(cols as usize).is_err() {
            return Err(Error::Capacity { completed: x as usize, unit: "rows" });
        }
        for y in 0..w {
            let v = to_value(index.mex_at(x, y), values.len())?;
            index.record(x, y, v);
            values.push(v);
        }
    }
    Ok(SgTable { kind: BoardKind::Wythoff, extent: Extent::Grid { rows, cols }, values })
}

/// Row of the Wythoff zero in each column `c < num_columns`, by column scan.
pub fn wythoff_zero_rows(num_columns: usize) -> Vec<u64> {
    let mut rows = BitSet::with_capacity(2 * num_columns);
    let mut diags = SignedBitSet::new();
    let mut first_free = 0;
    let mut out = Vec::with_capacity(num_columns);
    for c in 0..num_columns as i64 {
        first_free = rows.first_absent_from(first_free);
        let mut r = first_free as i64;
        let row = loop {
            let blocked = rows.window(r) | diags.window(r - c);
            if blocked != !0 {
                break r + (!blocked).trailing_zeros() as i64;
            }
            r += 64;
        };
        rows.insert(row as usize);
        diags.insert(row - c);
        out.push(row as u64);
    }
    out
}

/// Beatty-line prediction for the Wythoff zero in column `c`, given which
/// side of the main diagonal it sits on: `floor(c*phi) + 1` above,
/// `floor(c/phi)` below.
pub fn wythoff_beatty_row(c: u64, above: bool) -> u64 {
    if above {
        floor_mul_phi(c) + 1
    } else {
        floor_div_phi(c)
    }
}

/// A line through the board, keyed on coordinates `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineSpec {
    Row(i64),
    Col(i64),
    /// `b - a` constant.
    Diag(i64),
    /// `a + b` constant.
    Anti(i64),
}

impl LineSpec {
    fn holds(self, (a, b): (i64, i64)) -> bool {
        match self {
            LineSpec::Row(k) => a == k,
            LineSpec::Col(k) => b == k,
            LineSpec::Diag(k) => b - a == k,
            LineSpec::Anti(k) => a + b == k,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineReport {
    pub line: LineSpec,
    /// Number of computed cells on the line.
    pub cells: usize,
    pub duplicates: Vec<u32>,
    /// Largest `w` with `0 ..= w` all present; `-1` when 0 is missing.
    pub coverage: i64,
    pub horizon: i64,
}

impl LineReport {
    pub fn covers_horizon(&self) -> bool {
        self.coverage >= self.horizon
    }
}

fn line_cells(t: &SgTable, line: LineSpec) -> Vec<u32> {
    match (t.kind, line) {
        (BoardKind::Quadrant, LineSpec::Row(r)) if r >= 0 => (0..).map_while(|c| t.at(r, c)).collect(),
        (BoardKind::Quadrant, LineSpec::Col(c)) if c >= 0 => (0..).map_while(|r| t.at(r, c)).collect(),
        _ => (0..t.len() as u64).filter(|&n| line.holds(t.coord(n))).map(|n| t.values[n as usize]).collect(),
    }
}

/// Duplicates and value coverage along one line's computed prefix.
pub fn line_permutation_report(t: &SgTable, line: LineSpec, horizon: i64) -> LineReport {
    let vals = line_cells(t, line);
    let mut seen = BitSet::new();
    let mut duplicates: Vec<u32> = vals.iter().copied().filter(|&v| !seen.insert(v as usize)).collect();
    duplicates.sort_unstable();
    duplicates.dedup();
    LineReport { line, cells: vals.len(), duplicates, coverage: seen.first_absent_from(0) as i64 - 1, horizon }
}

pub fn line_reports(t: &SgTable, lines: &[LineSpec], horizon: i64) -> Vec<LineReport> {
    lines.par_iter().map(|&l| line_permutation_report(t, l, horizon)).collect()
}

/// First line the game moves along (rows, columns, diagonals, and
/// antidiagonals except for Wythoff) carrying a repeated value.
pub fn first_line_duplicate(t: &SgTable) -> Option<(LineSpec, u32)> {
    let ctors: [fn(i64) -> LineSpec; 4] = [LineSpec::Row, LineSpec::Col, LineSpec::Diag, LineSpec::Anti];
    // Wythoff has no antidiagonal moves
    let families = if t.kind == BoardKind::Wythoff { 3 } else { 4 };
    let mut seen: HashMap<LineSpec, BitSet> = HashMap::new();
    for (n, &v) in t.values.iter().enumerate() {
        let (a, b) = t.coord(n as u64);
        for (ctor, key) in ctors.iter().zip([a, b, b - a, a + b]).take(families) {
            let line = ctor(key);
            if !seen.entry(line).or_default().insert(v as usize) {
                return Some((line, v));
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPeriod {
    pub period: usize,
    /// Largest index `N` examined.
    pub depth: usize,
    /// Least `K` with a vanishing numerator coefficient at every `k` in `K+p < k <= N`.
    pub preperiod: usize,
    /// Coefficients of `s(x)(1-x)(1-x^p)` up to its last nonzero term.
    pub numerator: Vec<i64>,
    /// Whether the vanishing stretch covers at least half the examined range.
    pub confirmed: bool,
}

impl QuasiPeriod {
    /// Last index where the recurrence fails, if any.
    pub fn last_violation(&self) -> Option<usize> {
        (self.numerator.len() > self.period + 1).then(|| self.numerator.len() - 1)
    }
}

/// Fits `s_n = s_{n-1} + s_{n-p} - s_{n-p-1}` past a preperiod.
pub fn column_quasiperiod(s: &[u32], p: usize) -> QuasiPeriod {
    let at = |i: isize| if i < 0 { 0 } else { s[i as usize] as i64 };
    let coeffs: Vec<i64> =
        (0..s.len() as isize).map(|k| at(k) - at(k - 1) - at(k - p as isize) + at(k - p as isize - 1)).collect();
    let degree = coeffs.iter().rposition(|&v| v != 0);
    let numerator = degree.map_or(Vec::new(), |d| coeffs[..=d].to_vec());
    let depth = s.len().saturating_sub(1);
    let preperiod = degree.map_or(0, |d| d.saturating_sub(p));
    QuasiPeriod { period: p, depth, preperiod, confirmed: degree.is_none_or(|d| 2 * d <= depth), numerator }
}

pub fn columns_quasiperiod(columns: &[Vec<u32>], p: usize) -> Vec<QuasiPeriod> {
    columns.par_iter().map(|c| column_quasiperiod(c, p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{quad_index, QuadCoord};
    use crate::greedy::{simulate_quadrant_antidiagonals, simulate_spiral_cells};

    fn naive_spiral(num_cells: u64) -> Vec<u32> {
        let pts: Vec<SpiralCoord> = (0..num_cells).map(spiral_to_xy).collect();
        let mut vals = Vec::new();
        for (n, p) in pts.iter().enumerate() {
            let reach = pts[..n]
                .iter()
                .zip(&vals)
                .filter(|(q, _)| q.x == p.x || q.y == p.y || q.y - q.x == p.y - p.x || q.y + q.x == p.y + p.x);
            vals.push(mex(reach.map(|(_, &v)| v)));
        }
        vals
    }

    fn naive_quadrant(num_antidiagonals: u64) -> Vec<u32> {
        let cells = num_antidiagonals * (num_antidiagonals + 1) / 2;
        let mut vals: Vec<u32> = Vec::new();
        for n in 0..cells {
            let QuadCoord { r, c } = quad_coord(n);
            let mut opts = Vec::new();
            for d in 1..=c {
                opts.push(vals[quad_index(QuadCoord::new(r, c - d)) as usize]);
                opts.push(vals[quad_index(QuadCoord::new(r + d, c - d)) as usize]);
            }
            for d in 1..=r {
                opts.push(vals[quad_index(QuadCoord::new(r - d, c)) as usize]);
            }
            for d in 1..=r.min(c) {
                opts.push(vals[quad_index(QuadCoord::new(r - d, c - d)) as usize]);
            }
            vals.push(mex(opts));
        }
        vals
    }

    #[test]
    fn mex_examples() {
        assert_eq!(mex([]), 0);
        assert_eq!(mex([0, 1, 2, 4]), 3);
        assert_eq!(mex([1, 2]), 0);
    }

    #[test]
    fn spiral_matches_literal_scan() {
        assert_eq!(sg_spiral(200).unwrap().values, naive_spiral(200));
        assert_eq!(sg_spiral(1).unwrap().values, [0]);
        assert!(sg_spiral(0).unwrap().is_empty());
    }

    #[test]
    fn quadrant_matches_literal_scan() {
        for d in [1, 2, 8, 20] {
            assert_eq!(sg_quadrant(d).unwrap().values, naive_quadrant(d), "{d}");
        }
    }

    #[test]
    fn quadrant_corner() {
        let t = sg_quadrant(9).unwrap();
        let row0: Vec<u32> = (0..9).map(|c| t.at(0, c).unwrap()).collect();
        assert_eq!(row0, [0, 2, 1, 5, 3, 4, 9, 10, 12]);
        let col1: Vec<u32> = (0..8).map(|r| t.at(r, 1).unwrap()).collect();
        assert_eq!(col1, [2, 3, 0, 1, 6, 7, 4, 5]);
        assert_eq!(t.at(1, 3), Some(0));
        assert_eq!(t.at(0, 9), None);
    }

    #[test]
    fn strip_matches_full_table() {
        let t = sg_quadrant(120).unwrap();
        let cols = sg_quadrant_columns(6, 100).unwrap();
        for (c, col) in cols.iter().enumerate() {
            for (r, &v) in col.iter().enumerate() {
                assert_eq!(t.at(r as i64, c as i64), Some(v), "({r}, {c})");
            }
        }
    }

    #[test]
    fn zeros_are_queen_cells() {
        let t = sg_spiral(20_000).unwrap();
        let queens: Vec<u64> = simulate_spiral_cells(20_000).iter().map(|q| q.cell).collect();
        assert_eq!(t.zeros(), queens);
        assert_eq!(
            sg_spiral(500).unwrap().zeros(),
            [0, 9, 13, 17, 21, 82, 92, 102, 112, 228, 244, 260, 276, 445, 467, 489]
        );
        let t = sg_quadrant(300).unwrap();
        let queens: Vec<u64> = simulate_quadrant_antidiagonals(300).iter().map(|q| q.cell).collect();
        assert_eq!(t.zeros(), queens);
    }

    #[test]
    fn wythoff_zeros() {
        let w = wythoff_zero_rows(22);
        assert_eq!(w, [0, 2, 1, 5, 7, 3, 10, 4, 13, 15, 6, 18, 20, 8, 23, 9, 26, 28, 11, 31, 12, 34]);
        assert_eq!(w[3], floor_mul_phi(3) + 1);
        assert_eq!(w[2], floor_div_phi(2));
        let w = wythoff_zero_rows(40);
        let t = sg_wythoff(70, 40).unwrap();
        for c in 0..40 {
            let zero_rows: Vec<i64> = (0..70).filter(|&r| t.at(r, c) == Some(0)).collect();
            assert_eq!(zero_rows, [w[c as usize] as i64]);
        }
        assert_eq!(sg_wythoff(1, 1).unwrap().values, [0]);
        for (c, &r) in wythoff_zero_rows(100_000).iter().enumerate() {
            let c = c as u64;
            assert_eq!(r, wythoff_beatty_row(c, r > c), "c = {c}");
        }
    }

    #[test]
    fn wythoff_literal() {
        let t = sg_wythoff(12, 15).unwrap();
        for x in 0..12i64 {
            for y in 0..15i64 {
                let mut opts = Vec::new();
                for d in 1..=x {
                    opts.push(t.at(x - d, y).unwrap());
                }
                for d in 1..=y {
                    opts.push(t.at(x, y - d).unwrap());
                }
                for d in 1..=x.min(y) {
                    opts.push(t.at(x - d, y - d).unwrap());
                }
                assert_eq!(t.at(x, y), Some(mex(opts)));
            }
        }
    }

    #[test]
    fn lines_are_distinct() {
        assert_eq!(first_line_duplicate(&sg_spiral(5000).unwrap()), None);
        assert_eq!(first_line_duplicate(&sg_quadrant(150).unwrap()), None);
        assert_eq!(first_line_duplicate(&sg_wythoff(50, 50).unwrap()), None);
        let mut t = sg_quadrant(10).unwrap();
        t.values[quad_index(QuadCoord::new(0, 4)) as usize] = 0;
        assert_eq!(first_line_duplicate(&t), Some((LineSpec::Row(0), 0)));
    }

    #[test]
    fn line_reports_on_quadrant() {
        let t = sg_quadrant(300).unwrap();
        let rep = line_permutation_report(&t, LineSpec::Row(0), 50);
        assert!(rep.duplicates.is_empty());
        assert!(rep.covers_horizon());
        assert_eq!(rep.cells, 300);
        let rep = line_permutation_report(&t, LineSpec::Col(1), 50);
        assert_eq!(rep.coverage, 296);
        let empty = sg_quadrant(0).unwrap();
        assert_eq!(line_permutation_report(&empty, LineSpec::Row(3), 0).coverage, -1);
        let spiral = sg_spiral(2000).unwrap();
        let rep = line_permutation_report(&spiral, LineSpec::Row(0), 0);
        assert!(rep.duplicates.is_empty());
        assert_eq!(rep.cells, 45);
    }

    #[test]
    fn column_one_is_nim_sum() {
        let col = &sg_quadrant_columns(1, 10_000).unwrap()[1];
        for (r, &v) in col.iter().enumerate() {
            assert_eq!(v as usize, r ^ 2);
        }
    }

    #[test]
    fn quasiperiod_examples() {
        let cols = sg_quadrant_columns(2, 3000).unwrap();
        let q1 = column_quasiperiod(&cols[1], 4);
        assert_eq!(q1.numerator, [2, 1, -3, 1, 3]);
        assert_eq!(q1.preperiod, 0);
        assert!(q1.confirmed);
        let q2 = column_quasiperiod(&cols[2], 16);
        assert_eq!(q2.numerator, [1, 3, 1, -3, -2, 8, -5, 3, 1, 5, 1, -3, 1, -2, 8, -3, 0, 2]);
        assert_eq!(q2.preperiod, 1);
        assert!(q2.confirmed);
        let zero = column_quasiperiod(&[0; 100], 16);
        assert_eq!((zero.preperiod, zero.numerator.len(), zero.confirmed), (0, 0, true));
        let ramp: Vec<u32> = (0..100).map(|i| i * i).collect();
        let bad = column_quasiperiod(&ramp, 16);
        assert!(!bad.confirmed);
        assert_eq!(bad.last_violation(), Some(99));
    }

    #[test]
    fn oversized_tables_fail_cleanly() {
        let e = Error::Capacity { completed: 3, unit: "shells" };
        assert!(e.to_string().contains('3'));
        assert!(matches!(sg_quadrant(1 << 50), Err(Error::Capacity { unit: "antidiagonals", .. })));
        assert!(matches!(sg_spiral(1 << 60), Err(Error::Capacity { unit: "shells", .. })));
        assert!(matches!(sg_wythoff(1 << 50, 1 << 50), Err(Error::Capacity { .. })));
    }
}
