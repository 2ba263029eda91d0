//! The XYMP table.
//!
//! `X_0 = Y_0 = M_0 = P_0 = 0` and for `n > 0`
//! `X_n = mex{X_i, Y_i : i < n}`, `M_n = mex{M_i, P_i : i < n}`,
//! `Y_n = X_n + M_n`, `P_n = X_n + Y_n`. Row `n` is labelled by the letter
//! its difference quadruple encodes; the labels spell the theme song.

use crate::bits::MexSet;
use crate::word::{abc_closed, Letter};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct XympRow {
    pub n: u64,
    pub x: u64,
    pub y: u64,
    pub m: u64,
    pub p: u64,
    pub label: Letter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Column {
    X,
    Y,
    M,
    P,
}

impl Column {
    pub const ALL: [Column; 4] = [Column::X, Column::Y, Column::M, Column::P];

    /// Values of `a, b, c` for which the column's differences equal the theme song.
    pub fn theme_values(self) -> [u64; 3] {
        match self {
            Column::X => [2, 1, 1],
            Column::Y => [3, 3, 2],
            Column::M => [1, 2, 1],
            Column::P => [5, 4, 3],
        }
    }

    #[inline]
    pub fn of(self, q: &Quad) -> u64 {
        match self {
            Column::X => q.x,
            Column::Y => q.y,
            Column::M => q.m,
            Column::P => q.p,
        }
    }
}

/// An unlabelled table row.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Quad {
    pub x: u64,
    pub y: u64,
    pub m: u64,
    pub p: u64,
}

/// Letter encoded by a difference quadruple `(ΔX, ΔY, ΔM, ΔP)`.
pub fn label_from_deltas(d: [u64; 4]) -> Result<Letter> {
    match d {
        [2, 3, 1, 5] => Ok(Letter::A),
        [1, 3, 2, 4] => Ok(Letter::B),
        [1, 2, 1, 3] => Ok(Letter::C),
        other => Err(Error::UnlabeledRow(other)),
    }
}

fn deltas(cur: &Quad, next: &Quad) -> [u64; 4] {
    [next.x - cur.x, next.y - cur.y, next.m - cur.m, next.p - cur.p]
}

/// The table built incrementally from the two mex recurrences.
#[derive(Clone, Debug)]
pub struct XympTable {
    quads: Vec<Quad>,
    xy: MexSet,
    mp: MexSet,
}

impl Default for XympTable {
    fn default() -> Self {
        Self::new()
    }
}

impl XympTable {
    pub fn new() -> Self {
        let (mut xy, mut mp) = (MexSet::new(), MexSet::new());
        xy.insert(0);
        mp.insert(0);
        Self { quads: vec![Quad::default()], xy, mp }
    }

    /// Rows `0 .. count`, all labelled.
    pub fn build(count: usize) -> Self {
        let mut t = Self::new();
        // labels need one row of lookahead
        t.extend_to(count + 1);
        t
    }

    pub fn extend_to(&mut self, rows: usize) {
        self.quads.reserve(rows.saturating_sub(self.quads.len()));
        while self.quads.len() < rows {
            let x = self.xy.mex() as u64;
            let m = self.mp.mex() as u64;
            let y = x + m;
            let p = x + y;
            self.xy.insert(x as usize);
            self.xy.insert(y as usize);
            self.mp.insert(m as usize);
            self.mp.insert(p as usize);
            self.quads.push(Quad { x, y, m, p });
        }
    }

    /// Number of labelled rows.
    pub fn len(&self) -> usize {
        self.quads.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn quad(&self, n: usize) -> Quad {
        self.quads[n]
    }

    pub fn quads(&self) -> &[Quad] {
        &self.quads[..self.len()]
    }

    pub fn label(&self, n: usize) -> Result<Letter> {
        if n >= self.len() {
            return Err(Error::OutOfRange(format!("row {n} of a {}-row table", self.len())));
        }
        label_from_deltas(deltas(&self.quads[n], &self.quads[n + 1]))
    }

    pub fn row(&self, n: usize) -> Result<XympRow> {
        let q = self.quads.get(n).ok_or_else(|| Error::OutOfRange(format!("row {n}")))?;
        Ok(XympRow { n: n as u64, x: q.x, y: q.y, m: q.m, p: q.p, label: self.label(n)? })
    }

    pub fn rows(&self) -> Result<Vec<XympRow>> {
        (0..self.len()).map(|n| self.row(n)).collect()
    }

    /// `Δ` of one column over the labelled rows.
    pub fn deltas(&self, col: Column) -> Vec<u64> {
        self.quads.windows(2).map(|w| col.of(&w[1]) - col.of(&w[0])).collect()
    }

    pub fn column(&self, col: Column) -> Vec<u64> {
        self.quads().iter().map(|q| col.of(q)).collect()
    }
}

/// Row `n` from the occurrence sequences: `X = B - A`, `Y = C - B`,
/// `M = C - 2B + A`, `P = C - A`.
pub fn quad_closed(n: u64) -> Quad {
    let r = abc_closed(n);
    Quad { x: r.b - r.a, y: r.c - r.b, m: r.c + r.a - 2 * r.b, p: r.c - r.a }
}

pub fn row_closed(n: u64) -> Result<XympRow> {
    let (q, next) = (quad_closed(n), quad_closed(n + 1));
    Ok(XympRow { n, x: q.x, y: q.y, m: q.m, p: q.p, label: label_from_deltas(deltas(&q, &next))? })
}

pub fn label_row(n: u64) -> Result<Letter> {
    row_closed(n).map(|r| r.label)
}

/// Checks that two increasing sequences starting at index 1 cover
/// `1 ..= min(last)` exactly once between them. Returns the first
/// offending value.
pub fn complementary_up_to_min(first: &[u64], second: &[u64]) -> std::result::Result<(), u64> {
    let limit = match (first.last(), second.last()) {
        (Some(&a), Some(&b)) => a.min(b),
        _ => return Ok(()),
    };
    let (mut i, mut j) = (0, 0);
    for v in 1..=limit {
        let in_first = first.get(i) == Some(&v);
        let in_second = second.get(j) == Some(&v);
        match (in_first, in_second) {
            (true, false) => i += 1,
            (false, true) => j += 1,
            _ => return Err(v),
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::WordStream;

    // rows 0..=28 of the published table: n, t_n, X, Y, M, P
    const PUBLISHED: [(u64, char, u64, u64, u64, u64); 29] = [
        (0, 'c', 0, 0, 0, 0),
        (1, 'a', 1, 2, 1, 3),
        (2, 'b', 3, 5, 2, 8),
        (3, 'a', 4, 8, 4, 12),
        (4, 'c', 6, 11, 5, 17),
        (5, 'a', 7, 13, 6, 20),
        (6, 'b', 9, 16, 7, 25),
        (7, 'a', 10, 19, 9, 29),
        (8, 'a', 12, 22, 10, 34),
        (9, 'b', 14, 25, 11, 39),
        (10, 'a', 15, 28, 13, 43),
        (11, 'c', 17, 31, 14, 48),
        (12, 'a', 18, 33, 15, 51),
        (13, 'b', 20, 36, 16, 56),
        (14, 'a', 21, 39, 18, 60),
        (15, 'b', 23, 42, 19, 65),
        (16, 'a', 24, 45, 21, 69),
        (17, 'c', 26, 48, 22, 74),
        (18, 'a', 27, 50, 23, 77),
        (19, 'b', 29, 53, 24, 82),
        (20, 'a', 30, 56, 26, 86),
        (21, 'a', 32, 59, 27, 91),
        (22, 'b', 34, 62, 28, 96),
        (23, 'a', 35, 65, 30, 100),
        (24, 'c', 37, 68, 31, 105),
        (25, 'a', 38, 70, 32, 108),
        (26, 'b', 40, 73, 33, 113),
        (27, 'a', 41, 76, 35, 117),
        (28, 'c', 43, 79, 36, 122),
    ];

    #[test]
    fn published_rows() {
        let t = XympTable::build(29);
        for &(n, l, x, y, m, p) in &PUBLISHED {
            let row = t.row(n as usize).unwrap();
            assert_eq!((row.x, row.y, row.m, row.p), (x, y, m, p), "row {n}");
            assert_eq!(row.label.as_char(), l, "row {n}");
            assert_eq!(row_closed(n).unwrap(), row);
        }
    }

    #[test]
    fn row_examples() {
        let t = XympTable::build(12);
        let q = t.quad(5);
        assert_eq!((q.x, q.y, q.m, q.p), (7, 13, 6, 20));
        assert_eq!(t.quad(0), Quad::default());
        let q = t.quad(11);
        assert_eq!((q.x, q.y, q.m, q.p), (17, 31, 14, 48));
        let q = quad_closed(28);
        assert_eq!((q.x, q.y, q.m, q.p), (43, 79, 36, 122));
        assert_eq!(quad_closed(0), Quad::default());
        assert_eq!(label_row(0), Ok(Letter::C));
        assert_eq!(label_row(2), Ok(Letter::B));
        assert_eq!(label_row(7), Ok(Letter::A));
    }

    #[test]
    fn bad_quadruple() {
        assert_eq!(label_from_deltas([2, 4, 2, 6]), Err(Error::UnlabeledRow([2, 4, 2, 6])));
    }

    #[test]
    fn delta_prefixes() {
        let t = XympTable::build(12);
        assert_eq!(t.deltas(Column::P)[..11], [3, 5, 4, 5, 3, 5, 4, 5, 5, 4, 5]);
        assert_eq!(t.deltas(Column::X)[..11], [1, 2, 1, 2, 1, 2, 1, 2, 2, 1, 2]);
        assert_eq!(t.deltas(Column::Y)[0], 2);
    }

    #[test]
    fn deltas_follow_theme() {
        let t = XympTable::build(50_000);
        for col in Column::ALL {
            let d = t.deltas(col);
            let theme: Vec<u64> = WordStream::theme().numeric(col.theme_values()).take(d.len()).collect();
            assert_eq!(d, theme, "{col:?}");
        }
        let labels: Vec<Letter> = (0..t.len()).map(|n| t.label(n).unwrap()).collect();
        assert_eq!(labels, WordStream::theme().prefix(t.len()));
    }

    #[test]
    fn closed_matches_mex() {
        let t = XympTable::build(20_000);
        for (n, q) in t.quads().iter().enumerate() {
            assert_eq!(*q, quad_closed(n as u64));
        }
    }

    #[test]
    fn complementary_columns() {
        let t = XympTable::build(5000);
        let tail = |c| t.column(c)[1..].to_vec();
        assert_eq!(complementary_up_to_min(&tail(Column::X), &tail(Column::Y)), Ok(()));
        assert_eq!(complementary_up_to_min(&tail(Column::M), &tail(Column::P)), Ok(()));
        assert_eq!(complementary_up_to_min(&[1, 2], &[2, 4]), Err(2));
        assert_eq!(complementary_up_to_min(&[1, 4], &[2, 5]), Err(3));
    }
}
