//! Greedy queen placement.
//!
//! Cells are visited in board order and a queen is dropped on every cell not
//! attacked by an earlier queen. Attacks are tracked by four line-occupancy
//! sets: row `x`, column `y`, diagonal `y - x`, antidiagonal `y + x`.
//!
//! Every spiral edge and every quadrant antidiagonal lies on a single line, so
//! each holds at most one queen and can be skipped outright once that line is
//! taken. The remaining keys move by `+-1` per cell, which lets the spiral scan
//! test 64 cells at a time.

use crate::bits::{BitSet, SignedBitSet};
use crate::board::{quad_index, shell_start, QuadCoord, SpiralCoord};
use crate::xymp::XympTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QueenRecord<P = SpiralCoord> {
    pub ordinal: usize,
    pub cell: u64,
    pub coord: P,
}

#[derive(Clone, Debug, Default)]
pub struct LineOccupancy {
    pub rows: SignedBitSet,
    pub cols: SignedBitSet,
    pub diags: SignedBitSet,
    pub antis: SignedBitSet,
}

impl LineOccupancy {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn attacked(&self, x: i64, y: i64) -> bool {
        self.rows.contains(x) || self.cols.contains(y) || self.diags.contains(y - x) || self.antis.contains(y + x)
    }

    #[inline]
    pub fn occupy(&mut self, x: i64, y: i64) {
        self.rows.insert(x);
        self.cols.insert(y);
        self.diags.insert(y - x);
        self.antis.insert(y + x);
    }
}

/// One key family along an edge: key at step `t` is `base + slope * t`.
#[derive(Clone, Copy)]
struct Track<'a> {
    set: &'a SignedBitSet,
    base: i64,
    slope: i64,
}

impl Track<'_> {
    #[inline]
    fn window(&self, t: i64) -> u64 {
        match self.slope {
            1 => self.set.window(self.base + t),
            -1 => self.set.window_desc(self.base - t),
            _ => 0,
        }
    }
}

/// First unattacked step on the edge from `(x0, y0)` in direction `(dx, dy)`
/// of length `len`, or `None`.
fn first_free_on_edge(occ: &LineOccupancy, (x0, y0): (i64, i64), (dx, dy): (i64, i64), len: i64) -> Option<i64> {
    let tracks = [
        Track { set: &occ.rows, base: x0, slope: dx },
        Track { set: &occ.cols, base: y0, slope: dy },
        Track { set: &occ.diags, base: y0 - x0, slope: dy - dx },
        Track { set: &occ.antis, base: y0 + x0, slope: dy + dx },
    ];
    if tracks.iter().any(|tr| tr.slope == 0 && tr.set.contains(tr.base)) {
        return None;
    }
    let mut t = 0;
    while t < len {
        let mut blocked = 0u64;
        for tr in &tracks {
            blocked |= tr.window(t);
        }
        let left = len - t;
        if left < 64 {
            blocked |= !0u64 << left;
        }
        if blocked != !0 {
            return Some(t + (!blocked).trailing_zeros() as i64);
        }
        t += 64;
    }
    None
}

/// Greedy queens on the square spiral, in placement order.
pub fn simulate_spiral(num_queens: usize) -> Vec<QueenRecord> {
    spiral_scan(num_queens, u64::MAX)
}

/// Spiral queens on cells `0 .. num_cells`.
pub fn simulate_spiral_cells(num_cells: u64) -> Vec<QueenRecord> {
    spiral_scan(usize::MAX, num_cells)
}

fn spiral_scan(num_queens: usize, num_cells: u64) -> Vec<QueenRecord> {
    let mut out = Vec::with_capacity(num_queens.min(1 << 20));
    if num_queens == 0 || num_cells == 0 {
        return out;
    }
    let mut occ = LineOccupancy::new();
    occ.occupy(0, 0);
    out.push(QueenRecord { ordinal: 0, cell: 0, coord: SpiralCoord::ORIGIN });
    let mut k = 0i64;
    while out.len() < num_queens && shell_start(k as u64 + 1) < num_cells {
        k += 1;
        let side = 2 * k;
        let edges = [((k - 1, k), (-1, 0)), ((-k, k - 1), (0, -1)), ((1 - k, -k), (1, 0)), ((k, 1 - k), (0, 1))];
        for (e, &(origin, step)) in edges.iter().enumerate() {
            if out.len() == num_queens {
                break;
            }
            if let Some(t) = first_free_on_edge(&occ, origin, step, side) {
                let cell = shell_start(k as u64) + (e as i64 * side + t) as u64;
                if cell >= num_cells {
                    return out;
                }
                let (x, y) = (origin.0 + step.0 * t, origin.1 + step.1 * t);
                occ.occupy(x, y);
                out.push(QueenRecord { ordinal: out.len(), cell, coord: SpiralCoord::new(x, y) });
            }
        }
    }
    out
}

/// Greedy queens on the quadrant, scanning cells in antidiagonal order.
pub fn simulate_quadrant(num_queens: usize) -> Vec<QueenRecord<QuadCoord>> {
    let mut out = Vec::with_capacity(num_queens);
    if num_queens == 0 {
        return out;
    }
    scan_quadrant(u64::MAX, |q| {
        out.push(q);
        out.len() < num_queens
    });
    out
}

/// Quadrant queens on the first `num_antidiagonals` antidiagonals.
pub fn simulate_quadrant_antidiagonals(num_antidiagonals: u64) -> Vec<QueenRecord<QuadCoord>> {
    let mut out = Vec::new();
    scan_quadrant(num_antidiagonals, |q| {
        out.push(q);
        true
    });
    out
}

/// Antidiagonal-order queens until every column below `columns` holds one.
pub fn simulate_quadrant_until_columns(columns: usize) -> Vec<QueenRecord<QuadCoord>> {
    let mut out = Vec::new();
    if columns == 0 {
        return out;
    }
    let mut have = BitSet::with_capacity(columns);
    let mut missing = columns;
    scan_quadrant(u64::MAX, |q| {
        if (q.coord.c as usize) < columns && have.insert(q.coord.c as usize) {
            missing -= 1;
        }
        out.push(q);
        missing > 0
    });
    out
}

fn scan_quadrant(num_antidiagonals: u64, mut keep_going: impl FnMut(QueenRecord<QuadCoord>) -> bool) {
    let (mut rows, mut cols, mut antis) = (BitSet::new(), BitSet::new(), BitSet::new());
    let mut diags = SignedBitSet::new();
    let mut placed = 0;
    for s in 0..num_antidiagonals {
        if antis.contains(s as usize) {
            continue;
        }
        for c in 0..=s {
            let r = s - c;
            if cols.contains(c as usize) || rows.contains(r as usize) || diags.contains(r as i64 - c as i64) {
                continue;
            }
            rows.insert(r as usize);
            cols.insert(c as usize);
            diags.insert(r as i64 - c as i64);
            antis.insert(s as usize);
            let coord = QuadCoord::new(r, c);
            let rec = QueenRecord { ordinal: placed, cell: quad_index(coord), coord };
            placed += 1;
            if !keep_going(rec) {
                return;
            }
            break;
        }
    }
}

/// Occupancy over `0..` answering "least free slot at or after `i`" with
/// path-halving union-find.
#[derive(Clone, Debug, Default)]
struct NextFree(Vec<u32>);

impl NextFree {
    fn grow(&mut self, len: usize) {
        let old = self.0.len();
        if len > old {
            self.0.extend(old as u32..len as u32);
        }
    }

    #[inline]
    fn find(&mut self, mut i: usize) -> usize {
        self.grow(i + 1);
        while self.0[i] as usize != i {
            let next = self.0[i] as usize;
            self.grow(next + 1);
            self.0[i] = self.0[next];
            i = next;
        }
        i
    }

    #[inline]
    fn occupy(&mut self, i: usize) {
        self.grow(i + 2);
        self.0[i] = i as u32 + 1;
    }
}

/// `S_c` for `c < num_columns`: each column takes the least row not attacked
/// by the queens of earlier columns.
///
/// Between the two queen lines nearly every row is blocked by a diagonal, so
/// candidates are visited by jumping between free diagonal keys.
pub fn simulate_quadrant_by_columns(num_columns: usize) -> Vec<u64> {
    let n = num_columns;
    let mut rows = BitSet::with_capacity(2 * n);
    let mut antis = BitSet::with_capacity(3 * n);
    // diagonal key r - c, stored shifted by n
    let mut diags = NextFree::default();
    diags.grow(3 * n + 2);
    let mut first_free = 0usize;
    let mut out = Vec::with_capacity(n);
    for c in 0..n {
        first_free = rows.first_absent_from(first_free);
        let mut k = diags.find(first_free + n - c);
        let row = loop {
            let r = k + c - n;
            if !rows.contains(r) && !antis.contains(r + c) {
                break r;
            }
            k = diags.find(k + 1);
        };
        rows.insert(row);
        antis.insert(row + c);
        diags.occupy(row + n - c);
        out.push(row as u64);
    }
    out
}

/// `S_c` for `c < columns` read off antidiagonal-order records, if all present.
pub fn columns_from_records(records: &[QueenRecord<QuadCoord>], columns: usize) -> Option<Vec<u64>> {
    let mut s = vec![None; columns];
    for q in records {
        if let Some(slot) = s.get_mut(q.coord.c as usize) {
            *slot = Some(q.coord.r);
        }
    }
    s.into_iter().collect()
}

/// `floor(c * phi)` in exact integer arithmetic.
pub fn floor_mul_phi(c: u64) -> u64 {
    let c = c as u128;
    ((c + (5 * c * c).isqrt()) / 2) as u64
}

/// `floor(c / phi) = floor(c * phi) - c`.
pub fn floor_div_phi(c: u64) -> u64 {
    floor_mul_phi(c) - c
}

/// Sign of `m - c * phi` (never zero for `c > 0`).
fn cmp_mul_phi(m: i128, c: i128) -> std::cmp::Ordering {
    // m < c*phi  <=>  2m - c < c*sqrt(5)
    let lhs = 2 * m - c;
    if lhs < 0 {
        return if c == 0 && lhs == 0 { std::cmp::Ordering::Equal } else { std::cmp::Ordering::Less };
    }
    (lhs * lhs).cmp(&(5 * c * c))
}

/// Sign of `m - c / phi`.
fn cmp_div_phi(m: i128, c: i128) -> std::cmp::Ordering {
    // c/phi = c*phi - c
    cmp_mul_phi(m + c, c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Upper,
    Lower,
    Fixed,
}

pub fn branch_of(c: u64, s: u64) -> Branch {
    match s.cmp(&c) {
        std::cmp::Ordering::Greater => Branch::Upper,
        std::cmp::Ordering::Less => Branch::Lower,
        std::cmp::Ordering::Equal => Branch::Fixed,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct BranchStats {
    pub count: usize,
    pub min: f64,
    pub argmin: u64,
    pub max: f64,
    pub argmax: u64,
}

impl BranchStats {
    fn push(&mut self, c: u64, v: f64) {
        if self.count == 0 || v < self.min {
            self.min = v;
            self.argmin = c;
        }
        if self.count == 0 || v > self.max {
            self.max = v;
            self.argmax = c;
        }
        self.count += 1;
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SlopeViolation {
    pub c: u64,
    pub s: u64,
    pub branch: Branch,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SlopeReport {
    /// Index origin the residuals are taken in: row and column `i` count as `i + origin`.
    pub origin: u64,
    /// `S_c - c*phi` where `S_c > c`.
    pub upper: BranchStats,
    /// `S_c - c/phi` where `S_c < c`.
    pub lower: BranchStats,
    pub fixed: Vec<u64>,
    /// Breaches of `-2 < S_c - c*phi < 1` and `-3 < S_c - c/phi < 5`.
    pub knuth_violations: Vec<SlopeViolation>,
    /// Report thresholds `(eps1, eps2)` on `|residual|` per branch.
    pub eps: (f64, f64),
    pub eps_exceeded: Vec<SlopeViolation>,
}

impl SlopeReport {
    pub fn holds(&self) -> bool {
        self.knuth_violations.is_empty()
    }
}

pub const DEFAULT_EPS: (f64, f64) = (2.0, 5.0);

/// Knuth's bounds count rows and columns from 1; read with a zero origin the
/// upper bound already fails at `c = 8`.
pub const KNUTH_ORIGIN: u64 = 1;

pub fn check_slope_bounds(s: &[u64]) -> SlopeReport {
    check_slope_bounds_with(s, KNUTH_ORIGIN, DEFAULT_EPS)
}

pub fn check_slope_bounds_with(s: &[u64], origin: u64, eps: (f64, f64)) -> SlopeReport {
    use std::cmp::Ordering::*;
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut rep = SlopeReport {
        origin,
        upper: BranchStats::default(),
        lower: BranchStats::default(),
        fixed: Vec::new(),
        knuth_violations: Vec::new(),
        eps,
        eps_exceeded: Vec::new(),
    };
    for (c, &sc) in s.iter().enumerate() {
        let c = c as u64;
        let (ci, si) = ((c + origin) as i128, (sc + origin) as i128);
        let (cf, sf) = ((c + origin) as f64, (sc + origin) as f64);
        let branch = branch_of(c, sc);
        let (ok, resid, bound) = match branch {
            Branch::Fixed => {
                rep.fixed.push(c);
                continue;
            }
            // -2 < S - c*phi < 1  <=>  S + 2 > c*phi > S - 1
            Branch::Upper => {
                let ok = cmp_mul_phi(si + 2, ci) == Greater && cmp_mul_phi(si - 1, ci) == Less;
                (ok, sf - cf * phi, eps.0)
            }
            Branch::Lower => {
                let ok = cmp_div_phi(si + 3, ci) == Greater && cmp_div_phi(si - 5, ci) == Less;
                (ok, sf - cf / phi, eps.1)
            }
        };
        let stats = if branch == Branch::Upper { &mut rep.upper } else { &mut rep.lower };
        stats.push(c, resid);
        if !ok {
            rep.knuth_violations.push(SlopeViolation { c, s: sc, branch });
        }
        if resid.abs() >= bound {
            rep.eps_exceeded.push(SlopeViolation { c, s: sc, branch });
        }
    }
    rep
}

/// Index of the first spiral queen that breaks the quadruple pattern
/// `q(4k-3) = (X_k, Y_k)`, `q(4k-2) = (-Y_k, X_k)`, `q(4k-1) = (-X_k, -Y_k)`,
/// `q(4k) = (Y_k, -X_k)`.
pub fn first_theorem_mismatch(queens: &[QueenRecord], table: &XympTable) -> Option<usize> {
    if queens.first().is_some_and(|q| q.coord != SpiralCoord::ORIGIN) {
        return Some(0);
    }
    for (i, q) in queens.iter().enumerate().skip(1) {
        let k = i.div_ceil(4);
        if k >= table.len() {
            return Some(i);
        }
        let row = table.quad(k);
        let (x, y) = (row.x as i64, row.y as i64);
        let want = match i % 4 {
            1 => SpiralCoord::new(x, y),
            2 => SpiralCoord::new(-y, x),
            3 => SpiralCoord::new(-x, -y),
            _ => SpiralCoord::new(y, -x),
        };
        if q.coord != want {
            return Some(i);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::SpiralWalk;

    const SPIRAL_PREFIX: [u64; 18] = [0, 9, 13, 17, 21, 82, 92, 102, 112, 228, 244, 260, 276, 445, 467, 489, 511, 630];
    const S_PREFIX: [u64; 22] = [0, 2, 4, 1, 3, 8, 10, 12, 14, 5, 7, 18, 6, 21, 9, 24, 26, 28, 30, 11, 13, 34];

    fn spiral_naive(num: usize) -> Vec<QueenRecord> {
        let mut occ = LineOccupancy::new();
        let mut out = Vec::new();
        for (n, p) in SpiralWalk::new().enumerate() {
            if out.len() == num {
                break;
            }
            if !occ.attacked(p.x, p.y) {
                occ.occupy(p.x, p.y);
                out.push(QueenRecord { ordinal: out.len(), cell: n as u64, coord: p });
            }
        }
        out
    }

    #[test]
    fn spiral_prefix() {
        let q = simulate_spiral(SPIRAL_PREFIX.len());
        assert_eq!(q.iter().map(|r| r.cell).collect::<Vec<_>>(), SPIRAL_PREFIX);
        let coords: Vec<_> = q[1..6].iter().map(|r| (r.coord.x, r.coord.y)).collect();
        assert_eq!(coords, [(1, 2), (-2, 1), (-1, -2), (2, -1), (3, 5)]);
    }

    #[test]
    fn spiral_matches_cellwise_scan() {
        assert_eq!(simulate_spiral(600), spiral_naive(600));
    }

    #[test]
    fn spiral_records_are_consistent() {
        let q = simulate_spiral(2000);
        let mut occ = LineOccupancy::new();
        for (i, r) in q.iter().enumerate() {
            assert_eq!(r.ordinal, i);
            assert_eq!(crate::board::spiral_to_xy(r.cell), r.coord);
            assert!(!occ.attacked(r.coord.x, r.coord.y));
            occ.occupy(r.coord.x, r.coord.y);
        }
        assert!(q.windows(2).all(|w| w[0].cell < w[1].cell));
    }

    #[test]
    fn spiral_theorem_mapping() {
        let q = simulate_spiral(4 * 10_000 + 1);
        let table = XympTable::build(10_001);
        assert_eq!(first_theorem_mismatch(&q, &table), None);
    }

    #[test]
    fn bounded_scans() {
        let q = simulate_spiral_cells(500);
        assert_eq!(q.iter().map(|r| r.cell).collect::<Vec<_>>(), SPIRAL_PREFIX[..16]);
        assert_eq!(simulate_spiral_cells(1).len(), 1);
        assert_eq!(simulate_spiral_cells(9).len(), 1);
        assert_eq!(simulate_spiral_cells(10).len(), 2);
        let q = simulate_quadrant_antidiagonals(14);
        assert_eq!(q.iter().map(|r| r.cell).collect::<Vec<_>>(), [0, 7, 13, 23, 32, 96]);
        assert!(simulate_quadrant(0).is_empty());
    }

    #[test]
    fn quadrant_prefix() {
        let q = simulate_quadrant(6);
        assert_eq!(q.iter().map(|r| r.cell).collect::<Vec<_>>(), [0, 7, 13, 23, 32, 96]);
        assert_eq!(q[0].coord, QuadCoord::new(0, 0));
    }

    #[test]
    fn column_scan_prefix() {
        let s = simulate_quadrant_by_columns(22);
        assert_eq!(s, S_PREFIX);
        assert_eq!(s[5], 8);
    }

    #[test]
    fn column_scan_equals_antidiagonal_scan() {
        let n = 10_000;
        let records = simulate_quadrant_until_columns(n);
        assert_eq!(columns_from_records(&records, n).unwrap(), simulate_quadrant_by_columns(n));
        assert!(records.windows(2).all(|w| w[0].cell < w[1].cell));
    }

    #[test]
    fn s_is_injective() {
        let s = simulate_quadrant_by_columns(50_000);
        let mut seen = BitSet::new();
        assert!(s.iter().all(|&r| seen.insert(r as usize)));
    }

    #[test]
    fn golden_floors() {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        for c in 0..100_000u64 {
            assert_eq!(floor_mul_phi(c), (c as f64 * phi).floor() as u64);
            assert_eq!(floor_div_phi(c), (c as f64 / phi).floor() as u64);
        }
    }

    #[test]
    fn slope_bounds_small() {
        let s = simulate_quadrant_by_columns(10_000);
        let rep = check_slope_bounds(&s);
        assert!(rep.holds(), "{:?}", &rep.knuth_violations[..rep.knuth_violations.len().min(5)]);
        assert_eq!(rep.fixed, [0]);
        assert_eq!(branch_of(3, s[3]), Branch::Lower);
        assert!(rep.upper.count > 0 && rep.lower.count > 0);
        assert!(rep.eps_exceeded.is_empty());
        // zero-based reading: S_8 = 14 > 8*phi + 1
        let zero = check_slope_bounds_with(&s, 0, DEFAULT_EPS);
        assert_eq!(zero.knuth_violations[0], SlopeViolation { c: 8, s: 14, branch: Branch::Upper });
        let mut bad = s.clone();
        bad[3] = 7;
        assert_eq!(check_slope_bounds(&bad).knuth_violations[0].c, 3);
    }
}
