//! Benchmark workloads. Each returns a small checksum so the optimizer
//! cannot discard the work.

use exile_core::greedy::{simulate_quadrant_by_columns, simulate_spiral};
use exile_core::grundy::{sg_quadrant, sg_quadrant_columns, sg_spiral, sg_wythoff};
use exile_core::numeration::canonical_mask;
use exile_core::word::abc_closed;
use exile_core::XympTable;

pub fn xymp_mex(rows: usize) -> u64 {
    XympTable::build(rows).quad(rows - 1).p
}

pub fn abc_closed_sum(n: u64) -> u64 {
    (1..=n).map(|i| abc_closed(i).c).fold(0, u64::wrapping_add)
}

pub fn canonical_masks(n: u64) -> u128 {
    (0..n).map(canonical_mask).fold(0, |a, m| a ^ m)
}

pub fn spiral_queens(count: usize) -> u64 {
    simulate_spiral(count).last().map_or(0, |q| q.cell)
}

pub fn quadrant_columns(count: usize) -> u64 {
    simulate_quadrant_by_columns(count).iter().sum()
}

pub fn spiral_sg(cells: u64) -> u32 {
    sg_spiral(cells).expect("fits in memory").max_value()
}

pub fn quadrant_sg(diagonals: u64) -> u32 {
    sg_quadrant(diagonals).expect("fits in memory").max_value()
}

pub fn quadrant_strip(columns: u64, depth: u64) -> u32 {
    let cols = sg_quadrant_columns(columns, depth).expect("fits in memory");
    cols.iter().filter_map(|c| c.last()).sum()
}

pub fn wythoff_sg(side: u64) -> u32 {
    sg_wythoff(side, side).expect("fits in memory").max_value()
}
