//! Cell numbering for the two boards.
//!
//! The spiral board is `Z x Z` with `x` pointing South and `y` pointing East.
//! The spiral leaves the origin heading East and turns counter-clockwise
//! (East, North, West, South) with run lengths `1, 1, 2, 2, 3, 3, ...`.
//! Shell `k >= 1` holds cells `(2k-1)^2 ..= 4k(k+1)` and is walked as four
//! edges of `2k` cells: right (`y = k`), top (`x = -k`), left (`y = -k`),
//! bottom (`x = k`).
//!
//! The quadrant board is `N x N` numbered along upward antidiagonals:
//! `index(r, c) = (r+c)(r+c+1)/2 + c`.

use std::fmt;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpiralCoord {
    pub x: i64,
    pub y: i64,
}

impl SpiralCoord {
    pub const ORIGIN: SpiralCoord = SpiralCoord { x: 0, y: 0 };

    pub fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// Chebyshev distance from the origin.
    pub fn shell(self) -> u64 {
        self.x.unsigned_abs().max(self.y.unsigned_abs())
    }

    /// Quarter turn `(x, y) -> (-y, x)`.
    pub fn rotate(self) -> Self {
        Self { x: -self.y, y: self.x }
    }
}

impl fmt::Display for SpiralCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadCoord {
    pub r: u64,
    pub c: u64,
}

impl QuadCoord {
    pub fn new(r: u64, c: u64) -> Self {
        Self { r, c }
    }
}

/// Position of a spiral cell within its shell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Edge {
    Center,
    /// Edge number `1 ..= 4`.
    Side(u8),
}

/// Shell containing cell `n`.
pub fn shell_of(n: u64) -> u64 {
    n.isqrt().div_ceil(2)
}

pub fn edge_of(n: u64) -> Edge {
    let k = shell_of(n);
    if k == 0 {
        return Edge::Center;
    }
    let ends = [4 * k * k - 2 * k, 4 * k * k, 4 * k * k + 2 * k];
    Edge::Side(1 + ends.iter().filter(|&&e| n > e).count() as u8)
}

/// First cell of shell `k >= 1`.
#[inline]
pub fn shell_start(k: u64) -> u64 {
    (2 * k - 1) * (2 * k - 1)
}

/// Coordinates of spiral cell `n`, in constant time.
pub fn spiral_to_xy(n: u64) -> SpiralCoord {
    let k = shell_of(n);
    if k == 0 {
        return SpiralCoord::ORIGIN;
    }
    let ki = k as i64;
    let off = (n - shell_start(k)) as i64;
    let side = 2 * ki;
    let (edge, t) = (off / side, off % side);
    match edge {
        0 => SpiralCoord::new(ki - 1 - t, ki),
        1 => SpiralCoord::new(-ki, ki - 1 - t),
        2 => SpiralCoord::new(-ki + 1 + t, -ki),
        _ => SpiralCoord::new(ki, -ki + 1 + t),
    }
}

/// Cell number of a spiral coordinate, in constant time.
pub fn xy_to_spiral(p: SpiralCoord) -> u64 {
    let k = p.shell() as i64;
    if k == 0 {
        return 0;
    }
    let (x, y) = (p.x, p.y);
    let start = shell_start(k as u64) as i64;
    let index = if y == k && x != k {
        start + (k - 1 - x)
    } else if x == -k {
        start + 2 * k + (k - 1 - y)
    } else if y == -k {
        start + 4 * k + (x + k - 1)
    } else {
        start + 6 * k + (y + k - 1)
    };
    index as u64
}

/// Iterator over spiral coordinates in cell order, walking step by step.
#[derive(Clone, Debug)]
pub struct SpiralWalk {
    pos: SpiralCoord,
    dir: usize,
    run: u64,
    left_in_run: u64,
    second_leg: bool,
    started: bool,
}

// East, North, West, South with x South and y East.
const STEPS: [(i64, i64); 4] = [(0, 1), (-1, 0), (0, -1), (1, 0)];

impl Default for SpiralWalk {
    fn default() -> Self {
        Self::new()
    }
}

impl SpiralWalk {
    pub fn new() -> Self {
        Self { pos: SpiralCoord::ORIGIN, dir: 0, run: 1, left_in_run: 1, second_leg: false, started: false }
    }
}

impl Iterator for SpiralWalk {
    type Item = SpiralCoord;

    fn next(&mut self) -> Option<SpiralCoord> {
        if !self.started {
            self.started = true;
            return Some(self.pos);
        }
        let (dx, dy) = STEPS[self.dir];
        self.pos = SpiralCoord::new(self.pos.x + dx, self.pos.y + dy);
        self.left_in_run -= 1;
        if self.left_in_run == 0 {
            self.dir = (self.dir + 1) % 4;
            if self.second_leg {
                self.run += 1;
            }
            self.second_leg = !self.second_leg;
            self.left_in_run = self.run;
        }
        Some(self.pos)
    }
}

#[inline]
pub fn quad_index(p: QuadCoord) -> u64 {
    let s = p.r + p.c;
    s * (s + 1) / 2 + p.c
}

#[inline]
pub fn quad_coord(n: u64) -> QuadCoord {
    // largest s with s(s+1)/2 <= n
    let mut s = ((8 * n as u128 + 1).isqrt() as u64 - 1) / 2;
    while s * (s + 1) / 2 > n {
        s -= 1;
    }
    let c = n - s * (s + 1) / 2;
    QuadCoord { r: s - c, c }
}
