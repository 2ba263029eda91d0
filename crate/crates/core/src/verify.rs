//! Numeric bounds around the Tribonacci constant.
//!
//! Constants are derived at start-up from `x^3 = x^2 + x + 1` in 512-bit
//! binary fixed point. Bulk scans over `n` use a 100-bit fixed-point copy in
//! `i128`; whenever a floor lands too close to an integer for that copy to
//! decide, the full-precision value is used instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::numeration::{canonical_mask, eval_mask, tribonacci};
use crate::word::{abc_closed, Letter, WordStream};

/// Fractional bits of [`Hp`].
pub const PREC: u32 = 512;

/// A real number `v / 2^PREC`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hp(BigInt);

impl Hp {
    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Hp(v.into() << PREC)
    }

    /// `num / den`, rounded toward negative infinity.
    pub fn ratio(num: i64, den: i64) -> Self {
        Hp((BigInt::from(num) << PREC).div_floor(&BigInt::from(den)))
    }

    /// Parses a plain decimal such as `-0.168114`.
    pub fn from_decimal(s: &str) -> Self {
        let (neg, body) = s.strip_prefix('-').map_or((false, s), |b| (true, b));
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        let digits: BigInt = format!("{int}{frac}").parse().expect("decimal literal");
        let v = Hp((digits << PREC) / BigInt::from(10).pow(frac.len() as u32));
        if neg {
            -v
        } else {
            v
        }
    }

    pub fn zero() -> Self {
        Hp(BigInt::zero())
    }

    pub fn abs(&self) -> Self {
        Hp(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Hp((BigInt::one() << (2 * PREC)) / &self.0)
    }

    pub fn div(&self, o: &Hp) -> Self {
        Hp((&self.0 << PREC) / &o.0)
    }

    pub fn sqrt(&self) -> Self {
        Hp((&self.0 << PREC).sqrt())
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut acc = Hp::from_int(1);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn floor(&self) -> BigInt {
        &self.0 >> PREC
    }

    /// Distance to the nearest integer.
    pub fn dist_to_int(&self) -> Hp {
        let f = Hp(&self.0 - (self.floor() << PREC));
        let g = &Hp::from_int(1) - &f;
        f.min(g)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(PREC as i32))
    }

    /// Value scaled to `bits` fractional bits, rounded down.
    pub fn to_fixed(&self, bits: u32) -> i128 {
        (&self.0 >> (PREC - bits)).to_i128().expect("fits in i128")
    }
}

impl fmt::Debug for Hp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.15}", self.to_f64())
    }
}

impl Add for &Hp {
    type Output = Hp;
    fn add(self, o: &Hp) -> Hp {
        Hp(&self.0 + &o.0)
    }
}

impl Sub for &Hp {
    type Output = Hp;
    fn sub(self, o: &Hp) -> Hp {
        Hp(&self.0 - &o.0)
    }
}

impl Mul for &Hp {
    type Output = Hp;
    fn mul(self, o: &Hp) -> Hp {
        Hp((&self.0 * &o.0) >> PREC)
    }
}

impl Neg for Hp {
    type Output = Hp;
    fn neg(self) -> Hp {
        Hp(-self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cx {
    pub re: Hp,
    pub im: Hp,
}

impl Cx {
    pub fn real(re: Hp) -> Self {
        Cx { re, im: Hp::zero() }
    }

    pub fn mul(&self, o: &Cx) -> Cx {
        Cx { re: &(&self.re * &o.re) - &(&self.im * &o.im), im: &(&self.re * &o.im) + &(&self.im * &o.re) }
    }

    pub fn add(&self, o: &Cx) -> Cx {
        Cx { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn scale(&self, k: &Hp) -> Cx {
        Cx { re: &self.re * k, im: &self.im * k }
    }

    pub fn norm_sqr(&self) -> Hp {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn div(&self, o: &Cx) -> Cx {
        let d = o.norm_sqr();
        let conj = Cx { re: o.re.clone(), im: -o.im.clone() };
        let num = self.mul(&conj);
        Cx { re: num.re.div(&d), im: num.im.div(&d) }
    }

    pub fn abs(&self) -> Hp {
        self.norm_sqr().sqrt()
    }

    pub fn powi(&self, n: u32) -> Cx {
        let mut acc = Cx::real(Hp::from_int(1));
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

/// `p(x) = x^3 - x^2 - x - 1` and `p'(x) = 3x^2 - 2x - 1` at a complex point.
fn dp(z: &Cx) -> Cx {
    let z2 = z.mul(z);
    let three = Hp::from_int(3);
    let two = Hp::from_int(2);
    Cx { re: &(&(&z2.re * &three) - &(&z.re * &two)) - &Hp::from_int(1), im: &(&z2.im * &three) - &(&z.im * &two) }
}

#[derive(Clone, Debug)]
pub struct Constants {
    pub psi: Hp,
    pub phi: Hp,
    pub psi2: Cx,
    pub c1: Hp,
    pub c2: Cx,
    /// Numeric values as printed alongside the Binet form.
    pub printed_c1: Hp,
    pub printed_c2: Cx,
    pub printed_psi2: Cx,
}

impl Constants {
    pub fn derive() -> Self {
        // Newton on p from 2; p is convex and increasing past the root
        let mut x = Hp::from_int(2);
        loop {
            let p = &(&(&x.powi(3) - &x.powi(2)) - &x) - &Hp::from_int(1);
            let d = dp(&Cx::real(x.clone())).re;
            let next = &x - &p.div(&d);
            if (&next - &x).abs() <= Hp(BigInt::from(4)) {
                x = next;
                break;
            }
            x = next;
        }
        let psi = x;
        // p(x) = (x - psi)(x^2 + (psi - 1)x + 1/psi)
        let b = &psi - &Hp::from_int(1);
        let disc = &(&psi.recip() * &Hp::from_int(4)) - &(&b * &b);
        let two = Hp::from_int(2);
        let psi2 = Cx { re: (-b).div(&two), im: disc.sqrt().div(&two) };
        let c1 = psi.powi(3).div(&dp(&Cx::real(psi.clone())).re);
        let c2 = psi2.powi(3).div(&dp(&psi2));
        let phi = (&Hp::from_int(1) + &Hp::from_int(5).sqrt()).div(&two);
        Constants {
            psi,
            phi,
            psi2,
            c1,
            c2,
            printed_c1: Hp::from_decimal("0.336228"),
            printed_c2: Cx { re: Hp::from_decimal("-0.168114"), im: Hp::from_decimal("-0.198324") },
            printed_psi2: Cx { re: Hp::from_decimal("-0.419643"), im: Hp::from_decimal("0.606291") },
        }
    }

    pub fn get() -> &'static Constants {
        static C: OnceLock<Constants> = OnceLock::new();
        C.get_or_init(Constants::derive)
    }

    /// `c1 psi^n + 2 Re(c2 psi2^n)`.
    pub fn binet(&self, n: u32) -> Hp {
        let main = &self.c1 * &self.psi.powi(n);
        let osc = self.c2.mul(&self.psi2.powi(n)).re;
        &main + &(&osc * &Hp::from_int(2))
    }
}

fn big_t(n: u32) -> Hp {
    Hp::from_int(tribonacci(n as i64).expect("n >= 0"))
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub coefficient: f64,
    /// Indices `n` where the inequality fails.
    pub failures: Vec<u32>,
    /// Least `m` with the inequality holding for all `m <= n <= n_max`.
    pub holds_from: Option<u32>,
    /// Largest `lhs / (coefficient * 0.738^n)`.
    pub max_ratio: f64,
    pub argmax: u32,
    /// Smallest `|rhs - lhs| / rhs`.
    pub min_margin: f64,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BinetReport {
    pub n_max: u32,
    /// Largest `|T_n - (c1 psi^n + 2 Re(c2 psi2^n))|`.
    pub binet_error: f64,
    pub checks: Vec<BoundCheck>,
    /// The first inequality evaluated with the printed `c1`.
    pub printed_c1: BoundCheck,
}

impl BinetReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(BoundCheck::holds)
    }
}

fn bound_check(name: &'static str, coefficient: &str, n_max: u32, lhs: impl Fn(u32) -> Hp + Sync) -> BoundCheck {
    let k = Hp::from_decimal(coefficient);
    let rate = Hp::from_decimal("0.738");
    let rows: Vec<(u32, bool, f64, f64)> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let l = lhs(n);
            let r = &k * &rate.powi(n);
            let ratio = l.div(&r).to_f64();
            let margin = (&r - &l).abs().div(&r).to_f64();
            (n, l <= r, ratio, margin)
        })
        .collect();
    let failures: Vec<u32> = rows.iter().filter(|r| !r.1).map(|r| r.0).collect();
    let holds_from = match failures.last() {
        None => Some(0),
        Some(&f) if f < n_max => Some(f + 1),
        Some(_) => None,
    };
    let (argmax, max_ratio) = rows.iter().map(|r| (r.0, r.2)).fold((0, f64::MIN), |a, b| if b.1 > a.1 { b } else { a });
    let min_margin = rows.iter().map(|r| r.3).fold(f64::INFINITY, f64::min);
    BoundCheck { name, coefficient: coefficient.parse().unwrap(), failures, holds_from, max_ratio, argmax, min_margin }
}

/// The four Binet-type estimates for `0 <= n <= n_max`.
pub fn check_binet_bounds(n_max: u32) -> BinetReport {
    let k = Constants::get();
    let psi = &k.psi;
    let binet_error =
        (0..=n_max).into_par_iter().map(|n| (&big_t(n) - &k.binet(n)).abs().to_f64()).reduce(|| 0.0, f64::max);
    let shifted = |j: u32| {
        let pj = psi.powi(j);
        move |n: u32| (&big_t(n + j) - &(&pj * &big_t(n))).abs()
    };
    let checks = vec![
        bound_check("|T(n) - c1 psi^n|", "0.283", n_max, |n| (&big_t(n) - &(&k.c1 * &psi.powi(n))).abs()),
        bound_check("|T(n+1) - psi T(n)|", "0.731", n_max, shifted(1)),
        bound_check("|T(n+2) - psi^2 T(n)|", "1.113", n_max, shifted(2)),
        bound_check("|T(n+3) - psi^3 T(n)|", "1.877", n_max, shifted(3)),
    ];
    let printed_c1 =
        bound_check("|T(n) - 0.336228 psi^n|", "0.283", n_max, |n| (&big_t(n) - &(&k.printed_c1 * &psi.powi(n))).abs());
    BinetReport { n_max, binet_error, checks, printed_c1 }
}

/// Fractional bits of the bulk fixed-point copies.
const Q: u32 = 100;

fn q(v: &Hp) -> i128 {
    v.to_fixed(Q)
}

fn q_to_f64(v: i128) -> f64 {
    v as f64 / 2f64.powi(Q as i32)
}

/// `floor(n * x)` for `x = c / 2^PREC`: decided from the 100-bit copy when the
/// fractional part is clear of both integers, otherwise at full precision.
fn guarded_floor(n: u64, x: &Hp, xq: i128) -> u64 {
    let prod = xq * n as i128;
    let frac = prod & ((1i128 << Q) - 1);
    // error of the product is below n ulps; 2^-60 of slack is ample
    let guard = 1i128 << (Q - 60);
    if frac > guard && frac < (1i128 << Q) - guard {
        (prod >> Q) as u64
    } else {
        (x * &Hp::from_int(n)).floor().to_u64().expect("fits")
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Extrema {
    pub min: f64,
    pub argmin: u64,
    pub max: f64,
    pub argmax: u64,
}

impl Extrema {
    fn scan(limit: u64, f: impl Fn(u64) -> i128) -> Self {
        let (mut min, mut argmin, mut max, mut argmax) = (i128::MAX, 0, i128::MIN, 0);
        for n in 0..limit {
            let d = f(n);
            if d < min {
                (min, argmin) = (d, n);
            }
            if d > max {
                (max, argmax) = (d, n);
            }
        }
        Extrema { min: q_to_f64(min), argmin, max: q_to_f64(max), argmax }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShiftStats {
    /// Number of appended zeros.
    pub zeros: u32,
    pub lower: f64,
    pub upper: f64,
    /// `[(n)_T 0^k]_T - psi^k n` over `n < T_19`.
    pub full: Extrema,
    /// Bound on the contribution of digits past position 18.
    pub tail: f64,
}

impl ShiftStats {
    /// The scanned extrema lie strictly within the bounds.
    pub fn holds_on_range(&self) -> bool {
        self.lower < self.full.min && self.full.max < self.upper
    }

    /// Extrema widened by the tail still fit: the bound then holds for all `n`.
    pub fn holds_everywhere(&self) -> bool {
        self.lower < self.full.min - self.tail && self.full.max + self.tail < self.upper
    }
}

/// `[(n)_T 0^k]_T - psi^k n` over `0 <= n < T_19`, for `k = 1, 2, 3`.
pub fn check_repr_shift_bounds() -> [ShiftStats; 3] {
    let k = Constants::get();
    let limit = tribonacci(19).unwrap().to_u64().unwrap();
    let specs = [(1u32, -0.596, 0.856, "0.731"), (2, -0.883, 1.460, "1.113"), (3, -1.461, 2.298, "1.877")];
    specs.map(|(zeros, lower, upper, coef)| {
        let pk = q(&k.psi.powi(zeros));
        let shift = |mask: u128| {
            let n = eval_mask(mask).expect("fits") as i128;
            ((eval_mask(mask << zeros).expect("fits") as i128) << Q) - pk * n
        };
        let full = Extrema::scan(limit, |n| shift(canonical_mask(n)));
        let rate: f64 = 0.738;
        let tail = coef.parse::<f64>().unwrap() * rate.powi(19) / (1.0 - rate);
        ShiftStats { zeros, lower, upper, full, tail }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloorReport {
    pub scanned: u64,
    /// Least `n` with `A_n`, `B_n`, `C_n` equal to `floor(psi^k n) + 1`.
    pub first_plus_one: [Option<u64>; 3],
    /// `(letter, n)` where the two-sided floor bound fails.
    pub failures: Vec<(Letter, u64)>,
}

/// Scans `1 <= n <= n_max` for the floor bounds on `A_n, B_n, C_n`.
pub fn first_floor_exceptions(n_max: u64) -> FloorReport {
    let k = Constants::get();
    let powers: [Hp; 3] = [k.psi.clone(), k.psi.powi(2), k.psi.powi(3)];
    let qs = powers.clone().map(|p| q(&p));
    let slack = [1u64, 2, 3];
    let mut rep = FloorReport { scanned: n_max, first_plus_one: [None; 3], failures: Vec::new() };
    for n in 1..=n_max {
        let r = abc_closed(n);
        for (i, (&v, letter)) in [r.a, r.b, r.c].iter().zip(Letter::ALL).enumerate() {
            let fl = guarded_floor(n, &powers[i], qs[i]);
            if v + slack[i] < fl || v > fl + 1 {
                rep.failures.push((letter, n));
            }
            if v == fl + 1 && rep.first_plus_one[i].is_none() {
                rep.first_plus_one[i] = Some(n);
            }
        }
    }
    rep
}

#[derive(Clone, Debug, PartialEq)]
pub struct CountReport {
    pub n_max: u64,
    /// `(letter, n)` where `floor(n/psi^k) <= N(n) <= floor(n/psi^k) + 1` fails.
    pub failures: Vec<(Letter, u64)>,
    /// Per letter: how often `n/psi^k <= N(n)` fails, and the first such `n`.
    pub unfloored_lower: [(u64, Option<u64>); 3],
    /// `n` where `psi C_n > C_{n+1}` fails.
    pub psi_c_failures: Vec<u64>,
    /// Smallest distance from `n/psi^k` to an integer.
    pub min_margin: f64,
}

impl CountReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.psi_c_failures.is_empty()
    }
}

/// Letter counts of the Tribonacci word against `n/psi^k`, and
/// `psi C_n > C_{n+1}`, for `n <= n_max`.
pub fn check_count_bounds(n_max: u64) -> CountReport {
    let k = Constants::get();
    let inv: [Hp; 3] = [k.psi.recip(), k.psi.recip().powi(2), k.psi.recip().powi(3)];
    let qs = inv.clone().map(|p| q(&p));
    let mut counts = [0u64; 3];
    let mut rep = CountReport {
        n_max,
        failures: Vec::new(),
        unfloored_lower: [(0, None); 3],
        psi_c_failures: Vec::new(),
        min_margin: f64::INFINITY,
    };
    let unit = 1i128 << Q;
    for (i, letter) in WordStream::tribonacci().take(n_max as usize).enumerate() {
        let n = i as u64 + 1;
        counts[letter.index()] += 1;
        for (j, l) in Letter::ALL.into_iter().enumerate() {
            let have = counts[j];
            let x = qs[j] * n as i128;
            let frac = x & (unit - 1);
            rep.min_margin = rep.min_margin.min(q_to_f64(frac.min(unit - frac)));
            let fl = guarded_floor(n, &inv[j], qs[j]);
            if have < fl || have > fl + 1 {
                rep.failures.push((l, n));
            }
            if ((have as i128) << Q) < x {
                let u = &mut rep.unfloored_lower[j];
                u.0 += 1;
                u.1.get_or_insert(n);
            }
        }
    }
    let psi = q(&k.psi);
    let mut c_next = abc_closed(2).c;
    for n in 2..=n_max {
        let c = c_next;
        c_next = abc_closed(n + 1).c;
        if psi * c as i128 <= (c_next as i128) << Q {
            rep.psi_c_failures.push(n);
        }
    }
    rep
}

/// Largest set of mutually non-attacking queens on the triangle
/// `{(r, c) : r + c < n}`.
pub fn max_nonattacking_triangle(n: usize) -> usize {
    struct Search {
        n: usize,
        cols: u32,
        diags: u64,
        antis: u32,
        best: usize,
    }
    impl Search {
        fn go(&mut self, r: usize, placed: usize) {
            if placed + (self.n - r) <= self.best {
                return;
            }
            if r == self.n {
                self.best = placed;
                return;
            }
            for c in 0..self.n - r {
                let d = r + self.n - c;
                if self.cols >> c & 1 == 1 || self.diags >> d & 1 == 1 || self.antis >> (r + c) & 1 == 1 {
                    continue;
                }
                self.cols |= 1 << c;
                self.diags |= 1 << d;
                self.antis |= 1 << (r + c);
                self.go(r + 1, placed + 1);
                self.cols &= !(1 << c);
                self.diags &= !(1 << d);
                self.antis &= !(1 << (r + c));
            }
            self.go(r + 1, placed);
        }
    }
    assert!(n <= 20, "triangle side {n} too large for exhaustive search");
    let mut s = Search { n, cols: 0, diags: 0, antis: 0, best: 0 };
    s.go(0, 0);
    s.best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_satisfy_their_polynomials() {
        let k = Constants::get();
        let psi = &k.psi;
        let resid = &(&(&psi.powi(3) - &psi.powi(2)) - psi) - &Hp::from_int(1);
        assert!(resid.abs().to_f64() < 1e-140);
        assert!((psi.to_f64() - 1.839286755214161).abs() < 1e-15);
        assert!((k.phi.to_f64() - 1.618033988749895).abs() < 1e-15);
        let z = &k.psi2;
        let p = z.powi(3).add(&z.powi(2).scale(&Hp::from_int(-1))).add(&z.scale(&Hp::from_int(-1)));
        assert!((p.re.to_f64() - 1.0).abs() < 1e-140 && p.im.abs().to_f64() < 1e-140);
        assert!((z.re.to_f64() + 0.419643).abs() < 1e-6);
        assert!((z.im.to_f64() - 0.606291).abs() < 1e-6);
        assert!((z.abs().to_f64() - 0.7373527).abs() < 1e-7);
    }

    #[test]
    fn binet_is_exact() {
        let k = Constants::get();
        for n in 0..=200 {
            let err = (&big_t(n) - &k.binet(n)).abs().to_f64();
            assert!(err < 1e-90, "n = {n}: {err}");
        }
        assert!((k.c1.to_f64() - 1.137_451_572_282_629).abs() < 1e-13);
    }

    #[test]
    fn printed_constants_are_shifted_two_places() {
        // printed c1, c2 equal psi_i / p'(psi_i), i.e. our c_i / psi_i^2
        let k = Constants::get();
        let c1 = k.c1.div(&k.psi.powi(2));
        assert!((c1.to_f64() - k.printed_c1.to_f64()).abs() < 1e-6);
        let c2 = k.c2.div(&k.psi2.powi(2));
        assert!((c2.re.to_f64() - k.printed_c2.re.to_f64()).abs() < 1e-6);
        assert!((c2.im.to_f64() - k.printed_c2.im.to_f64()).abs() < 1e-6);
    }

    #[test]
    fn binet_estimates() {
        let rep = check_binet_bounds(200);
        assert!(rep.binet_error < 1e-90);
        for c in &rep.checks {
            assert!(c.holds(), "{c:?}");
            assert_eq!(c.holds_from, Some(0));
            assert!(c.min_margin > 1e-10);
        }
        assert!(rep.printed_c1.failures.len() == 201);
        assert_eq!(rep.printed_c1.holds_from, None);
        let k = Constants::get();
        let d20 = (&big_t(20) - &(&k.c1 * &k.psi.powi(20))).abs().to_f64();
        assert!(d20 < 1e-2);
        let d21 = (&big_t(21) - &(&k.psi * &big_t(20))).abs().to_f64();
        assert!(d21 <= 0.731 * 0.738f64.powi(20));
    }

    #[test]
    fn shift_extrema() {
        let [one, two, three] = check_repr_shift_bounds();
        let m = one.full;
        assert_eq!(m.argmin, 65915);
        assert!((m.min + 0.58646994143).abs() < 1e-10, "{}", m.min);
        assert_eq!(m.argmax, 78748);
        assert!(0.846 < m.max && m.max < 0.848, "{}", m.max);
        for s in [one, two, three] {
            assert!(s.holds_on_range() && s.holds_everywhere(), "{s:?}");
        }
        assert!(one.tail <= 0.009);
    }

    #[test]
    fn floor_exceptions() {
        let rep = first_floor_exceptions(20_000);
        assert!(rep.failures.is_empty());
        assert_eq!(rep.first_plus_one, [Some(12737), Some(329), Some(2047)]);
    }

    #[test]
    fn guarded_floor_agrees_with_full_precision() {
        let k = Constants::get();
        let x = k.psi.powi(2);
        let xq = q(&x);
        for n in (1..2_000_000u64).step_by(997) {
            assert_eq!(guarded_floor(n, &x, xq), (&x * &Hp::from_int(n)).floor().to_u64().unwrap());
        }
    }

    #[test]
    fn count_bounds() {
        let rep = check_count_bounds(100_000);
        assert!(rep.holds(), "{:?}", &rep.failures[..rep.failures.len().min(4)]);
        assert!(rep.min_margin > 1e-10);
        // without the floor the lower bound already fails at n = 1 or 2
        assert_eq!(rep.unfloored_lower.map(|u| u.1), [Some(2), Some(1), Some(1)]);
        assert_eq!(crate::word::count_letters(10).0, 6);
    }

    #[test]
    fn triangle_queens() {
        assert_eq!(max_nonattacking_triangle(1), 1);
        assert_eq!(max_nonattacking_triangle(2), 1);
        for n in 1..=10 {
            let m = max_nonattacking_triangle(n);
            assert!(3 * m <= 2 * n + 3, "n = {n}: {m}");
        }
    }

    #[test]
    fn decimal_parsing() {
        assert_eq!(Hp::from_decimal("1.5"), Hp::ratio(3, 2));
        assert_eq!(Hp::from_decimal("-0.25"), Hp::ratio(-1, 4));
        assert_eq!(Hp::from_decimal("7"), Hp::from_int(7));
    }
}
