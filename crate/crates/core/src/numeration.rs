//! The Tribonacci numeration system.
//!
//! Tribonacci numbers are indexed from `-3` with `T(-3) = T(-2) = 0`,
//! `T(-1) = 1` and `T(n) = T(n-1) + T(n-2) + T(n-3)`, so the sequence of
//! place values starts `1, 2, 4, 7, 13, ...`. A binary string
//! `e_1 e_2 ... e_i` (most significant first) denotes `sum e_j T(i - j)`;
//! the canonical representation of `n` is the greedy one, which never
//! contains three consecutive ones.

use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::{Error, Result};

/// Largest `k` with `T(k)` representable as `u64`.
pub const MAX_U64_INDEX: usize = 72;

/// `T(0) ..= T(MAX_U64_INDEX)`.
pub const TRIB_U64: [u64; MAX_U64_INDEX + 1] = {
    let mut t = [0u64; MAX_U64_INDEX + 1];
    t[0] = 1;
    t[1] = 2;
    t[2] = 4;
    let mut k = 3;
    while k <= MAX_U64_INDEX {
        t[k] = t[k - 1] + t[k - 2] + t[k - 3];
        k += 1;
    }
    t
};

/// Append-only memo of `T(n)` for `n >= -3`, shared between threads.
#[derive(Debug)]
pub struct TribNumberTable {
    // values[i] = T(i - 3)
    values: RwLock<Vec<BigUint>>,
}

impl Default for TribNumberTable {
    fn default() -> Self {
        Self::new()
    }
}

impl TribNumberTable {
    pub fn new() -> Self {
        let seed = vec![BigUint::zero(), BigUint::zero(), BigUint::from(1u32)];
        Self { values: RwLock::new(seed) }
    }

    pub fn get(&self, n: i64) -> Result<BigUint> {
        if n < -3 {
            return Err(Error::IndexBelowRange(n));
        }
        let idx = (n + 3) as usize;
        {
            let values = self.values.read().unwrap_or_else(|e| e.into_inner());
            if let Some(v) = values.get(idx) {
                return Ok(v.clone());
            }
        }
        let mut values = self.values.write().unwrap_or_else(|e| e.into_inner());
        while values.len() <= idx {
            let l = values.len();
            let next = &values[l - 1] + &values[l - 2] + &values[l - 3];
            values.push(next);
        }
        Ok(values[idx].clone())
    }
}

fn global_table() -> &'static TribNumberTable {
    static TABLE: OnceLock<TribNumberTable> = OnceLock::new();
    TABLE.get_or_init(TribNumberTable::new)
}

/// `T(n)` for `n >= -3`, arbitrary precision.
pub fn tribonacci(n: i64) -> Result<BigUint> {
    global_table().get(n)
}

/// `T(n)` as a `u64` when `0 <= n <= MAX_U64_INDEX`.
#[inline]
pub fn tribonacci_u64(n: usize) -> Option<u64> {
    TRIB_U64.get(n).copied()
}

/// A binary Tribonacci representation, most significant digit first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TribRepr {
    bits: Vec<bool>,
}

impl TribRepr {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// No leading zero and no run of three ones.
    pub fn is_canonical(&self) -> bool {
        self.bits.first() != Some(&false) && !self.bits.windows(3).any(|w| w == [true; 3])
    }

    pub fn eval(&self) -> BigUint {
        eval_repr(self)
    }

    /// Value as `u64`, or `None` on overflow.
    pub fn eval_u64(&self) -> Option<u64> {
        let len = self.bits.len();
        let mut acc = 0u64;
        for (j, &b) in self.bits.iter().enumerate() {
            if b {
                acc = acc.checked_add(tribonacci_u64(len - 1 - j)?)?;
            }
        }
        Some(acc)
    }

    /// The first `len - k` digits (empty when `k >= len`).
    pub fn drop_last(&self, k: usize) -> TribRepr {
        let keep = self.bits.len().saturating_sub(k);
        Self { bits: self.bits[..keep].to_vec() }
    }

    /// Digit `e_{i - k}` counted from the right (`k = 0` is the last digit);
    /// missing positions read as 0.
    pub fn digit_from_right(&self, k: usize) -> bool {
        self.bits.len().checked_sub(k + 1).is_some_and(|i| self.bits[i])
    }

    pub fn concat(&self, suffix: &TribRepr) -> TribRepr {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&suffix.bits);
        Self { bits }
    }

    /// Left-pad with zeros to `len` digits.
    pub fn padded(&self, len: usize) -> TribRepr {
        let mut bits = vec![false; len.saturating_sub(self.bits.len())];
        bits.extend_from_slice(&self.bits);
        Self { bits }
    }

    pub fn strip_leading_zeros(&self) -> TribRepr {
        let first = self.bits.iter().position(|&b| b).unwrap_or(self.bits.len());
        Self { bits: self.bits[first..].to_vec() }
    }
}

impl fmt::Display for TribRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for TribRepr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(position, digit)| match digit {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::NonBinaryDigit { position, digit }),
            })
            .collect::<Result<Vec<_>>>()
            .map(TribRepr::from_bits)
    }
}

/// `sum e_j T(i - j)` for `E = e_1 ... e_i`.
pub fn eval_repr(e: &TribRepr) -> BigUint {
    let len = e.len();
    e.bits()
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(j, _)| tribonacci((len - 1 - j) as i64).expect("index is nonnegative"))
        .sum()
}

/// Greedy (canonical) representation of `n`.
pub fn canonical_repr(n: u64) -> TribRepr {
    mask_to_repr(canonical_mask(n))
}

/// Greedy representation for arbitrary-precision `n`.
pub fn canonical_repr_big(n: &BigUint) -> TribRepr {
    if n.is_zero() {
        return TribRepr::empty();
    }
    let mut top = 0i64;
    while tribonacci(top + 1).expect("nonnegative") <= *n {
        top += 1;
    }
    let mut rest = n.clone();
    let bits = (0..=top)
        .rev()
        .map(|k| {
            let t = tribonacci(k).expect("nonnegative");
            if t <= rest {
                rest -= t;
                true
            } else {
                false
            }
        })
        .collect();
    TribRepr::from_bits(bits)
}

/// Canonical representation as a place-value mask: bit `k` set iff `T(k)` is
/// used.
#[inline]
pub fn canonical_mask(mut n: u64) -> u128 {
    let mut mask = 0u128;
    let mut k = MAX_U64_INDEX;
    while n > 0 {
        while TRIB_U64[k] > n {
            k -= 1;
        }
        n -= TRIB_U64[k];
        mask |= 1u128 << k;
    }
    mask
}

/// Value of a place-value mask; `None` if it does not fit in `u64`.
#[inline]
pub fn eval_mask(mut mask: u128) -> Option<u64> {
    let mut acc = 0u64;
    while mask != 0 {
        let k = mask.trailing_zeros() as usize;
        acc = acc.checked_add(tribonacci_u64(k)?)?;
        mask &= mask - 1;
    }
    Some(acc)
}

pub fn mask_to_repr(mask: u128) -> TribRepr {
    if mask == 0 {
        return TribRepr::empty();
    }
    let top = 127 - mask.leading_zeros() as usize;
    TribRepr::from_bits((0..=top).rev().map(|k| mask >> k & 1 == 1).collect())
}

/// Rewrite any binary representation into canonical form, returning every
/// intermediate string (the input first, the stripped canonical form last).
///
/// Each step replaces the leftmost `0111` by `1000`; a leading `111` is read
/// as `0111`. Leading zeros are stripped once no `0111` remains.
pub fn normalize_trace(e: &TribRepr) -> Vec<TribRepr> {
    let mut bits = e.bits().to_vec();
    let mut trace = vec![e.clone()];
    loop {
        if bits.len() >= 3 && bits[..3] == [true; 3] {
            bits.insert(0, false);
        }
        let Some(i) = bits.windows(4).position(|w| w == [false, true, true, true]) else {
            break;
        };
        bits[i..i + 4].copy_from_slice(&[true, false, false, false]);
        trace.push(TribRepr::from_bits(bits.clone()));
    }
    let last = TribRepr::from_bits(bits).strip_leading_zeros();
    if trace.last() != Some(&last) {
        trace.push(last);
    }
    trace
}

/// Canonical representation of `eval_repr(e)` by digit rewriting.
pub fn normalize(e: &TribRepr) -> TribRepr {
    normalize_trace(e).pop().expect("trace is never empty")
}

/// `U_m`: zero-padded canonical representations of `0 .. T(m)`, in order.
pub fn enumerate_reprs(m: usize) -> Vec<TribRepr> {
    let count = tribonacci(m as i64).expect("nonnegative").to_u64().expect("enumeration size fits in u64");
    (0..count).map(|n| canonical_repr(n).padded(m)).collect()
}
