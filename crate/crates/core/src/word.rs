//! Morphisms over `{a, b, c}` and the Tribonacci word.
//!
//! `T = t_1 t_2 ...` is the fixed point of `a -> ab, b -> ac, c -> a` and is
//! indexed from 1. The theme song `Θ` is the fixed point of
//! `a -> cabaaba, b -> cababa, c -> caba`, indexed from 0; it equals `c·T`.

use std::fmt;

use crate::bits::MexSet;
use crate::numeration::{canonical_mask, eval_mask};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'a' => Ok(Letter::A),
            'b' => Ok(Letter::B),
            'c' => Ok(Letter::C),
            other => Err(Error::UnknownLetter(other)),
        }
    }

    pub fn as_char(self) -> char {
        (b'a' + self as u8) as char
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Parse a word written as a plain string such as `"abac"`.
pub fn parse_word(s: &str) -> Result<Vec<Letter>> {
    s.chars().map(Letter::from_char).collect()
}

pub fn word_to_string(w: &[Letter]) -> String {
    w.iter().map(|l| l.as_char()).collect()
}

/// A letter-to-word map extended to words by concatenation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    images: [Vec<Letter>; 3],
}

impl Morphism {
    pub fn new(images: [Vec<Letter>; 3]) -> Result<Self> {
        if let Some(l) = Letter::ALL.iter().find(|l| images[l.index()].is_empty()) {
            return Err(Error::OutOfRange(format!("image of {l} is empty")));
        }
        Ok(Self { images })
    }

    pub fn parse(a: &str, b: &str, c: &str) -> Result<Self> {
        Self::new([parse_word(a)?, parse_word(b)?, parse_word(c)?])
    }

    fn known(a: &str, b: &str, c: &str) -> Self {
        Self::parse(a, b, c).expect("static morphism is well formed")
    }

    pub fn identity() -> Self {
        Self::known("a", "b", "c")
    }

    /// `a -> ab, b -> ac, c -> a`.
    pub fn tribonacci() -> Self {
        Self::known("ab", "ac", "a")
    }

    /// `a -> cabaaba, b -> cababa, c -> caba`.
    pub fn theme() -> Self {
        Self::known("cabaaba", "cababa", "caba")
    }

    /// `a -> ba, b -> ca, c -> a`; maps `c·T` onto `T`.
    pub fn tau_prime() -> Self {
        Self::known("ba", "ca", "a")
    }

    /// `a -> acab, b -> aab, c -> ab`; the composite of [`Self::tau_prime`]
    /// followed by [`Self::tribonacci`].
    pub fn tau_double_prime() -> Self {
        Self::known("acab", "aab", "ab")
    }

    #[inline]
    pub fn image(&self, l: Letter) -> &[Letter] {
        &self.images[l.index()]
    }

    pub fn apply(&self, w: &[Letter]) -> Vec<Letter> {
        w.iter().flat_map(|&l| self.image(l).iter().copied()).collect()
    }

    /// `self` after `first`: `x -> self(first(x))`.
    pub fn after(&self, first: &Morphism) -> Morphism {
        Morphism { images: Letter::ALL.map(|l| self.apply(first.image(l))) }
    }

    pub fn pow(&self, k: u32) -> Morphism {
        (0..k).fold(Morphism::identity(), |acc, _| self.after(&acc))
    }

    /// `self^k(w)`, computed by repeated application.
    pub fn iterate(&self, w: &[Letter], k: u32) -> Vec<Letter> {
        (0..k).fold(w.to_vec(), |acc, _| self.apply(&acc))
    }
}

/// `τ^n(a)`, the `n`-th Tribonacci block; it has length `T(n)`.
pub fn trib_block(n: u32) -> Vec<Letter> {
    Morphism::tribonacci().iterate(&[Letter::A], n)
}

/// Restartable generator of a morphism fixed point, optionally preceded by
/// one extra letter.
///
/// The fixed point of `σ` with `σ(x) = x·u` is `x·u·σ(u)·σ²(u)·…`; each
/// `σ^k(u)` is produced by a depth-first walk with an explicit stack, so a
/// long prefix is streamed without being held in memory.
#[derive(Clone, Debug)]
pub struct WordStream {
    morphism: Morphism,
    seed: Letter,
    lead: Option<Letter>,
    emitted_head: bool,
    depth: u32,
    stack: Vec<(Letter, u32)>,
}

impl WordStream {
    /// Fixed point of `morphism` starting with `seed`, which must be
    /// prolongable there (`morphism(seed)` starts with `seed` and has length
    /// at least 2).
    pub fn fixed_point(morphism: Morphism, seed: Letter) -> Result<Self> {
        let img = morphism.image(seed);
        if img.len() < 2 || img[0] != seed {
            return Err(Error::OutOfRange(format!("morphism is not prolongable on {seed}")));
        }
        Ok(Self { morphism, seed, lead: None, emitted_head: false, depth: 0, stack: Vec::new() })
    }

    /// Prepend a single letter to the stream.
    pub fn with_lead(mut self, lead: Letter) -> Self {
        self.lead = Some(lead);
        self
    }

    /// The Tribonacci word `t_1 t_2 …`.
    pub fn tribonacci() -> Self {
        Self::fixed_point(Morphism::tribonacci(), Letter::A).expect("τ is prolongable on a")
    }

    /// The theme song `t_0 t_1 …`, generated directly from its own morphism.
    pub fn theme() -> Self {
        Self::fixed_point(Morphism::theme(), Letter::C).expect("θ is prolongable on c")
    }

    /// `c·T`, which equals the theme song.
    pub fn c_tribonacci() -> Self {
        Self::tribonacci().with_lead(Letter::C)
    }

    /// First `n` letters.
    pub fn prefix(&self, n: usize) -> Vec<Letter> {
        self.clone().take(n).collect()
    }

    /// Letters replaced by integers: `a -> subst[0]`, `b -> subst[1]`, `c -> subst[2]`.
    pub fn numeric(self, subst: [u64; 3]) -> impl Iterator<Item = u64> + Clone {
        self.map(move |l| subst[l.index()])
    }

    fn push_tail(&mut self) {
        let tail = &self.morphism.image(self.seed)[1..];
        let depth = self.depth;
        self.stack.extend(tail.iter().rev().map(|&l| (l, depth)));
        self.depth += 1;
    }
}

impl Iterator for WordStream {
    type Item = Letter;

    #[inline]
    fn next(&mut self) -> Option<Letter> {
        if let Some(l) = self.lead.take() {
            return Some(l);
        }
        if !self.emitted_head {
            self.emitted_head = true;
            return Some(self.seed);
        }
        loop {
            if self.stack.is_empty() {
                self.push_tail();
            }
            let (l, d) = self.stack.pop().expect("stack refilled above");
            if d == 0 {
                return Some(l);
            }
            let img = self.morphism.image(l);
            self.stack.extend(img.iter().rev().map(|&m| (m, d - 1)));
        }
    }
}

/// `t_n` of the Tribonacci word (`n >= 1`), read off the canonical
/// representation of `n - 1`: a trailing `0 1^j` selects `a`, `b`, `c` for
/// `j = 0, 1, 2`.
pub fn letter_at(n: u64) -> Result<Letter> {
    if n == 0 {
        return Err(Error::OutOfRange("letter index starts at 1".into()));
    }
    let mask = canonical_mask(n - 1);
    Ok(Letter::ALL[mask.trailing_ones() as usize])
}

/// `(N_a(n), N_b(n), N_c(n))`: letter counts in `t_1 … t_n`, from the digits
/// of the canonical representation of `n`.
pub fn count_letters(n: u64) -> (u64, u64, u64) {
    let m = canonical_mask(n);
    let digit = |k: u32| (m >> k & 1) as u64;
    let head = |k: u32| eval_mask(m >> k).expect("shifted value is smaller");
    (head(1) + digit(0), head(2) + digit(1), head(3) + digit(2))
}

/// Letter counts from the representations of `n - 1`, `n - 2`, `n - 4`.
/// Each entry is `None` where that argument would be negative.
pub fn count_letters_shifted(n: u64) -> [Option<u64>; 3] {
    let one =
        |back: u64, drop: u32| n.checked_sub(back).map(|m| eval_mask(canonical_mask(m) >> drop).expect("smaller") + 1);
    [one(1, 1), one(2, 2), one(4, 3)]
}

/// Positions `A_n < B_n < C_n` of the `n`-th `a`, `b`, `c` in the
/// Tribonacci word; all zero for `n = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbcIndex {
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl AbcIndex {
    pub fn get(&self, l: Letter) -> u64 {
        match l {
            Letter::A => self.a,
            Letter::B => self.b,
            Letter::C => self.c,
        }
    }
}

/// `A_n, B_n, C_n` from the canonical representation `(n-1)_T` with `0`,
/// `01`, `011` appended.
pub fn abc_closed(n: u64) -> AbcIndex {
    if n == 0 {
        return AbcIndex::default();
    }
    let m = canonical_mask(n - 1);
    let ev = |mask: u128| eval_mask(mask).expect("index fits in u64") + 1;
    AbcIndex { n, a: ev(m << 1), b: ev(m << 2 | 0b1), c: ev(m << 3 | 0b11) }
}

/// Rows `0 .. count` built only from the mex recurrences
/// `A_n = mex{A_i, B_i, C_i}`, `B_n = A_n + mex{B_i - A_i, C_i - B_i}`,
/// `C_n = A_n + B_n + n`.
pub fn abc_mex(count: usize) -> Vec<AbcIndex> {
    let mut rows = Vec::with_capacity(count);
    if count == 0 {
        return rows;
    }
    rows.push(AbcIndex::default());
    let (mut positions, mut gaps) = (MexSet::new(), MexSet::new());
    positions.insert(0);
    gaps.insert(0);
    for n in 1..count as u64 {
        let a = positions.mex() as u64;
        let b = a + gaps.mex() as u64;
        let c = a + b + n;
        for v in [a, b, c] {
            positions.insert(v as usize);
        }
        gaps.insert((b - a) as usize);
        gaps.insert((c - b) as usize);
        rows.push(AbcIndex { n, a, b, c });
    }
    rows
}

/// Rows `0 .. count` read off the streamed word by recording occurrences.
pub fn abc_scan(count: usize) -> Vec<AbcIndex> {
    let mut found: [Vec<u64>; 3] = [vec![0], vec![0], vec![0]];
    let mut stream = WordStream::tribonacci();
    let mut pos = 0u64;
    while found.iter().any(|f| f.len() < count) {
        pos += 1;
        let l = stream.next().expect("stream is infinite");
        found[l.index()].push(pos);
    }
    (0..count).map(|n| AbcIndex { n: n as u64, a: found[0][n], b: found[1][n], c: found[2][n] }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::TRIB_U64;

    fn w(s: &str) -> Vec<Letter> {
        parse_word(s).unwrap()
    }

    #[test]
    fn apply_examples() {
        assert_eq!(Morphism::tribonacci().apply(&w("a")), w("ab"));
        assert_eq!(Morphism::identity().apply(&w("cabba")), w("cabba"));
        assert_eq!(Morphism::tribonacci().pow(3).apply(&w("a")), w("abacaba"));
        let alpha = Morphism::tribonacci().pow(3);
        assert_eq!(alpha.image(Letter::B), w("abacab"));
        assert_eq!(alpha.image(Letter::C), w("abac"));
        assert_eq!(Morphism::tribonacci().after(&Morphism::tau_prime()), Morphism::tau_double_prime());
    }

    #[test]
    fn empty_image_rejected() {
        assert!(Morphism::parse("ab", "", "a").is_err());
        assert_eq!(parse_word("abd"), Err(Error::UnknownLetter('d')));
    }

    #[test]
    fn blocks() {
        assert_eq!(trib_block(0), w("a"));
        assert_eq!(trib_block(3), w("abacaba"));
        let b5 = trib_block(5);
        assert_eq!(b5.len(), 24);
        let count = |l| b5.iter().filter(|&&x| x == l).count();
        assert_eq!((count(Letter::A), count(Letter::B), count(Letter::C)), (13, 7, 4));
    }

    #[test]
    fn block_structure() {
        let tau = Morphism::tribonacci();
        let blocks: Vec<_> = (0..=20).map(trib_block).collect();
        for n in 0..=20 {
            assert_eq!(blocks[n].len() as u64, TRIB_U64[n]);
        }
        for n in 3..=20 {
            let glued = [&blocks[n - 1][..], &blocks[n - 2], &blocks[n - 3]].concat();
            assert_eq!(blocks[n], glued);
        }
        // τ^0(c) = c plays the role of the block of index -1
        let block = |k: i64| if k < 0 { w("c") } else { blocks[k as usize].clone() };
        for n in 1..=18i64 {
            assert_eq!(tau.iterate(&w("b"), n as u32), [block(n - 1), block(n - 2)].concat());
        }
        for n in 0..=18i64 {
            assert_eq!(tau.iterate(&w("c"), n as u32), block(n - 1));
        }
    }

    #[test]
    fn stream_prefixes() {
        assert_eq!(word_to_string(&WordStream::tribonacci().prefix(11)), "abacabaabac");
        assert_eq!(word_to_string(&WordStream::theme().prefix(11)), "cabacabaaba");
        assert_eq!(word_to_string(&WordStream::c_tribonacci().prefix(11)), "cabacabaaba");
        assert!(WordStream::tribonacci().prefix(0).is_empty());
        let s = WordStream::tribonacci();
        assert_eq!(s.prefix(1000), s.prefix(1000));
    }

    #[test]
    fn stream_matches_block() {
        let block = trib_block(18);
        assert_eq!(WordStream::tribonacci().prefix(block.len()), block);
    }

    #[test]
    fn theme_identity() {
        let theta = Morphism::theme();
        let alpha = Morphism::tribonacci().pow(3);
        let (mut lhs, mut rhs) = (w("c"), w("c"));
        for k in 0..=7 {
            let mut l = lhs.clone();
            l.push(Letter::C);
            let mut r = vec![Letter::C];
            r.extend_from_slice(&rhs);
            assert_eq!(l, r, "k = {k}");
            lhs = theta.apply(&lhs);
            rhs = alpha.apply(&rhs);
        }
    }

    #[test]
    fn letter_at_examples() {
        assert_eq!(letter_at(1), Ok(Letter::A));
        assert_eq!(letter_at(4), Ok(Letter::C));
        assert_eq!(letter_at(11), Ok(Letter::C));
        assert!(letter_at(0).is_err());
        for (i, l) in WordStream::tribonacci().take(100_000).enumerate() {
            assert_eq!(letter_at(i as u64 + 1).unwrap(), l);
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_letters(10), (6, 3, 1));
        assert_eq!(count_letters(0), (0, 0, 0));
        assert_eq!(count_letters(1), (1, 0, 0));
        let mut tally = [0u64; 3];
        for (i, l) in WordStream::tribonacci().take(20_000).enumerate() {
            tally[l.index()] += 1;
            let n = i as u64 + 1;
            assert_eq!(count_letters(n), (tally[0], tally[1], tally[2]));
            let shifted = count_letters_shifted(n);
            for k in 0..3 {
                if let Some(v) = shifted[k] {
                    assert_eq!(v, tally[k], "letter {k} at n = {n}");
                }
            }
        }
        assert_eq!(count_letters_shifted(3), [Some(2), Some(1), None]);
    }

    #[test]
    fn abc_examples() {
        let at = |n| {
            let r = abc_closed(n);
            (r.a, r.b, r.c)
        };
        assert_eq!(at(5), (8, 15, 28));
        assert_eq!(at(1), (1, 2, 4));
        assert_eq!(at(12), (21, 39, 72));
        assert_eq!(at(0), (0, 0, 0));
        let mex = abc_mex(8);
        assert_eq!((mex[1].a, mex[1].b, mex[1].c), (1, 2, 4));
        assert_eq!((mex[2].a, mex[2].b, mex[2].c), (3, 6, 11));
        assert_eq!((mex[7].a, mex[7].b, mex[7].c), (12, 22, 41));
    }

    #[test]
    fn abc_three_ways() {
        let mex = abc_mex(5000);
        let scan = abc_scan(5000);
        assert_eq!(mex, scan);
        for row in &mex {
            assert_eq!(*row, abc_closed(row.n));
        }
    }

    #[test]
    fn fixpoint_transfer() {
        let source = WordStream::c_tribonacci().prefix(5000);
        let t = WordStream::tribonacci();
        for m in [Morphism::tau_prime(), Morphism::tau_double_prime()] {
            let img = m.apply(&source);
            assert_eq!(img, t.prefix(img.len()));
        }
    }
}
