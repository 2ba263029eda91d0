//! Growable bit sets used for occupancy and value-presence bookkeeping.

const WORD: usize = 64;

/// A growable set of nonnegative integers backed by 64-bit words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        Self { words: Vec::with_capacity(bits.div_ceil(WORD)) }
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / WORD, i % WORD);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let mask = 1u64 << b;
        let fresh = self.words[w] & mask == 0;
        self.words[w] |= mask;
        fresh
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / WORD).is_some_and(|w| w >> (i % WORD) & 1 == 1)
    }

    /// The `w`-th storage word, zero past the end.
    #[inline]
    pub fn word(&self, w: usize) -> u64 {
        self.words.get(w).copied().unwrap_or(0)
    }

    pub fn word_len(&self) -> usize {
        self.words.len()
    }

    /// 64 bits starting at bit `pos`; positions below zero or past the end read as 0.
    #[inline]
    pub fn window(&self, pos: i64) -> u64 {
        if pos >= 0 {
            let p = pos as usize;
            let (w, o) = (p / WORD, p % WORD);
            if o == 0 {
                self.word(w)
            } else {
                (self.word(w) >> o) | (self.word(w + 1) << (WORD - o))
            }
        } else if pos > -(WORD as i64) {
            self.word(0) << ((-pos) as u32)
        } else {
            0
        }
    }

    /// Smallest member-free integer at or after `from`.
    pub fn first_absent_from(&self, from: usize) -> usize {
        let mut w = from / WORD;
        let mut bits = !self.word(w) & (!0u64 << (from % WORD));
        while bits == 0 {
            w += 1;
            bits = !self.word(w);
        }
        w * WORD + bits.trailing_zeros() as usize
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * WORD + t)
            })
        })
    }
}

/// Word-level read access shared by the bit set types.
pub trait Words {
    /// The `w`-th 64-bit word, zero outside storage.
    fn word(&self, w: usize) -> u64;
}

impl Words for BitSet {
    #[inline]
    fn word(&self, w: usize) -> u64 {
        BitSet::word(self, w)
    }
}

/// A bit set storing only the span of words between its smallest and
/// largest member. Suited to lines whose values cluster far from zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BandBitSet {
    base: usize,
    words: Vec<u64>,
}

impl BandBitSet {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / WORD, i % WORD);
        if self.words.is_empty() {
            self.base = w;
        } else if w < self.base {
            let grow = self.base - w;
            self.words.splice(0..0, std::iter::repeat_n(0, grow));
            self.base = w;
        }
        let at = w - self.base;
        if at >= self.words.len() {
            self.words.resize(at + 1, 0);
        }
        let mask = 1u64 << b;
        let fresh = self.words[at] & mask == 0;
        self.words[at] |= mask;
        fresh
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        Words::word(self, i / WORD) >> (i % WORD) & 1 == 1
    }

    pub fn first_absent_from(&self, from: usize) -> usize {
        let mut w = from / WORD;
        let mut bits = !Words::word(self, w) & (!0u64 << (from % WORD));
        while bits == 0 {
            w += 1;
            bits = !Words::word(self, w);
        }
        w * WORD + bits.trailing_zeros() as usize
    }
}

impl Words for BandBitSet {
    #[inline]
    fn word(&self, w: usize) -> u64 {
        match w.checked_sub(self.base) {
            Some(at) => self.words.get(at).copied().unwrap_or(0),
            None => 0,
        }
    }
}

/// Smallest integer absent from every set in `sets`.
#[inline]
pub fn mex_of_union(sets: &[&BitSet]) -> usize {
    let mut w = 0;
    loop {
        let mut acc = 0u64;
        for s in sets {
            acc |= s.word(w);
        }
        if acc != !0 {
            return w * WORD + (!acc).trailing_zeros() as usize;
        }
        w += 1;
    }
}

/// As [`mex_of_union`], given that every value below `start` is known to be
/// present in some set.
#[inline]
pub fn mex_of_union_from<S: Words>(sets: &[&S], start: usize) -> usize {
    let mut w = start / WORD;
    let o = start % WORD;
    let mut acc = if o == 0 { 0 } else { !0u64 >> (WORD - o) };
    loop {
        for s in sets {
            acc |= s.word(w);
        }
        if acc != !0 {
            return w * WORD + (!acc).trailing_zeros() as usize;
        }
        w += 1;
        acc = 0;
    }
}

/// A bit set over signed keys.
#[derive(Clone, Debug, Default)]
pub struct SignedBitSet {
    nonneg: BitSet,
    neg: BitSet,
}

impl SignedBitSet {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn insert(&mut self, k: i64) -> bool {
        if k >= 0 {
            self.nonneg.insert(k as usize)
        } else {
            self.neg.insert((-k - 1) as usize)
        }
    }

    #[inline]
    pub fn contains(&self, k: i64) -> bool {
        if k >= 0 {
            self.nonneg.contains(k as usize)
        } else {
            self.neg.contains((-k - 1) as usize)
        }
    }

    /// 64 membership bits for keys `pos ..= pos + 63`, bit `i` for key `pos + i`.
    #[inline]
    pub fn window(&self, pos: i64) -> u64 {
        self.neg.window(-pos - 64).reverse_bits() | self.nonneg.window(pos)
    }

    /// 64 membership bits for keys `top, top - 1, ..., top - 63`, bit `i` for key `top - i`.
    #[inline]
    pub fn window_desc(&self, top: i64) -> u64 {
        self.window(top - 63).reverse_bits()
    }
}

/// Occupancy set with a monotone "first free" cursor, for mex over a set that
/// only ever gains members.
#[derive(Clone, Debug, Default)]
pub struct MexSet {
    present: BitSet,
    cursor: usize,
}

impl MexSet {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.present.insert(v);
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.present.contains(v)
    }

    /// Current minimum excluded value.
    #[inline]
    pub fn mex(&mut self) -> usize {
        self.cursor = self.present.first_absent_from(self.cursor);
        self.cursor
    }
}
