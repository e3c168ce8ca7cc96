//! Dense fixed-width bitsets used for pair-coverage bookkeeping.
//!
//! The solver's feasibility test is "OR a handful of these together and
//! check for all-ones", so the representation is a plain `Vec<u64>` with
//! the tail bits of the last word kept at zero.

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bitset {
    words: Vec<u64>,
    len: usize,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Bitset {
            words: vec![0u64; len.div_ceil(64)],
            len,
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn copy_from(&mut self, other: &Bitset) {
        debug_assert_eq!(self.len, other.len);
        self.words.copy_from_slice(&other.words);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when every one of the `len` tracked bits is set.
    pub fn is_full(&self) -> bool {
        if self.len == 0 {
            return true;
        }
        let full = self.len / 64;
        if self.words[..full].iter().any(|&w| w != u64::MAX) {
            return false;
        }
        let tail = self.len % 64;
        tail == 0 || self.words[full] == (1u64 << tail) - 1
    }

    /// True when `self | other` covers all tracked bits, without materializing
    /// the union.
    pub fn union_is_full(&self, other: &Bitset) -> bool {
        debug_assert_eq!(self.len, other.len);
        if self.len == 0 {
            return true;
        }
        let full = self.len / 64;
        for i in 0..full {
            if self.words[i] | other.words[i] != u64::MAX {
                return false;
            }
        }
        let tail = self.len % 64;
        tail == 0 || (self.words[full] | other.words[full]) == (1u64 << tail) - 1
    }

    /// Number of bits set in `self` but not in `other`.
    pub fn count_ones_not_in(&self, other: &Bitset) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(w, o)| (w & !o).count_ones() as usize)
            .sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(move |(wi, &w)| {
            let mut rem = w;
            std::iter::from_fn(move || {
                if rem == 0 {
                    None
                } else {
                    let b = rem.trailing_zeros() as usize;
                    rem &= rem - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}
