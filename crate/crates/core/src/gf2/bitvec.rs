use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

pub(crate) const WORD_BITS: usize = 64;

pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

#[inline]
pub(crate) fn mask(col: usize) -> u64 {
    1u64 << (WORD_BITS - 1 - col % WORD_BITS)
}

#[inline]
pub(crate) fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

#[inline]
pub(crate) fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// GF(2) inner product of two packed words.
#[inline]
pub(crate) fn parity_of_and(a: &[u64], b: &[u64]) -> bool {
    let ones: u32 = a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum();
    ones & 1 == 1
}

/// A fixed-length vector over GF(2).
///
/// Bit 0 is the leftmost position. Packing is MSB-first within each word, so
/// the derived ordering on equal-length vectors is the lexicographic order of
/// their `'0'/'1'` strings.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; words_for(len)],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for j in 0..len {
            v.set(j, true);
        }
        v
    }

    pub(crate) fn from_words(words: Vec<u64>, len: usize) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        Self { words, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, col: usize) -> bool {
        assert!(col < self.len, "bit index {col} out of range {}", self.len);
        self.words[col / WORD_BITS] & mask(col) != 0
    }

    pub fn set(&mut self, col: usize, value: bool) {
        assert!(col < self.len, "bit index {col} out of range {}", self.len);
        let w = &mut self.words[col / WORD_BITS];
        if value {
            *w |= mask(col);
        } else {
            *w &= !mask(col);
        }
    }

    pub fn weight(&self) -> usize {
        popcount(&self.words)
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Inner product over GF(2): parity of the bitwise AND.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len);
        parity_of_and(&self.words, &other.words)
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len);
        xor_into(&mut self.words, &other.words);
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for j in self.ones_iter() {
            out.set(j, true);
        }
        for j in other.ones_iter() {
            out.set(self.len + j, true);
        }
        out
    }

    /// Positions holding a one, ascending.
    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&j| self.get(j))
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len {
            f.write_str(if self.get(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl FromStr for BitVec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut v = BitVec::zeros(s.len());
        for (j, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(j, true),
                other => {
                    return Err(Error::Parse(format!(
                        "invalid bit character {other:?} in {s:?}"
                    )))
                }
            }
        }
        Ok(v)
    }
}
