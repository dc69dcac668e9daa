use super::bitvec::{popcount, xor_into, BitVec};
use super::matrix::{BitMatrix, RowEchelon};
use crate::error::{Error, Result};

/// Largest code dimension (log2 of the codeword count) that may be
/// enumerated word by word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnumerationCap(pub u32);

impl EnumerationCap {
    pub const DEFAULT: EnumerationCap = EnumerationCap(26);

    pub fn check(self, log2_size: usize) -> Result<()> {
        if log2_size as u64 > u64::from(self.0) {
            Err(Error::CapExceeded {
                log2_size: log2_size as u64,
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumerationCap {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// A binary linear `(n, k, d)` code held as a full-row-rank generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: BitMatrix,
    distance: Option<usize>,
}

impl LinearCode {
    /// Wraps a generator, rejecting it unless its rows are independent.
    pub fn new(generator: BitMatrix) -> Result<Self> {
        let rank = generator.rank();
        if rank != generator.num_rows() {
            return Err(Error::RankDeficient {
                rank,
                rows: generator.num_rows(),
            });
        }
        Ok(Self {
            generator,
            distance: None,
        })
    }

    /// The code spanned by arbitrary (possibly dependent) rows.
    pub fn from_spanning_rows(rows: &BitMatrix) -> Self {
        Self {
            generator: rows.echelon().basis().clone(),
            distance: None,
        }
    }

    /// The zero code `{0^n}`.
    pub fn zero(n: usize) -> Self {
        Self {
            generator: BitMatrix::zeros(0, n),
            distance: None,
        }
    }

    /// Attaches a known minimum distance.
    pub fn with_distance(mut self, d: usize) -> Self {
        self.distance = Some(d);
        self
    }

    pub fn n(&self) -> usize {
        self.generator.num_cols()
    }

    pub fn k(&self) -> usize {
        self.generator.num_rows()
    }

    /// Cached minimum distance, if known.
    pub fn distance(&self) -> Option<usize> {
        self.distance
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn echelon(&self) -> RowEchelon {
        self.generator.echelon()
    }

    pub fn contains(&self, word: &BitVec) -> bool {
        word.len() == self.n() && self.echelon().contains(word)
    }

    /// Generator of the dual code.
    pub fn dual(&self) -> LinearCode {
        LinearCode {
            generator: self.generator.nullspace_generator(),
            distance: None,
        }
    }

    /// Row space inclusion `self ⊆ other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::MismatchedLength {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(other.echelon().contains_all(&self.generator))
    }

    /// Same row space as `other`.
    pub fn same_code(&self, other: &LinearCode) -> Result<bool> {
        self.generator.same_row_space(&other.generator)
    }

    /// Visits all `2^k` codewords as packed words, in Gray-code order over
    /// message vectors: step `i` adds generator row `trailing_zeros(i)`.
    pub fn for_each_codeword(
        &self,
        cap: EnumerationCap,
        mut visit: impl FnMut(&[u64]),
    ) -> Result<()> {
        cap.check(self.k())?;
        let g = &self.generator;
        let mut word = BitVec::zeros(self.n()).words().to_vec();
        visit(&word);
        let total: u64 = 1u64 << self.k();
        for i in 1..total {
            xor_into(&mut word, g.row_words(i.trailing_zeros() as usize));
            visit(&word);
        }
        Ok(())
    }

    /// Iterator over every codeword, Gray-code order (see
    /// [`for_each_codeword`](Self::for_each_codeword)).
    pub fn codewords(&self, cap: EnumerationCap) -> Result<Codewords<'_>> {
        cap.check(self.k())?;
        Ok(Codewords {
            code: self,
            current: BitVec::zeros(self.n()),
            step: 0,
            total: 1u64 << self.k(),
        })
    }

    /// Minimum Hamming weight over the nonzero codewords.
    pub fn min_weight_bruteforce(&self, cap: EnumerationCap) -> Result<usize> {
        if self.k() == 0 {
            return Err(Error::EmptyCode);
        }
        let mut best = usize::MAX;
        let mut first = true;
        self.for_each_codeword(cap, |w| {
            if first {
                first = false;
                return;
            }
            best = best.min(popcount(w));
        })?;
        Ok(best)
    }
}

/// Stream of codewords produced by [`LinearCode::codewords`].
pub struct Codewords<'a> {
    code: &'a LinearCode,
    current: BitVec,
    step: u64,
    total: u64,
}

impl Iterator for Codewords<'_> {
    type Item = BitVec;

    fn next(&mut self) -> Option<BitVec> {
        if self.step == self.total {
            return None;
        }
        if self.step > 0 {
            let row = self.step.trailing_zeros() as usize;
            self.current.xor_assign(&self.code.generator.row(row));
        }
        self.step += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.step) as usize;
        (left, Some(left))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn code(s: &str, n: usize) -> LinearCode {
        if s.is_empty() {
            return LinearCode::zero(n);
        }
        LinearCode::new(s.replace(';', "\n").parse().unwrap()).unwrap()
    }

    fn words(c: &LinearCode) -> Vec<String> {
        c.codewords(EnumerationCap::DEFAULT)
            .unwrap()
            .map(|w| w.to_string())
            .collect()
    }

    #[test]
    fn zero_code_enumerates_zero_word() {
        assert_eq!(words(&code("", 4)), vec!["0000"]);
    }

    #[test]
    fn repetition_code_words() {
        assert_eq!(words(&code("1111", 4)), vec!["0000", "1111"]);
    }

    #[test]
    fn gray_order_is_documented_order() {
        // Steps add rows 0, 1, 0, 2, 0, 1, 0.
        assert_eq!(
            words(&code("1111;0011;0101", 4)),
            vec!["0000", "1111", "1100", "0011", "0110", "1001", "1010", "0101"]
        );
    }

    #[test]
    fn visitor_and_iterator_agree() {
        let c = code("1111;0011;0101", 4);
        let mut seen = BTreeSet::new();
        c.for_each_codeword(EnumerationCap::DEFAULT, |w| {
            seen.insert(w.to_vec());
        })
        .unwrap();
        let it: BTreeSet<Vec<u64>> = c
            .codewords(EnumerationCap::DEFAULT)
            .unwrap()
            .map(|w| w.words().to_vec())
            .collect();
        assert_eq!(seen, it);
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn cap_is_enforced() {
        let c = code("1111;0011;0101", 4);
        assert_eq!(
            c.codewords(EnumerationCap(2)).err(),
            Some(Error::CapExceeded {
                log2_size: 3,
                cap: 2
            })
        );
        assert!(c.min_weight_bruteforce(EnumerationCap(2)).is_err());
    }

    #[test]
    fn min_weight_of_zero_code_is_undefined() {
        assert_eq!(
            code("", 4).min_weight_bruteforce(EnumerationCap::DEFAULT),
            Err(Error::EmptyCode)
        );
    }

    #[test]
    fn rank_deficient_generator_rejected() {
        let g: BitMatrix = "1100\n0011\n1111".parse().unwrap();
        assert!(matches!(
            LinearCode::new(g.clone()),
            Err(Error::RankDeficient { rank: 2, rows: 3 })
        ));
        assert_eq!(LinearCode::from_spanning_rows(&g).k(), 2);
    }
}
