use super::bitvec::{mask, parity_of_and, words_for, xor_into, BitVec, WORD_BITS};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Dense bit-packed matrix over GF(2).
///
/// Rows are packed MSB-first into `u64` words with column 0 leftmost, the
/// same layout as [`BitVec`]. Equality is entrywise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(cols >= 1, "a BitMatrix needs at least one column");
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::MismatchedLength {
                    left: cols,
                    right: row.len(),
                });
            }
            m.row_words_mut(i).copy_from_slice(row.words());
        }
        Ok(m)
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols);
        self.data[row * self.stride + col / WORD_BITS] & mask(col) != 0
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols);
        let w = &mut self.data[row * self.stride + col / WORD_BITS];
        if value {
            *w |= mask(col);
        } else {
            *w &= !mask(col);
        }
    }

    pub(crate) fn row_words(&self, row: usize) -> &[u64] {
        &self.data[row * self.stride..(row + 1) * self.stride]
    }

    pub(crate) fn row_words_mut(&mut self, row: usize) -> &mut [u64] {
        &mut self.data[row * self.stride..(row + 1) * self.stride]
    }

    pub fn row(&self, row: usize) -> BitVec {
        BitVec::from_words(self.row_words(row).to_vec(), self.cols)
    }

    pub fn rows(&self) -> impl Iterator<Item = BitVec> + '_ {
        (0..self.rows).map(|i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols {
            return Err(Error::MismatchedLength {
                left: self.cols,
                right: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(BitMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            stride: self.stride,
            data,
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * self.stride);
        head[lo * self.stride..(lo + 1) * self.stride].swap_with_slice(&mut tail[..self.stride]);
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        if src < dst {
            let (head, tail) = self.data.split_at_mut(dst * s);
            xor_into(&mut tail[..s], &head[src * s..(src + 1) * s]);
        } else {
            let (head, tail) = self.data.split_at_mut(src * s);
            xor_into(&mut head[dst * s..(dst + 1) * s], &tail[..s]);
        }
    }

    /// Gauss-Jordan elimination in place; returns the pivot column of each
    /// of the leading `rank` rows.
    fn eliminate(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == self.rows {
                break;
            }
            let word = col / WORD_BITS;
            let bit = mask(col);
            let Some(p) = (next..self.rows).find(|&r| self.data[r * self.stride + word] & bit != 0)
            else {
                continue;
            };
            self.swap_rows(p, next);
            for r in 0..self.rows {
                if r != next && self.data[r * self.stride + word] & bit != 0 {
                    self.xor_row_into(next, r);
                }
            }
            pivots.push(col);
            next += 1;
        }
        pivots
    }

    /// Row rank over GF(2) and the reduced row-echelon form (same shape,
    /// zero rows last).
    pub fn rank_and_rref(&self) -> (usize, BitMatrix) {
        let mut m = self.clone();
        let pivots = m.eliminate();
        (pivots.len(), m)
    }

    pub fn rank(&self) -> usize {
        self.rank_and_rref().0
    }

    /// Echelon basis of the row space, for membership tests and reduction.
    pub fn echelon(&self) -> RowEchelon {
        let mut m = self.clone();
        let pivots = m.eliminate();
        m.rows = pivots.len();
        m.data.truncate(m.rows * m.stride);
        RowEchelon { basis: m, pivots }
    }

    /// Generator of `{x : M x^T = 0}`, an `(n - rank) x n` full-rank matrix.
    pub fn nullspace_generator(&self) -> BitMatrix {
        let ech = self.echelon();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut out = BitMatrix::zeros(free.len(), n);
        for (i, &f) in free.iter().enumerate() {
            out.set(i, f, true);
            for (r, &p) in ech.pivots.iter().enumerate() {
                if ech.basis.get(r, f) {
                    out.set(i, p, true);
                }
            }
        }
        out
    }

    /// `self * other^T`: entry (i, j) is the inner product of row i of
    /// `self` with row j of `other`.
    pub fn mul_transpose(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols {
            return Err(Error::MismatchedLength {
                left: self.cols,
                right: other.cols,
            });
        }
        let mut out = BitMatrix::zeros(self.rows, other.rows.max(1));
        for i in 0..self.rows {
            for j in 0..other.rows {
                if parity_of_and(self.row_words(i), other.row_words(j)) {
                    out.set(i, j, true);
                }
            }
        }
        Ok(out)
    }

    /// True iff every row of `self` is orthogonal to every row of `other`.
    pub fn is_orthogonal_to(&self, other: &BitMatrix) -> Result<bool> {
        Ok(self.mul_transpose(other)?.is_zero())
    }

    /// Row spaces are equal (mutual membership).
    pub fn same_row_space(&self, other: &BitMatrix) -> Result<bool> {
        if self.cols != other.cols {
            return Err(Error::MismatchedLength {
                left: self.cols,
                right: other.cols,
            });
        }
        let a = self.echelon();
        let b = other.echelon();
        Ok(a.rank() == b.rank() && a.contains_all(other) && b.contains_all(self))
    }
}

/// Row-reduced basis of a row space with its pivot columns.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    basis: BitMatrix,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Clears every pivot position of `words` by adding basis rows. The
    /// result is a canonical representative of `words + rowspace`.
    pub(crate) fn reduce_words(&self, words: &mut [u64]) {
        for (r, &p) in self.pivots.iter().enumerate() {
            if words[p / WORD_BITS] & mask(p) != 0 {
                xor_into(words, self.basis.row_words(r));
            }
        }
    }

    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.basis.num_cols());
        let mut words = v.words().to_vec();
        self.reduce_words(&mut words);
        BitVec::from_words(words, v.len())
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_all(&self, m: &BitMatrix) -> bool {
        m.num_cols() == self.basis.num_cols()
            && (0..m.num_rows()).all(|i| {
                let mut w = m.row_words(i).to_vec();
                self.reduce_words(&mut w);
                w.iter().all(|&x| x == 0)
            })
    }
}

/// One row per line of `'0'/'1'` characters, newline-terminated, row 0 first.
impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BitMatrix {
    type Err = Error;

    /// Parses the text format. An input with no rows cannot carry a column
    /// count and is rejected.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.trim().parse::<BitVec>())
            .collect::<Result<Vec<_>>>()?;
        let cols = rows
            .first()
            .map(BitVec::len)
            .ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        BitMatrix::from_rows(cols, &rows)
    }
}
