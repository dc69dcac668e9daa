//! Linear algebra and codeword combinatorics over GF(2).

mod bitvec;
mod code;
mod matrix;
mod weight;

pub use bitvec::BitVec;
pub use code::{Codewords, EnumerationCap, LinearCode};
pub use matrix::{BitMatrix, RowEchelon};
pub use weight::{macwilliams_transform, weight_enumerator, WeightEnumerator};

pub(crate) use bitvec::{parity_of_and, popcount};
