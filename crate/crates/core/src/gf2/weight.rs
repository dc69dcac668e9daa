use super::bitvec::popcount;
use super::code::{EnumerationCap, LinearCode};
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

/// Weight distribution `A_0..A_n` of a code, in exact integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    n: usize,
    coefficients: Vec<BigUint>,
}

impl WeightEnumerator {
    pub fn new(coefficients: Vec<BigUint>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::Domain("weight enumerator needs at least A_0".into()));
        }
        Ok(Self {
            n: coefficients.len() - 1,
            coefficients,
        })
    }

    pub fn from_counts(counts: &[u64]) -> Result<Self> {
        Self::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    pub fn total(&self) -> BigUint {
        self.coefficients.iter().sum()
    }

    /// Smallest nonzero weight with a nonzero count.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..=self.n).find(|&j| !self.coefficients[j].is_zero())
    }

    /// Coefficients as `u64`, when they all fit.
    pub fn to_u64(&self) -> Option<Vec<u64>> {
        self.coefficients
            .iter()
            .map(|c| u64::try_from(c).ok())
            .collect()
    }
}

/// Counts codewords by Hamming weight through full enumeration.
pub fn weight_enumerator(code: &LinearCode, cap: EnumerationCap) -> Result<WeightEnumerator> {
    let mut counts = vec![0u64; code.n() + 1];
    code.for_each_codeword(cap, |w| counts[popcount(w)] += 1)?;
    WeightEnumerator::from_counts(&counts)
}

/// Krawtchouk values `K_0(i)..K_n(i)`: the coefficients of
/// `(1 - z)^i (1 + z)^(n - i)`.
fn krawtchouk_column(n: usize, i: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one());
    if n == 0 {
        return out;
    }
    let slope = BigInt::from(n as i64 - 2 * i as i64);
    out.push(slope.clone());
    for j in 1..n {
        // (j+1) K_{j+1} = (n - 2i) K_j - (n - j + 1) K_{j-1}
        let num = &slope * &out[j] - BigInt::from(n - j + 1) * &out[j - 1];
        let next = num / BigInt::from(j + 1);
        out.push(next);
    }
    out
}

/// Weight enumerator of the dual of a dimension-`k` code with enumerator `w`.
///
/// Uses `A'_j = 2^-k * sum_i A_i K_j(i)` in exact integer arithmetic; only
/// weights with `A_i != 0` contribute a Krawtchouk column.
pub fn macwilliams_transform(w: &WeightEnumerator, k: usize) -> Result<WeightEnumerator> {
    let n = w.n();
    if !w.coefficients[0].is_one() {
        return Err(Error::NonIntegerResult(format!(
            "A_0 = {} (expected 1)",
            w.coefficients[0]
        )));
    }
    let size = BigUint::one() << k;
    if w.total() != size {
        return Err(Error::NonIntegerResult(format!(
            "coefficients sum to {} but a dimension-{k} code has {size} words",
            w.total()
        )));
    }
    let mut acc = vec![BigInt::zero(); n + 1];
    for (i, a) in w.coefficients.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let a = BigInt::from_biguint(Sign::Plus, a.clone());
        for (j, kj) in krawtchouk_column(n, i).into_iter().enumerate() {
            acc[j] += &a * kj;
        }
    }
    let divisor = BigInt::one() << k;
    let coefficients = acc
        .into_iter()
        .enumerate()
        .map(|(j, v)| {
            if v.is_negative() || !(&v % &divisor).is_zero() {
                return Err(Error::NonIntegerResult(format!("A'_{j} = {v} / 2^{k}")));
            }
            Ok((v / &divisor).into_parts().1)
        })
        .collect::<Result<Vec<_>>>()?;
    WeightEnumerator::new(coefficients)
}
