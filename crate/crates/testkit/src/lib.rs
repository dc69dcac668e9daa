//! Reference oracles for the qrm test suites.
//!
//! Everything here works on plain `'0'/'1'` strings and exact rationals and
//! shares no code with `qrm-core`, so the library can be checked against it.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeSet;

/// Parses a `'0'/'1'` string into bits.
pub fn bits(s: &str) -> Vec<u8> {
    s.bytes()
        .map(|b| match b {
            b'0' => 0,
            b'1' => 1,
            _ => panic!("not a bit string: {s}"),
        })
        .collect()
}

pub fn to_string(v: &[u8]) -> String {
    v.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect()
}

/// All XOR combinations of `rows`, visited by counting over message vectors
/// (not Gray order), returned as a sorted set.
pub fn span(rows: &[&str], n: usize) -> BTreeSet<String> {
    let rows: Vec<Vec<u8>> = rows.iter().map(|r| bits(r)).collect();
    assert!(rows.iter().all(|r| r.len() == n));
    assert!(rows.len() < 28, "span oracle is brute force");
    let mut out = BTreeSet::new();
    for msg in 0u64..(1u64 << rows.len()) {
        let mut w = vec![0u8; n];
        for (i, row) in rows.iter().enumerate() {
            if msg >> i & 1 == 1 {
                for (a, b) in w.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
        out.insert(to_string(&w));
    }
    out
}

pub fn dot(a: &str, b: &str) -> u8 {
    a.bytes()
        .zip(b.bytes())
        .filter(|&(x, y)| x == b'1' && y == b'1')
        .count() as u8
        & 1
}

/// Every length-`n` word orthogonal to all `rows`, by exhaustive search.
pub fn dual_by_search(rows: &[&str], n: usize) -> BTreeSet<String> {
    assert!(n <= 20, "dual oracle is exhaustive over 2^n words");
    let mut out = BTreeSet::new();
    for x in 0u64..(1u64 << n) {
        let word: String = (0..n)
            .map(|j| if x >> (n - 1 - j) & 1 == 1 { '1' } else { '0' })
            .collect();
        if rows.iter().all(|r| dot(r, &word) == 0) {
            out.insert(word);
        }
    }
    out
}

pub fn weight(s: &str) -> usize {
    s.bytes().filter(|&b| b == b'1').count()
}

/// Weight distribution `A_0..A_n` of an explicit word set.
pub fn weight_distribution<'a>(words: impl IntoIterator<Item = &'a String>, n: usize) -> Vec<u64> {
    let mut a = vec![0u64; n + 1];
    for w in words {
        a[weight(w)] += 1;
    }
    a
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Exact binomial tail `sum_{j=t+1}^{n} C(n,j) p^j (1-p)^(n-j)` for the
/// rational `p = num/den`.
pub fn exact_binomial_tail(n: u64, t: u64, num: u64, den: u64) -> BigRational {
    assert!(num <= den && den > 0);
    let a = BigUint::from(num);
    let b = BigUint::from(den - num);
    // pow_b[i] = b^i
    let mut pow_b = Vec::with_capacity(n as usize + 1);
    pow_b.push(BigUint::one());
    for i in 1..=n as usize {
        let next = &pow_b[i - 1] * &b;
        pow_b.push(next);
    }
    let mut numer = BigUint::zero();
    let mut pow_a = BigUint::one();
    for _ in 0..=t {
        pow_a *= &a;
    }
    for j in (t + 1)..=n {
        numer += binomial(n, j) * &pow_a * &pow_b[(n - j) as usize];
        pow_a *= &a;
    }
    let denom = BigUint::from(den).pow(n as u32);
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Nearest-double view of a positive rational, accurate to about one ulp
/// even when numerator and denominator overflow `f64`.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    let shift = num.bits() as i64 - den.bits() as i64 - 80;
    let scaled = if shift >= 0 {
        num / (den << shift as usize)
    } else {
        (num << (-shift) as usize) / den
    };
    let mant = scaled.to_f64().expect("finite mantissa");
    let sign = if x.numer() < &BigInt::zero() {
        -1.0
    } else {
        1.0
    };
    sign * mant * 2f64.powi(shift as i32)
}

/// Number of minimum-weight codewords of RM(r,m), from the closed form
/// `2^r * prod_{i=0}^{m-r-1} (2^(m-i) - 1) / (2^(m-r-i) - 1)`.
pub fn rm_min_weight_count(r: u32, m: u32) -> BigUint {
    let mut num = BigUint::one() << r as usize;
    let mut den = BigUint::one();
    for i in 0..(m - r) {
        num *= (BigUint::one() << (m - i) as usize) - 1u32;
        den *= (BigUint::one() << (m - r - i) as usize) - 1u32;
    }
    assert!((&num % &den).is_zero());
    num / den
}

/// Reference classical table: for block length `2^m`, the dimension of
/// RM(r,m) listed under distance `2^(m-r)` for r = 0..m-1.
pub const CLASSICAL_TABLE: &[(u32, &[(u64, u64)])] = &[
    (2, &[(2, 3), (4, 1)]),
    (3, &[(2, 7), (4, 4), (8, 1)]),
    (4, &[(2, 15), (4, 11), (8, 5), (16, 1)]),
    (5, &[(2, 31), (4, 26), (8, 16), (16, 6), (32, 1)]),
    (6, &[(2, 63), (4, 57), (8, 42), (16, 22), (32, 7), (64, 1)]),
    (
        7,
        &[
            (2, 127),
            (4, 120),
            (8, 99),
            (16, 64),
            (32, 29),
            (64, 8),
            (128, 1),
        ],
    ),
    (
        8,
        &[
            (2, 255),
            (4, 247),
            (8, 219),
            (16, 163),
            (32, 93),
            (64, 37),
            (128, 9),
            (256, 1),
        ],
    ),
    (
        9,
        &[
            (2, 511),
            (4, 502),
            (8, 466),
            (16, 382),
            (32, 256),
            (64, 130),
            (128, 46),
            (256, 10),
            (512, 1),
        ],
    ),
    (
        10,
        &[
            (2, 1023),
            (4, 1013),
            (8, 968),
            (16, 848),
            (32, 638),
            (64, 386),
            (128, 176),
            (256, 56),
            (512, 11),
            (1024, 1),
        ],
    ),
];

/// Reference quantum table, cell values as published: `k` under distance `d`
/// per block length.
pub const QUANTUM_TABLE: &[(u32, &[(u64, u64)])] = &[
    (2, &[(2, 2)]),
    (3, &[(2, 6), (4, 0)]),
    (4, &[(2, 14), (4, 6)]),
    (5, &[(2, 30), (4, 20), (8, 0)]),
    (6, &[(2, 62), (4, 50), (8, 20)]),
    (7, &[(2, 126), (4, 118), (8, 68), (16, 0)]),
    (8, &[(2, 254), (4, 238), (8, 184), (16, 70)]),
    (9, &[(2, 510), (4, 492), (8, 420), (16, 252), (32, 0)]),
    (10, &[(2, 1022), (4, 1002), (8, 912), (16, 772), (32, 252)]),
];
