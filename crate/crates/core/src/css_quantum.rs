//! Quantum Reed-Muller codes from the CSS construction with `C2 = C1⊥`.
//!
//! For `C1 = RM(r, m)` and `C2 = RM(m-r-1, m)` the nesting
//! `{0} ⊂ C2 ⊂ C1 ⊂ F_2^n` holds whenever `m - r - 1 <= r`, giving an
//! `[[2^m, k(C1) - k(C1⊥), 2^(m-r)]]` code. Since `C2⊥ = C1`, logical basis
//! states are indexed by cosets of `C1⊥` inside `C1`.
//!
//! Encoded states are kept unnormalized, as sign-weighted sums of basis
//! strings. They are only materialized for small codes.

use crate::error::{Error, Result};
use crate::gf2::{parity_of_and, popcount, BitVec, EnumerationCap, LinearCode};
use crate::reed_muller::{
    check_nesting, rm_code, rm_dual_spec, ParamRow, RmSpec, MAX_MATERIALIZED_M,
};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Largest number of logical qubits for which coset leaders are listed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeaderCap(pub u32);

impl Default for LeaderCap {
    fn default() -> Self {
        LeaderCap(16)
    }
}

/// Nesting is rank-checked at construction up to this `m`; beyond it only
/// parameters are produced.
pub const NESTING_CHECK_MAX_M: u32 = 12;

/// A CSS code `[[n, k, d]]` built from `C1 = RM(r, m)` and `C2 = C1⊥`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CssCode {
    c1: RmSpec,
    n: u64,
    k: u64,
    d: u64,
}

impl CssCode {
    pub fn c1(&self) -> RmSpec {
        self.c1
    }

    /// `C2 = C1⊥ = RM(m - r - 1, m)`.
    pub fn c2(&self) -> RmSpec {
        rm_dual_spec(self.c1)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Logical qubits.
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// Correctable errors `floor((d - 1) / 2)`.
    pub fn t(&self) -> u64 {
        (self.d - 1) / 2
    }

    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }

    pub fn c1_code(&self) -> Result<LinearCode> {
        rm_code(self.c1)
    }

    /// `C1⊥`, which is also `C2`.
    pub fn c1_dual_code(&self) -> Result<LinearCode> {
        rm_code(self.c2())
    }
}

impl fmt::Display for CssCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]", self.n, self.k, self.d)
    }
}

/// Builds the quantum RM code with `C1 = RM(r, m)`, `C2 = C1⊥`.
pub fn css_from_rm(r: i64, m: i64) -> Result<CssCode> {
    let c1 = RmSpec::concrete(r, m)?;
    let c2 = rm_dual_spec(c1);
    if c2.r() > c1.r() {
        return Err(Error::NotSelfDualNested {
            r: c1.r() as u32,
            m: c1.m(),
            dual_r: c2.r(),
        });
    }
    if c1.m() <= NESTING_CHECK_MAX_M.min(MAX_MATERIALIZED_M) && !check_nesting(c2, c1)? {
        return Err(Error::NotSelfDualNested {
            r: c1.r() as u32,
            m: c1.m(),
            dual_r: c2.r(),
        });
    }
    Ok(CssCode {
        c1,
        n: c1.n(),
        k: c1.k() - c2.k(),
        d: c1.d().expect("concrete order"),
    })
}

fn validate_word(code: &CssCode, c1: &LinearCode, w: &BitVec) -> Result<()> {
    if w.len() as u64 != code.n() {
        return Err(Error::MismatchedLength {
            left: code.n() as usize,
            right: w.len(),
        });
    }
    if !c1.contains(w) {
        return Err(Error::NotInCodespace {
            word: w.to_string(),
        });
    }
    Ok(())
}

/// One minimum-weight representative per coset of `C1⊥` in `C1`, ties broken
/// by the lexicographically smallest string; sorted, so `0^n` comes first.
pub fn coset_leaders(
    code: &CssCode,
    leader_cap: LeaderCap,
    cap: EnumerationCap,
) -> Result<Vec<BitVec>> {
    if code.k() > u64::from(leader_cap.0) {
        return Err(Error::CapExceeded {
            log2_size: code.k(),
            cap: leader_cap.0,
        });
    }
    cap.check(code.c1().k() as usize)?;
    let c1 = code.c1_code()?;
    let dual = code.c1_dual_code()?.echelon();
    let mut best: HashMap<Vec<u64>, (usize, Vec<u64>)> = HashMap::new();
    c1.for_each_codeword(cap, |v| {
        let mut key = v.to_vec();
        dual.reduce_words(&mut key);
        let candidate = (popcount(v), v.to_vec());
        best.entry(key)
            .and_modify(|cur| {
                if candidate < *cur {
                    *cur = candidate.clone();
                }
            })
            .or_insert(candidate);
    })?;
    let n = code.n() as usize;
    let mut leaders: Vec<BitVec> = best
        .into_values()
        .map(|(_, words)| BitVec::from_words(words, n))
        .collect();
    leaders.sort();
    debug_assert_eq!(leaders.len() as u64, 1u64 << code.k());
    Ok(leaders)
}

/// Which conjugate basis a state is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Basis {
    /// Computational basis: `sum_{v ∈ C1} (-1)^(v·w) |v>`.
    Computational = 1,
    /// Hadamard-rotated basis: `sum_{v ∈ C1⊥} |v + w>`.
    Conjugate = 2,
}

impl Basis {
    pub fn label(self) -> u8 {
        self as u8
    }
}

impl TryFrom<u8> for Basis {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(Basis::Computational),
            2 => Ok(Basis::Conjugate),
            other => Err(Error::Parse(format!("basis must be 1 or 2, got {other}"))),
        }
    }
}

/// An unnormalized superposition of basis strings with `±1` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseState {
    n: usize,
    k: u64,
    basis: Basis,
    w: BitVec,
    terms: BTreeMap<BitVec, i8>,
}

#[derive(Serialize)]
struct TermJson {
    v: String,
    sign: i8,
}

#[derive(Serialize)]
struct StateJson {
    n: usize,
    k: u64,
    basis: u8,
    w: String,
    terms: Vec<TermJson>,
}

impl SparseState {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn w(&self) -> &BitVec {
        &self.w
    }

    /// Terms in lexicographic order of the basis string.
    pub fn terms(&self) -> &BTreeMap<BitVec, i8> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sign(&self, v: &BitVec) -> Option<i8> {
        self.terms.get(v).copied()
    }

    /// Unnormalized inner product `sum_v s(v) s'(v)`.
    pub fn overlap(&self, other: &SparseState) -> i64 {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .terms
            .iter()
            .filter_map(|(v, s)| large.terms.get(v).map(|t| i64::from(*s) * i64::from(*t)))
            .sum()
    }

    pub fn to_json(&self) -> String {
        let doc = StateJson {
            n: self.n,
            k: self.k,
            basis: self.basis.label(),
            w: self.w.to_string(),
            terms: self
                .terms
                .iter()
                .map(|(v, &sign)| TermJson {
                    v: v.to_string(),
                    sign,
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("state serializes")
    }
}

/// `sum_{v ∈ C1} (-1)^(v·w) |v>` for `w ∈ C1`.
pub fn encode_basis1(code: &CssCode, w: &BitVec, cap: EnumerationCap) -> Result<SparseState> {
    let c1 = code.c1_code()?;
    validate_word(code, &c1, w)?;
    let mut terms = BTreeMap::new();
    c1.for_each_codeword(cap, |v| {
        let sign = if parity_of_and(v, w.words()) { -1 } else { 1 };
        terms.insert(BitVec::from_words(v.to_vec(), w.len()), sign);
    })?;
    Ok(SparseState {
        n: w.len(),
        k: code.k(),
        basis: Basis::Computational,
        w: w.clone(),
        terms,
    })
}

/// `sum_{v ∈ C1⊥} |v + w>`: the coset `w + C1⊥`, every sign `+1`.
pub fn encode_basis2(code: &CssCode, w: &BitVec, cap: EnumerationCap) -> Result<SparseState> {
    let c1 = code.c1_code()?;
    validate_word(code, &c1, w)?;
    let dual = code.c1_dual_code()?;
    let mut terms = BTreeMap::new();
    dual.for_each_codeword(cap, |v| {
        let mut shifted = BitVec::from_words(v.to_vec(), w.len());
        shifted.xor_assign(w);
        terms.insert(shifted, 1);
    })?;
    Ok(SparseState {
        n: w.len(),
        k: code.k(),
        basis: Basis::Conjugate,
        w: w.clone(),
        terms,
    })
}

/// Unnormalized amplitude of `|u>` after a Hadamard on every qubit:
/// `sum_v s(v) (-1)^(u·v)`.
pub fn hadamard_amplitude(state: &SparseState, u: &BitVec) -> i64 {
    assert_eq!(u.len(), state.n, "string length must match the state");
    state
        .terms
        .iter()
        .map(|(v, &s)| {
            if v.dot(u) {
                -i64::from(s)
            } else {
                i64::from(s)
            }
        })
        .sum()
}

/// Parameters of every quantum RM code with `2 <= m <= max_m` and `d >= 2`,
/// ordered by `m` then ascending `d`. Codes with `k = 0` are included.
pub fn quantum_table(max_m: u32) -> Result<Vec<ParamRow>> {
    if !(2..=crate::reed_muller::MAX_PARAMETER_M).contains(&max_m) {
        return Err(Error::Domain(format!(
            "max_m must be at least 2, got {max_m}"
        )));
    }
    let mut rows = Vec::new();
    for m in 2..=max_m {
        // m - r - 1 <= r, and r < m for d >= 2
        let lowest = m / 2;
        for r in (lowest..m).rev() {
            let code = css_from_rm(i64::from(r), i64::from(m))?;
            rows.push(ParamRow {
                m,
                r,
                n: code.n(),
                k: code.k(),
                d: code.d(),
            });
        }
    }
    Ok(rows)
}
