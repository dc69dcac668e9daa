//! Reed-Muller codes RM(r, m).
//!
//! The generator of RM(r, m) stacks `G_0` (the all-ones row), `G_1` (the `m`
//! coordinate rows) and every `G_l` block of `l`-fold row products up to
//! `l = r`. Column `j` of `G_1` is the binary expansion of `j` with the
//! low-order bit in the bottom row, so the leftmost column is all zeros and
//! the rightmost all ones. Rows of `G_l` are ordered lexicographically by the
//! ascending index set of the `G_1` rows they multiply.
//!
//! Order `r = -1` is a sentinel for the zero code of length `2^m`; it closes
//! partition chains at the bottom.
//!
//! Only the one-level squaring construction `|RM(r,m)/RM(r-1,m)|^2` is
//! provided. The two-level (four-fold) construction is not implemented.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec, LinearCode};
use itertools::Itertools;
use serde::Serialize;

/// Largest `m` for which generator matrices are materialized.
pub const MAX_MATERIALIZED_M: u32 = 16;

/// Largest `m` for which parameters are computed (`n = 2^m` fits a `u64`).
pub const MAX_PARAMETER_M: u32 = 62;

pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc as u64
}

/// `sum_{l=0}^{r} C(m, l)`; zero for `r < 0`.
pub fn rm_dimension(r: i64, m: u32) -> u64 {
    if r < 0 {
        return 0;
    }
    (0..=r.min(i64::from(m)) as u32)
        .map(|l| binomial(m, l))
        .sum()
}

/// Order and log-length of a Reed-Muller code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RmSpec {
    r: i64,
    m: u32,
}

impl RmSpec {
    /// Accepts `-1 <= r <= m` with `0 <= m <= 62`.
    pub fn new(r: i64, m: i64) -> Result<Self> {
        if m < 0 || m > i64::from(MAX_PARAMETER_M) || r < -1 || r > m {
            return Err(Error::InvalidOrder { r, m });
        }
        Ok(Self { r, m: m as u32 })
    }

    /// Like [`new`](Self::new) but rejects the zero-code sentinel.
    pub fn concrete(r: i64, m: i64) -> Result<Self> {
        if r < 0 {
            return Err(Error::InvalidOrder { r, m });
        }
        Self::new(r, m)
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn is_zero_code(&self) -> bool {
        self.r < 0
    }

    pub fn n(&self) -> u64 {
        1u64 << self.m
    }

    pub fn k(&self) -> u64 {
        rm_dimension(self.r, self.m)
    }

    /// `2^(m-r)`; `None` for the zero code.
    pub fn d(&self) -> Option<u64> {
        (!self.is_zero_code()).then(|| 1u64 << (i64::from(self.m) - self.r))
    }
}

impl std::fmt::Display for RmSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RM({},{})", self.r, self.m)
    }
}

fn check_materializable(spec: RmSpec) -> Result<()> {
    if spec.m > MAX_MATERIALIZED_M {
        return Err(Error::Domain(format!(
            "{spec}: generator matrices are only built for m <= {MAX_MATERIALIZED_M}"
        )));
    }
    Ok(())
}

/// The `m x 2^m` coordinate block `G_1`.
fn coordinate_rows(m: u32) -> Vec<BitVec> {
    let n = 1usize << m;
    (0..m)
        .map(|i| {
            let shift = m - 1 - i;
            let mut row = BitVec::zeros(n);
            for j in 0..n {
                if (j >> shift) & 1 == 1 {
                    row.set(j, true);
                }
            }
            row
        })
        .collect()
}

/// Rows of the `G_l` block: products of `l` distinct coordinate rows.
fn product_block(coords: &[BitVec], l: usize, n: usize) -> Vec<BitVec> {
    if l == 0 {
        return vec![BitVec::ones(n)];
    }
    (0..coords.len())
        .combinations(l)
        .map(|set| {
            let mut row = BitVec::ones(n);
            for &i in &set {
                let words: Vec<u64> = row
                    .words()
                    .iter()
                    .zip(coords[i].words())
                    .map(|(a, b)| a & b)
                    .collect();
                row = BitVec::from_words(words, n);
            }
            row
        })
        .collect()
}

/// Generator rows of block `G_l` alone.
pub fn rm_block(l: u32, m: u32) -> Result<BitMatrix> {
    let spec = RmSpec::concrete(i64::from(l), i64::from(m))?;
    check_materializable(spec)?;
    let n = 1usize << m;
    BitMatrix::from_rows(n, &product_block(&coordinate_rows(m), l as usize, n))
}

/// The stacked generator `[G_0; G_1; ...; G_r]` (zero rows for `r = -1`).
pub fn rm_generator(spec: RmSpec) -> Result<BitMatrix> {
    check_materializable(spec)?;
    let n = 1usize << spec.m;
    if spec.is_zero_code() {
        return Ok(BitMatrix::zeros(0, n));
    }
    let coords = coordinate_rows(spec.m);
    let rows: Vec<BitVec> = (0..=spec.r as usize)
        .flat_map(|l| product_block(&coords, l, n))
        .collect();
    BitMatrix::from_rows(n, &rows)
}

/// RM(r, m) as a [`LinearCode`] with its analytic distance attached. The
/// generator is rank-checked.
pub fn rm_code(spec: RmSpec) -> Result<LinearCode> {
    let generator = rm_generator(spec)?;
    let code = LinearCode::new(generator)?;
    debug_assert_eq!(code.k() as u64, spec.k());
    Ok(match spec.d() {
        Some(d) => code.with_distance(d as usize),
        None => code,
    })
}

/// RM(r, m)⊥ = RM(m - r - 1, m). The full space maps to the zero-code
/// sentinel and the sentinel back to the full space.
pub fn rm_dual_spec(spec: RmSpec) -> RmSpec {
    RmSpec {
        r: i64::from(spec.m) - spec.r - 1,
        m: spec.m,
    }
}

/// True iff every generator row of `inner` lies in the row space of `outer`.
pub fn check_nesting(inner: RmSpec, outer: RmSpec) -> Result<bool> {
    if inner.m != outer.m {
        return Err(Error::MismatchedLength {
            left: inner.n() as usize,
            right: outer.n() as usize,
        });
    }
    let inner = rm_generator(inner)?;
    let outer = rm_generator(outer)?;
    if outer.num_rows() == 0 {
        return Ok(inner.num_rows() == 0);
    }
    Ok(outer.echelon().contains_all(&inner))
}

/// A code split as `parent = child ⊕ span(transversal)`.
#[derive(Clone, Debug)]
pub struct Partition {
    parent: LinearCode,
    child: LinearCode,
    transversal: BitMatrix,
}

impl Partition {
    /// Checks that `child ⊆ parent` and that child rows plus transversal rows
    /// are independent and span `parent`.
    pub fn new(parent: LinearCode, child: LinearCode, transversal: BitMatrix) -> Result<Self> {
        let n = parent.n();
        if child.n() != n || transversal.num_cols() != n {
            return Err(Error::InvalidPartition(format!(
                "lengths differ: parent {n}, child {}, transversal {}",
                child.n(),
                transversal.num_cols()
            )));
        }
        if !child.is_subcode_of(&parent)? {
            return Err(Error::InvalidPartition(
                "child is not a subcode of parent".into(),
            ));
        }
        let joint = child.generator().vstack(&transversal)?;
        if joint.rank() != joint.num_rows() {
            return Err(Error::InvalidPartition(
                "child and transversal rows are dependent".into(),
            ));
        }
        if joint.num_rows() != parent.k() || !joint.echelon().contains_all(parent.generator()) {
            return Err(Error::InvalidPartition(
                "child and transversal do not generate parent".into(),
            ));
        }
        Ok(Self {
            parent,
            child,
            transversal,
        })
    }

    pub fn parent(&self) -> &LinearCode {
        &self.parent
    }

    pub fn child(&self) -> &LinearCode {
        &self.child
    }

    /// Coset representatives of `child` in `parent`, one per added row.
    pub fn transversal(&self) -> &BitMatrix {
        &self.transversal
    }
}

/// The one-level partition RM(r, m) / RM(r - 1, m); the transversal is the
/// `G_r` block.
pub fn partition(spec: RmSpec) -> Result<Partition> {
    if spec.is_zero_code() {
        return Err(Error::InvalidOrder {
            r: spec.r,
            m: i64::from(spec.m),
        });
    }
    let child_spec = RmSpec::new(spec.r - 1, i64::from(spec.m))?;
    let parent = rm_code(spec)?;
    let child = rm_code(child_spec)?;
    let transversal = rm_block(spec.r as u32, spec.m)?;
    Partition::new(parent, child, transversal)
}

/// `|parent/child|^2 = {(t1 + c, t2 + c) : t1, t2 ∈ child, c ∈ span(transversal)}`.
///
/// Generated by `(c, c)` for transversal rows and `(t, 0)`, `(0, t)` for child
/// rows. When both distances are known the result carries
/// `min(d(child), 2 d(parent))`.
pub fn squaring_construct(p: &Partition) -> Result<LinearCode> {
    if !p.child.is_subcode_of(&p.parent)? {
        return Err(Error::InvalidPartition(
            "child is not a subcode of parent".into(),
        ));
    }
    let n = p.parent.n();
    let zero = BitVec::zeros(n);
    let mut rows = Vec::with_capacity(p.transversal.num_rows() + 2 * p.child.k());
    rows.extend(p.transversal.rows().map(|c| c.concat(&c)));
    for t in p.child.generator().rows() {
        rows.push(t.concat(&zero));
        rows.push(zero.concat(&t));
    }
    let code = LinearCode::new(BitMatrix::from_rows(2 * n, &rows)?)?;
    let d = match (p.child.k(), p.child.distance(), p.parent.distance()) {
        (0, _, Some(dp)) => Some(2 * dp),
        (_, Some(dc), Some(dp)) => Some(dc.min(2 * dp)),
        _ => None,
    };
    Ok(match d {
        Some(d) => code.with_distance(d),
        None => code,
    })
}

/// Checks that `|RM(r,m)/RM(r-1,m)|^2` and the squaring of the dual chain
/// `|RM⊥(r-1,m)/RM⊥(r,m)|^2` are orthogonal (generator cross product is
/// zero) and have complementary dimensions, i.e. are mutual duals.
pub fn check_dual_partition_orthogonality(r: i64, m: i64) -> Result<bool> {
    let spec = RmSpec::concrete(r, m)?;
    // RM⊥(r-1, m) = RM(m-r, m) and RM⊥(r, m) = RM(m-r-1, m): exactly the
    // partition at order m - r.
    let dual_top = rm_dual_spec(RmSpec::new(r - 1, m)?);
    let dual_spec = RmSpec::concrete(dual_top.r, m)?;
    debug_assert_eq!(rm_dual_spec(spec).r, dual_spec.r - 1);
    let a = squaring_construct(&partition(spec)?)?;
    let b = squaring_construct(&partition(dual_spec)?)?;
    let orthogonal = a.generator().is_orthogonal_to(b.generator())?;
    Ok(orthogonal && a.k() + b.k() == a.n())
}

/// One `(m, r, n, k, d)` row of a parameter table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamRow {
    pub m: u32,
    pub r: u32,
    pub n: u64,
    pub k: u64,
    pub d: u64,
}

/// Parameters of every RM(r, m) with `2 <= m <= max_m` and `d >= 2`, ordered
/// by `m` then ascending `d`. The trivial full space (`r = m`) is omitted.
pub fn classical_table(max_m: u32) -> Result<Vec<ParamRow>> {
    if !(2..=MAX_PARAMETER_M).contains(&max_m) {
        return Err(Error::Domain(format!(
            "max_m must be in 2..={MAX_PARAMETER_M}, got {max_m}"
        )));
    }
    let mut rows = Vec::new();
    for m in 2..=max_m {
        for r in (0..m).rev() {
            let spec = RmSpec::concrete(i64::from(r), i64::from(m))?;
            rows.push(ParamRow {
                m,
                r,
                n: spec.n(),
                k: spec.k(),
                d: spec.d().expect("concrete order"),
            });
        }
    }
    Ok(rows)
}
