//! Structural self-check suite behind `qrm verify`.
//!
//! Each check reports one line. Checks that would enumerate more than the
//! configured cap report SKIP instead of running.

use crate::css_quantum::{
    coset_leaders, css_from_rm, encode_basis1, encode_basis2, hadamard_amplitude, LeaderCap,
};
use crate::error::Result;
use crate::gf2::{macwilliams_transform, weight_enumerator, BitVec, EnumerationCap};
use crate::reed_muller::{
    check_dual_partition_orthogonality, check_nesting, partition, rm_code, rm_dual_spec,
    rm_generator, squaring_construct, RmSpec, MAX_MATERIALIZED_M,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::fmt;

/// Largest `m` for the squaring-equivalence checks.
pub const SQUARING_MAX_M: u32 = 6;
/// Largest block length for the MacWilliams cross-check.
pub const MACWILLIAMS_MAX_M: u32 = 8;
/// Largest `log2` size enumerated for the MacWilliams cross-check.
pub const MACWILLIAMS_CAP: u32 = 20;
/// State checks run for block lengths up to `2^STATES_MAX_M`...
pub const STATES_MAX_M: u32 = 4;
/// ...and for codes with at most this many logical qubits.
pub const STATES_MAX_K: u64 = 6;
/// Off-support strings sampled per state in the Hadamard check.
pub const OFF_SUPPORT_SAMPLES: usize = 100;

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub max_m: u32,
    pub cap: EnumerationCap,
    pub leader_cap: LeaderCap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(f, "PASS {}", self.name),
            Status::Fail(why) => write!(f, "FAIL {}: {why}", self.name),
            Status::Skip(why) => write!(f, "SKIP {}: {why}", self.name),
        }
    }
}

struct Suite<'a> {
    outcomes: Vec<CheckOutcome>,
    report: &'a mut dyn FnMut(&CheckOutcome),
}

impl Suite<'_> {
    fn record(&mut self, name: String, status: Status) {
        let outcome = CheckOutcome { name, status };
        (self.report)(&outcome);
        self.outcomes.push(outcome);
    }

    fn check(&mut self, name: String, result: Result<std::result::Result<(), String>>) {
        let status = match result {
            Ok(Ok(())) => Status::Pass,
            Ok(Err(why)) => Status::Fail(why),
            Err(e) => Status::Fail(e.to_string()),
        };
        self.record(name, status);
    }
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn spec(r: u32, m: u32) -> RmSpec {
    RmSpec::concrete(i64::from(r), i64::from(m)).expect("valid order")
}

/// Runs every check for `1 <= m <= cfg.max_m`, calling `report` as each
/// finishes.
pub fn run_suite(cfg: &VerifyConfig, report: &mut dyn FnMut(&CheckOutcome)) -> Vec<CheckOutcome> {
    let mut suite = Suite {
        outcomes: Vec::new(),
        report,
    };
    let top = cfg.max_m.min(MAX_MATERIALIZED_M);
    if top < cfg.max_m {
        suite.record(
            format!("generators m={}..={}", top + 1, cfg.max_m),
            Status::Skip(format!(
                "generators are materialized only for m <= {MAX_MATERIALIZED_M}"
            )),
        );
    }

    for m in 1..=top {
        suite.check(format!("rank m={m}"), rank_check(m));
        suite.check(format!("nesting m={m}"), nesting_check(m));
        suite.check(format!("duality m={m}"), duality_check(m));
    }
    suite.check(
        "distance recursion".into(),
        Ok(distance_recursion_check(cfg.max_m)),
    );

    let mut distances: HashMap<(u32, u32), usize> = HashMap::new();
    for m in 1..=top {
        for r in 0..=m {
            let name = format!("distance RM({r},{m})");
            let s = spec(r, m);
            if s.k() > u64::from(cfg.cap.0) {
                suite.record(
                    name,
                    Status::Skip(format!("k={} exceeds cap 2^{}", s.k(), cfg.cap.0)),
                );
                continue;
            }
            let result = rm_code(s)
                .and_then(|c| c.min_weight_bruteforce(cfg.cap))
                .map(|d| {
                    distances.insert((r, m), d);
                    let expected = 1usize << (m - r);
                    ensure(d == expected, || {
                        format!("brute force {d}, expected {expected}")
                    })
                });
            suite.check(name, result);
        }
    }
    for m in 1..=top {
        for r in 0..m {
            let dual = m - r - 1;
            let name = format!("dual distance RM({dual},{m}) = 2^{}", r + 1);
            match distances.get(&(dual, m)) {
                Some(&d) => suite.check(
                    name,
                    Ok(ensure(d == 1 << (r + 1), || {
                        format!("brute force {d}, expected {}", 1 << (r + 1))
                    })),
                ),
                None => suite.record(name, Status::Skip("dual not enumerated".into())),
            }
        }
    }

    for m in 0..=top.min(SQUARING_MAX_M) {
        suite.check(format!("squaring m={m} -> m={}", m + 1), squaring_check(m));
        suite.check(
            format!("dual partition orthogonality m={m}"),
            dual_partition_check(m),
        );
    }

    for m in 1..=top.min(MACWILLIAMS_MAX_M) {
        for r in 0..m {
            let name = format!("MacWilliams RM({r},{m})");
            let s = spec(r, m);
            let small = s.k().min(s.n() - s.k());
            if small > u64::from(MACWILLIAMS_CAP.min(cfg.cap.0)) {
                suite.record(
                    name,
                    Status::Skip(format!("min(k, n-k)={small} exceeds 2^{MACWILLIAMS_CAP}")),
                );
                continue;
            }
            suite.check(
                name,
                macwilliams_check(r, m, EnumerationCap(MACWILLIAMS_CAP.min(cfg.cap.0))),
            );
        }
    }

    for m in 2..=top {
        for r in m / 2..m {
            suite.check(
                format!("quantum parameters RM({r},{m})"),
                quantum_parameter_check(r, m),
            );
        }
    }

    for m in 2..=top.min(STATES_MAX_M) {
        for r in m / 2..m {
            let name = format!("states RM({r},{m})");
            let code = match css_from_rm(i64::from(r), i64::from(m)) {
                Ok(c) => c,
                Err(e) => {
                    suite.record(name, Status::Fail(e.to_string()));
                    continue;
                }
            };
            if code.k() > STATES_MAX_K || code.k() > u64::from(cfg.leader_cap.0) {
                suite.record(
                    name,
                    Status::Skip(format!(
                        "{code}: k={} over the state-check limit {STATES_MAX_K}",
                        code.k()
                    )),
                );
                continue;
            }
            if code.c1().k() > u64::from(cfg.cap.0) {
                suite.record(
                    name,
                    Status::Skip(format!(
                        "|C1| = 2^{} exceeds cap 2^{}",
                        code.c1().k(),
                        cfg.cap.0
                    )),
                );
                continue;
            }
            suite.check(format!("states {code}"), state_check(r, m, cfg));
        }
    }
    suite.outcomes
}

fn rank_check(m: u32) -> Result<std::result::Result<(), String>> {
    for r in 0..=m {
        let s = spec(r, m);
        let rank = rm_generator(s)?.rank() as u64;
        if rank != s.k() {
            return Ok(Err(format!(
                "rank of G({r},{m}) is {rank}, expected {}",
                s.k()
            )));
        }
    }
    Ok(Ok(()))
}

fn nesting_check(m: u32) -> Result<std::result::Result<(), String>> {
    for r in 0..m {
        if !check_nesting(spec(r, m), spec(r + 1, m))? {
            return Ok(Err(format!("RM({r},{m}) not inside RM({},{m})", r + 1)));
        }
    }
    Ok(Ok(()))
}

fn duality_check(m: u32) -> Result<std::result::Result<(), String>> {
    for r in 0..m {
        let s = spec(r, m);
        let d = rm_dual_spec(s);
        let g = rm_generator(s)?;
        let h = rm_generator(d)?;
        if !g.is_orthogonal_to(&h)? {
            return Ok(Err(format!("G({r},{m}) G({},{m})^T != 0", d.r())));
        }
        if s.k() + d.k() != s.n() {
            return Ok(Err(format!("k({r},{m}) + k({},{m}) != 2^{m}", d.r())));
        }
    }
    Ok(Ok(()))
}

/// `d(r, m) = min(d(r-1, m-1), 2 d(r, m-1))` with `d(-1, .)` infinite and
/// `d(r, m) = 2^(m-r)`.
fn distance_recursion_check(max_m: u32) -> std::result::Result<(), String> {
    let d = |r: i64, m: i64| -> Option<u64> { (r >= 0).then(|| 1u64 << (m - r)) };
    for m in 1..=i64::from(max_m) {
        for r in 0..m {
            let lhs = d(r, m).expect("concrete");
            let via_child = d(r - 1, m - 1).unwrap_or(u64::MAX);
            let rhs = via_child.min(2 * d(r, m - 1).expect("r < m"));
            if lhs != rhs {
                return Err(format!("recursion fails at RM({r},{m}): {lhs} != {rhs}"));
            }
        }
    }
    Ok(())
}

fn squaring_check(m: u32) -> Result<std::result::Result<(), String>> {
    for r in 0..=m {
        let sq = squaring_construct(&partition(spec(r, m))?)?;
        if !sq.same_code(&rm_code(spec(r, m + 1))?)? {
            return Ok(Err(format!(
                "|RM({r},{m})/RM({},{m})|^2 != RM({r},{})",
                r as i64 - 1,
                m + 1
            )));
        }
    }
    Ok(Ok(()))
}

fn dual_partition_check(m: u32) -> Result<std::result::Result<(), String>> {
    for r in 0..=m {
        if !check_dual_partition_orthogonality(i64::from(r), i64::from(m))? {
            return Ok(Err(format!(
                "dual partition chain at r={r} is not orthogonal"
            )));
        }
    }
    Ok(Ok(()))
}

fn macwilliams_check(
    r: u32,
    m: u32,
    cap: EnumerationCap,
) -> Result<std::result::Result<(), String>> {
    let s = spec(r, m);
    let d = rm_dual_spec(s);
    let (small, large) = if s.k() <= d.k() { (s, d) } else { (d, s) };
    let small_code = rm_code(small)?;
    let w_small = weight_enumerator(&small_code, cap)?;
    let w_large = macwilliams_transform(&w_small, small_code.k())?;
    if large.k() <= u64::from(cap.0) {
        let enumerated = weight_enumerator(&rm_code(large)?, cap)?;
        if enumerated != w_large {
            return Ok(Err("transform differs from the enumerated dual".into()));
        }
        let back = macwilliams_transform(&enumerated, large.k() as usize)?;
        return Ok(ensure(back == w_small, || {
            "reverse transform differs".into()
        }));
    }
    if w_large.total() != BigUint::from(1u8) << large.k() as usize {
        return Ok(Err("transformed enumerator has the wrong total".into()));
    }
    let expected_d = large.d().expect("concrete") as usize;
    if w_large.min_nonzero_weight() != Some(expected_d) {
        return Ok(Err(format!(
            "transformed enumerator has minimum weight {:?}, expected {expected_d}",
            w_large.min_nonzero_weight()
        )));
    }
    let back = macwilliams_transform(&w_large, large.k() as usize)?;
    Ok(ensure(back == w_small, || {
        "round trip through the dual differs".into()
    }))
}

fn quantum_parameter_check(r: u32, m: u32) -> Result<std::result::Result<(), String>> {
    let code = css_from_rm(i64::from(r), i64::from(m))?;
    let c1 = code.c1_code()?;
    let c1_dual = code.c1_dual_code()?;
    // k = dim(C2⊥) - dim(C1⊥), with C2⊥ computed from the generator of C2.
    let c2_dual_dim = c1_dual.generator().nullspace_generator().rank();
    let c1_dual_dim = c1.generator().nullspace_generator().rank();
    let k_rank = (c2_dual_dim - c1_dual_dim) as u64;
    if k_rank != code.k() {
        return Ok(Err(format!(
            "rank-based k={k_rank}, formula k={}",
            code.k()
        )));
    }
    let d1 = 1u64 << (m - r);
    let d2 = 1u64 << (r + 1);
    Ok(ensure(code.d() == d1.min(d2), || {
        format!("d={} but min(d1,d2)={}", code.d(), d1.min(d2))
    }))
}

fn state_check(r: u32, m: u32, cfg: &VerifyConfig) -> Result<std::result::Result<(), String>> {
    let code = css_from_rm(i64::from(r), i64::from(m))?;
    let leaders = coset_leaders(&code, cfg.leader_cap, cfg.cap)?;
    if leaders.len() as u64 != 1u64 << code.k() {
        return Ok(Err(format!(
            "{} leaders, expected 2^{}",
            leaders.len(),
            code.k()
        )));
    }
    let b1 = leaders
        .iter()
        .map(|w| encode_basis1(&code, w, cfg.cap))
        .collect::<Result<Vec<_>>>()?;
    let b2 = leaders
        .iter()
        .map(|w| encode_basis2(&code, w, cfg.cap))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..leaders.len() {
        for j in i + 1..leaders.len() {
            if b2[i].terms().keys().any(|v| b2[j].terms().contains_key(v)) {
                return Ok(Err(format!(
                    "basis-2 supports of {} and {} overlap",
                    leaders[i], leaders[j]
                )));
            }
            if b1[i].overlap(&b1[j]) != 0 {
                return Ok(Err(format!(
                    "basis-1 states of {} and {} not orthogonal",
                    leaders[i], leaders[j]
                )));
            }
        }
    }
    let n = code.n() as usize;
    let c1_size = 1i64 << code.c1().k();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for (s1, s2) in b1.iter().zip(&b2) {
        for u in s2.terms().keys() {
            let a = hadamard_amplitude(s1, u);
            if a != c1_size {
                return Ok(Err(format!(
                    "amplitude {a} at {u} on support, expected {c1_size}"
                )));
            }
        }
        let mut sampled = 0;
        while sampled < OFF_SUPPORT_SAMPLES {
            let mut u = BitVec::zeros(n);
            for j in 0..n {
                u.set(j, rng.gen());
            }
            if s2.terms().contains_key(&u) {
                continue;
            }
            sampled += 1;
            let a = hadamard_amplitude(s1, &u);
            if a != 0 {
                return Ok(Err(format!("amplitude {a} at off-support {u}")));
            }
        }
    }
    Ok(Ok(()))
}
