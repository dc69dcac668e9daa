//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use num_bigint::BigUint;
use qrm_core::css_quantum::{
    coset_leaders, css_from_rm, encode_basis1, encode_basis2, hadamard_amplitude, LeaderCap,
};
use qrm_core::error_analysis::{
    block_error_bound, monte_carlo_block_error, performance_curve, CodePoint, Spacing,
};
use qrm_core::gf2::{macwilliams_transform, weight_enumerator, BitVec, EnumerationCap};
use qrm_core::reed_muller::{
    partition, rm_code, rm_dual_spec, rm_generator, squaring_construct, RmSpec, MAX_MATERIALIZED_M,
};
use qrm_testkit::{
    exact_binomial_tail, rational_to_f64, rm_min_weight_count, CLASSICAL_TABLE, QUANTUM_TABLE,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

const CAP: EnumerationCap = EnumerationCap(20);

fn spec(r: i64, m: i64) -> RmSpec {
    RmSpec::new(r, m).unwrap()
}

fn e(err: qrm_core::Error) -> String {
    err.to_string()
}

/// `(n, d, k)` cells from `qrm tables --format csv`.
fn cli_table(which: &str) -> Result<BTreeSet<(u64, u64, u64)>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_qrm"))
        .args([
            "tables", "--which", which, "--max-m", "10", "--format", "csv",
        ])
        .output()
        .map_err(|err| err.to_string())?;
    if !out.status.success() {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    let text = String::from_utf8(out.stdout).map_err(|err| err.to_string())?;
    let mut lines = text.lines();
    if lines.next() != Some("m,r,n,k,d") {
        return Err("unexpected CSV header".into());
    }
    lines
        .map(|l| {
            let f: Vec<u64> = l
                .split(',')
                .map(|x| x.parse().map_err(|_| format!("bad row {l}")))
                .collect::<Result<_, _>>()?;
            Ok((f[2], f[4], f[3]))
        })
        .collect()
}

fn reference(table: &[(u32, &[(u64, u64)])]) -> BTreeSet<(u64, u64, u64)> {
    table
        .iter()
        .flat_map(|(m, cells)| cells.iter().map(move |&(d, k)| (1u64 << m, d, k)))
        .collect()
}

fn compare_tables(which: &str, expected: BTreeSet<(u64, u64, u64)>) -> Outcome {
    let got = cli_table(which)?;
    if got == expected {
        return Ok(format!("{} cells match", got.len()));
    }
    let wrong: Vec<String> = expected
        .difference(&got)
        .map(|(n, d, k)| {
            let actual = got
                .iter()
                .find(|c| c.0 == *n && c.1 == *d)
                .map(|c| c.2.to_string());
            format!(
                "n={n} d={d}: expected {k}, got {}",
                actual.unwrap_or_else(|| "none".into())
            )
        })
        .collect();
    let extra = got
        .iter()
        .filter(|c| !expected.iter().any(|x| x.0 == c.0 && x.1 == c.1))
        .count();
    let mut why = format!(
        "{} of {} cells differ [{}]",
        wrong.len(),
        expected.len(),
        wrong.join("; ")
    );
    if extra > 0 {
        why.push_str(&format!("; {extra} cells missing from the reference"));
    }
    Err(why)
}

fn classical_table() -> Outcome {
    compare_tables("classical", reference(CLASSICAL_TABLE))
}

fn quantum_table() -> Outcome {
    compare_tables("quantum", reference(QUANTUM_TABLE))
}

fn flagship() -> Outcome {
    let code = css_from_rm(5, 10).map_err(e)?;
    let got = (code.n(), code.k(), code.d(), code.t());
    if got == (1024, 252, 32, 15) {
        Ok(format!("{code} t={}", code.t()))
    } else {
        Err(format!("got {got:?}"))
    }
}

fn bound_claim() -> Outcome {
    let code = CodePoint::from_css(&css_from_rm(5, 10).map_err(e)?).map_err(e)?;
    let curves = performance_curve(&[code], 0.003, 0.3, 50, Spacing::Log).map_err(e)?;
    let pt = curves[0].points[0];
    if pt.p != 0.003 {
        return Err(format!("first grid point is {}", pt.p));
    }
    let exact = rational_to_f64(&exact_binomial_tail(1024, 15, 3, 1000));
    let rel = (pt.pe - exact).abs() / exact;
    if pt.pq > 1e-9 {
        return Err(format!("pq={:.4e} exceeds 1e-9", pt.pq));
    }
    if rel > 1e-9 {
        return Err(format!(
            "pe={:.12e} vs exact {exact:.12e}: relative error {rel:.2e}",
            pt.pe
        ));
    }
    Ok(format!(
        "pe={:.6e} pq={:.6e} rel.err={rel:.1e}",
        pt.pe, pt.pq
    ))
}

fn duality() -> Outcome {
    let mut checked = 0;
    for m in 0..=10i64 {
        for r in 0..m {
            let g = rm_generator(spec(r, m)).map_err(e)?;
            let h = rm_generator(spec(m - r - 1, m)).map_err(e)?;
            if !g.mul_transpose(&h).map_err(e)?.is_zero() {
                return Err(format!("G({r},{m}) G({},{m})^T != 0", m - r - 1));
            }
            if g.rank() + h.rank() != 1 << m {
                return Err(format!(
                    "ranks of RM({r},{m}) and its dual do not sum to 2^{m}"
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs"))
}

fn distance() -> Outcome {
    let mut checked = 0;
    for m in 0..=i64::from(MAX_MATERIALIZED_M) {
        for r in 0..=m {
            let s = spec(r, m);
            if s.k() > 20 {
                continue;
            }
            let w = rm_code(s)
                .map_err(e)?
                .min_weight_bruteforce(CAP)
                .map_err(e)? as u64;
            if w != 1 << (m - r) {
                return Err(format!("{s}: minimum weight {w}"));
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} codes with k <= 20, m <= {MAX_MATERIALIZED_M}"
    ))
}

fn squaring() -> Outcome {
    let mut checked = 0;
    for m in 0..=6 {
        for r in 0..=m {
            let sq = squaring_construct(&partition(spec(r, m)).map_err(e)?).map_err(e)?;
            let target = rm_code(spec(r, m + 1)).map_err(e)?;
            if !(sq.is_subcode_of(&target).map_err(e)? && target.is_subcode_of(&sq).map_err(e)?) {
                return Err(format!(
                    "squaring of RM({r},{m}) differs from RM({r},{})",
                    m + 1
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} partitions"))
}

fn macwilliams() -> Outcome {
    let (mut full, mut one_sided) = (0, 0);
    for m in 0..=8i64 {
        for r in 0..=m {
            let s = spec(r, m);
            let d = rm_dual_spec(s);
            if s.k().min(d.k()) > 20 {
                continue;
            }
            let (small, large) = if s.k() <= d.k() { (s, d) } else { (d, s) };
            let small_code = rm_code(small).map_err(e)?;
            let w_small = weight_enumerator(&small_code, CAP).map_err(e)?;
            let w_large = macwilliams_transform(&w_small, small_code.k()).map_err(e)?;
            if large.k() <= u64::from(CAP.0) {
                let enumerated = weight_enumerator(&rm_code(large).map_err(e)?, CAP).map_err(e)?;
                if enumerated != w_large {
                    return Err(format!(
                        "{small} -> {large}: transform differs from enumeration"
                    ));
                }
                if macwilliams_transform(&enumerated, large.k() as usize).map_err(e)? != w_small {
                    return Err(format!(
                        "{large} -> {small}: transform differs from enumeration"
                    ));
                }
                full += 1;
                continue;
            }
            // Dual too large to enumerate: check total, minimum weight and its
            // multiplicity against the closed form, and the round trip.
            if w_large.total() != BigUint::from(1u8) << large.k() as usize {
                return Err(format!("{large}: wrong total"));
            }
            if !large.is_zero_code() {
                let dmin = large.d().unwrap() as usize;
                if w_large.min_nonzero_weight() != Some(dmin) {
                    return Err(format!(
                        "{large}: minimum weight {:?}",
                        w_large.min_nonzero_weight()
                    ));
                }
                let count = rm_min_weight_count(large.r() as u32, large.m());
                if w_large.coefficients()[dmin] != count {
                    return Err(format!(
                        "{large}: {} words of weight {dmin}, expected {count}",
                        w_large.coefficients()[dmin]
                    ));
                }
            }
            if macwilliams_transform(&w_large, large.k() as usize).map_err(e)? != w_small {
                return Err(format!("{large}: round trip differs"));
            }
            one_sided += 1;
        }
    }
    Ok(format!(
        "{full} codes enumerated on both sides, {one_sided} with the dual checked by closed form"
    ))
}

fn states() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut report = Vec::new();
    for (r, m) in [(1, 2), (2, 4)] {
        let code = css_from_rm(r, m).map_err(e)?;
        let leaders = coset_leaders(&code, LeaderCap::default(), CAP).map_err(e)?;
        if leaders.len() as u64 != 1 << code.k() {
            return Err(format!("{code}: {} leaders", leaders.len()));
        }
        let b1 = leaders
            .iter()
            .map(|w| encode_basis1(&code, w, CAP))
            .collect::<Result<Vec<_>, _>>()
            .map_err(e)?;
        let b2 = leaders
            .iter()
            .map(|w| encode_basis2(&code, w, CAP))
            .collect::<Result<Vec<_>, _>>()
            .map_err(e)?;
        for i in 0..leaders.len() {
            for j in i + 1..leaders.len() {
                if b2[i].terms().keys().any(|v| b2[j].sign(v).is_some()) {
                    return Err(format!("{code}: basis-2 supports {i},{j} intersect"));
                }
                if b1[i].overlap(&b1[j]) != 0 {
                    return Err(format!("{code}: basis-1 states {i},{j} not orthogonal"));
                }
            }
        }
        let c1_size = 1i64 << code.c1().k();
        let n = code.n() as usize;
        for (s1, s2) in b1.iter().zip(&b2) {
            for u in s2.terms().keys() {
                if hadamard_amplitude(s1, u) != c1_size {
                    return Err(format!("{code}: amplitude at {u} is not |C1|"));
                }
            }
            let mut sampled = 0;
            while sampled < 100 {
                let u: BitVec = (0..n)
                    .map(|_| if rng.gen::<bool>() { '1' } else { '0' })
                    .collect::<String>()
                    .parse()
                    .map_err(e)?;
                if s2.sign(&u).is_some() {
                    continue;
                }
                if hadamard_amplitude(s1, &u) != 0 {
                    return Err(format!("{code}: nonzero amplitude off support at {u}"));
                }
                sampled += 1;
            }
        }
        report.push(format!("{code}: {} states", leaders.len()));
    }
    Ok(report.join(", "))
}

fn monte_carlo() -> Outcome {
    let mut report = Vec::new();
    for (n, t, p) in [(13, 2, 0.05), (29, 5, 0.05), (1024, 15, 0.01)] {
        let mc = monte_carlo_block_error(n, t, p, 1_000_000, 1).map_err(e)?;
        let analytic = block_error_bound(n, t, p).map_err(e)?;
        let z = (mc.estimate - analytic).abs() / mc.stderr;
        if z > 4.0 {
            return Err(format!(
                "(n={n},t={t},p={p}): mc={:.6e} analytic={analytic:.6e} |z|={z:.2}",
                mc.estimate
            ));
        }
        report.push(format!("({n},{t},{p}) |z|={z:.2}"));
    }
    Ok(report.join(", "))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("classical table", Duration::from_secs(5), classical_table),
        ("quantum table", Duration::from_secs(5), quantum_table),
        ("flagship parameters", Duration::MAX, flagship),
        ("bound at p=0.003", Duration::from_secs(1), bound_claim),
        ("duality m<=10", Duration::from_secs(30), duality),
        ("brute-force distance k<=20", Duration::MAX, distance),
        ("squaring m<=6", Duration::from_secs(60), squaring),
        ("MacWilliams n<=256", Duration::MAX, macwilliams),
        (
            "CSS states [[4,2,2]] [[16,6,4]]",
            Duration::from_secs(30),
            states,
        ),
        ("Monte Carlo vs tail", Duration::from_secs(60), monte_carlo),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > budget {
            outcome = Err(format!("took {elapsed:.2?}, budget {budget:?}"));
        }
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
