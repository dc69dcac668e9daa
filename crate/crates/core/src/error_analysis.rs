//! Block and qubit error rates under independent per-qubit errors.
//!
//! A block of `n` qubits that corrects up to `t` arbitrary errors fails when
//! more than `t` qubits are hit, so the block error rate is the binomial
//! tail `P_e = sum_{j=t+1}^{n} C(n,j) p^j (1-p)^(n-j)`. The per-qubit rate
//! implied by it is `P_q = 1 - (1 - P_e)^(1/n)`.

use crate::css_quantum::CssCode;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::sync::OnceLock;

/// Block length up to which binomial coefficients are computed exactly.
const EXACT_BINOMIAL_MAX_N: u64 = 64;

/// Size of the shared log-factorial table.
const LOG_FACTORIAL_TABLE: usize = 4096;

/// Identifier of the Monte Carlo generator, recorded alongside results.
pub const MC_RNG_ALGORITHM: &str =
    "chacha8(rand_chacha-0.3,seed_from_u64)/stream=trial/geometric-gaps";

/// Neumaier-compensated running sum.
#[derive(Default, Clone, Copy)]
struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

fn log_factorials(upto: usize) -> Vec<f64> {
    let mut table = Vec::with_capacity(upto + 1);
    let mut acc = CompensatedSum::default();
    table.push(0.0);
    for i in 1..=upto {
        acc.add((i as f64).ln());
        table.push(acc.value());
    }
    table
}

fn shared_log_factorials() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| log_factorials(LOG_FACTORIAL_TABLE))
}

fn exact_binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Natural log of `C(n, j)` for every `j` in `0..=n`.
fn log_binomials(n: u64) -> Vec<f64> {
    if n <= EXACT_BINOMIAL_MAX_N {
        return (0..=n)
            .map(|j| (exact_binomial(n, j) as f64).ln())
            .collect();
    }
    let owned;
    let lf: &[f64] = if n as usize <= LOG_FACTORIAL_TABLE {
        shared_log_factorials()
    } else {
        owned = log_factorials(n as usize);
        &owned
    };
    let n = n as usize;
    (0..=n).map(|j| lf[n] - lf[j] - lf[n - j]).collect()
}

fn check_probability(p: f64, what: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("{what} must lie in [0, 1], got {p}")));
    }
    Ok(())
}

fn check_block(n: u64, t: u64) -> Result<()> {
    if n == 0 || t >= n {
        return Err(Error::Domain(format!("need 0 <= t < n, got n={n}, t={t}")));
    }
    Ok(())
}

/// `sum_{j=lo}^{hi} C(n,j) p^j (1-p)^(n-j)` for `0 < p < 1`.
///
/// Terms are formed in the log domain, scaled by the largest one, and summed
/// with compensation from the peak outward on both sides. The binomial terms
/// are unimodal in `j`, so each side can stop once its terms no longer move
/// the sum.
fn binomial_mass(n: u64, lo: u64, hi: u64, p: f64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0 && lo <= hi && hi <= n);
    let lnc = log_binomials(n);
    let ln_p = p.ln();
    let ln_q = (-p).ln_1p();
    let log_term = |j: u64| lnc[j as usize] + j as f64 * ln_p + (n - j) as f64 * ln_q;

    let mode = (((n + 1) as f64 * p).floor() as u64).min(n);
    let peak = mode.clamp(lo, hi);
    let top = log_term(peak);

    let mut acc = CompensatedSum::default();
    acc.add(1.0);
    let negligible = |term: f64, acc: &CompensatedSum| term < acc.value() * 1e-20;
    for j in (peak + 1)..=hi {
        let term = (log_term(j) - top).exp();
        acc.add(term);
        if negligible(term, &acc) {
            break;
        }
    }
    for j in (lo..peak).rev() {
        let term = (log_term(j) - top).exp();
        acc.add(term);
        if negligible(term, &acc) {
            break;
        }
    }
    (top.exp() * acc.value()).clamp(0.0, 1.0)
}

/// Probability that more than `t` of `n` independent qubits fail, each with
/// probability `p`.
pub fn block_error_bound(n: u64, t: u64, p: f64) -> Result<f64> {
    check_block(n, t)?;
    check_probability(p, "p")?;
    if p == 0.0 {
        return Ok(0.0);
    }
    if p == 1.0 {
        return Ok(1.0);
    }
    Ok(binomial_mass(n, t + 1, n, p))
}

/// Probability that at most `t` of `n` qubits fail: the complement of
/// [`block_error_bound`], evaluated directly rather than by subtraction.
pub fn block_success_probability(n: u64, t: u64, p: f64) -> Result<f64> {
    check_block(n, t)?;
    check_probability(p, "p")?;
    if p == 0.0 {
        return Ok(1.0);
    }
    if p == 1.0 {
        return Ok(0.0);
    }
    Ok(binomial_mass(n, 0, t, p))
}

/// `P_q = 1 - (1 - P_e)^(1/n)`, computed as `-expm1(ln_1p(-P_e) / n)` so
/// that small block error rates keep full relative precision.
pub fn qubit_error_rate(pe: f64, n: u64) -> Result<f64> {
    check_probability(pe, "P_e")?;
    if n == 0 {
        return Err(Error::Domain("block length must be at least 1".into()));
    }
    if n == 1 {
        return Ok(pe);
    }
    Ok(-((-pe).ln_1p() / n as f64).exp_m1())
}

/// Result of a Monte Carlo block-error run.
#[derive(Clone, Debug, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub failures: u64,
    pub trials: u64,
    pub seed: u64,
    pub algorithm: &'static str,
}

/// Errors in one block: positions of hit qubits are drawn as geometric gaps,
/// which is distributionally identical to `n` Bernoulli(p) draws. Stops early
/// once the block has failed.
fn block_fails(rng: &mut ChaCha8Rng, n: u64, t: u64, ln_q: f64) -> bool {
    let mut pos = 0.0f64;
    let mut errors = 0u64;
    loop {
        let u: f64 = rng.gen();
        pos += ((-u).ln_1p() / ln_q).floor();
        if pos >= n as f64 {
            return false;
        }
        errors += 1;
        if errors > t {
            return true;
        }
        pos += 1.0;
    }
}

/// Estimates [`block_error_bound`] by simulation.
///
/// Trial `i` draws from its own ChaCha8 stream `i` under the key derived from
/// `seed`, so the estimate does not depend on how trials are scheduled across
/// threads.
pub fn monte_carlo_block_error(
    n: u64,
    t: u64,
    p: f64,
    trials: u64,
    seed: u64,
) -> Result<McEstimate> {
    check_block(n, t)?;
    check_probability(p, "p")?;
    if trials == 0 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    let failures = if p == 0.0 {
        0
    } else if p == 1.0 {
        trials
    } else {
        let base = ChaCha8Rng::seed_from_u64(seed);
        let ln_q = (-p).ln_1p();
        (0..trials)
            .into_par_iter()
            .map(|i| {
                let mut rng = base.clone();
                rng.set_stream(i);
                u64::from(block_fails(&mut rng, n, t, ln_q))
            })
            .sum()
    };
    let estimate = failures as f64 / trials as f64;
    Ok(McEstimate {
        estimate,
        stderr: (estimate * (1.0 - estimate) / trials as f64).sqrt(),
        failures,
        trials,
        seed,
        algorithm: MC_RNG_ALGORITHM,
    })
}

/// A code on the comparison plot: block length, correctable errors, label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodePoint {
    pub label: String,
    pub n: u64,
    pub k: u64,
    pub t: u64,
}

impl CodePoint {
    pub fn new(label: impl Into<String>, n: u64, k: u64, t: u64) -> Result<Self> {
        check_block(n, t)?;
        Ok(Self {
            label: label.into(),
            n,
            k,
            t,
        })
    }

    pub fn from_css(code: &CssCode) -> Result<Self> {
        Self::new(code.to_string(), code.n(), code.k(), code.t())
    }

    /// The `[[n, 1, d]]` repetition-style comparison code.
    pub fn repetition(n: u64, d: u64) -> Result<Self> {
        if d == 0 || d > n {
            return Err(Error::Domain(format!(
                "repetition code needs 1 <= d <= n, got n={n}, d={d}"
            )));
        }
        Self::new(format!("[[{n},1,{d}]]"), n, 1, (d - 1) / 2)
    }

    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }
}

/// The comparison set: [[5,1,3]], [[13,1,5]], [[29,1,11]] and the
/// [[1024,252,32]] quantum RM code.
pub fn builtin_comparison_set() -> Result<Vec<CodePoint>> {
    Ok(vec![
        CodePoint::repetition(5, 3)?,
        CodePoint::repetition(13, 5)?,
        CodePoint::repetition(29, 11)?,
        CodePoint::from_css(&crate::css_quantum::css_from_rm(5, 10)?)?,
    ])
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvePoint {
    pub p: f64,
    pub pe: f64,
    pub pq: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

impl std::str::FromStr for Spacing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" | "lin" => Ok(Spacing::Linear),
            "log" => Ok(Spacing::Log),
            other => Err(Error::Parse(format!(
                "spacing must be linear or log, got {other:?}"
            ))),
        }
    }
}

/// Sample grid with exact endpoints.
pub fn sample_grid(p_min: f64, p_max: f64, points: usize, spacing: Spacing) -> Result<Vec<f64>> {
    if !(0.0 <= p_min && p_min < p_max && p_max <= 0.5) {
        return Err(Error::Domain(format!(
            "need 0 <= p_min < p_max <= 0.5, got [{p_min}, {p_max}]"
        )));
    }
    if points < 2 {
        return Err(Error::Domain("a curve needs at least 2 points".into()));
    }
    if spacing == Spacing::Log && p_min == 0.0 {
        return Err(Error::Domain("log spacing needs p_min > 0".into()));
    }
    let last = (points - 1) as f64;
    let grid = (0..points)
        .map(|i| {
            if i == 0 {
                return p_min;
            }
            if i == points - 1 {
                return p_max;
            }
            let f = i as f64 / last;
            match spacing {
                Spacing::Linear => p_min + (p_max - p_min) * f,
                Spacing::Log => (p_min.ln() + (p_max.ln() - p_min.ln()) * f).exp(),
            }
        })
        .collect();
    Ok(grid)
}

/// One code's sampled curve.
#[derive(Clone, Debug, PartialEq)]
pub struct CodeCurve {
    pub code: CodePoint,
    pub points: Vec<CurvePoint>,
}

/// Curves for each code, with `P_e` from the supplied block error model.
pub fn performance_curve_with(
    model: &dyn crate::registry::BlockErrorModel,
    codes: &[CodePoint],
    p_min: f64,
    p_max: f64,
    points: usize,
    spacing: Spacing,
) -> Result<Vec<CodeCurve>> {
    let grid = sample_grid(p_min, p_max, points, spacing)?;
    codes
        .iter()
        .map(|code| {
            let points = grid
                .par_iter()
                .map(|&p| {
                    let pe = model.block_error(code.n, code.t, p)?;
                    Ok(CurvePoint {
                        p,
                        pe,
                        pq: qubit_error_rate(pe, code.n)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(CodeCurve {
                code: code.clone(),
                points,
            })
        })
        .collect()
}

/// Curves with `P_e` from [`block_error_bound`].
pub fn performance_curve(
    codes: &[CodePoint],
    p_min: f64,
    p_max: f64,
    points: usize,
    spacing: Spacing,
) -> Result<Vec<CodeCurve>> {
    performance_curve_with(
        &crate::registry::TailBound,
        codes,
        p_min,
        p_max,
        points,
        spacing,
    )
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Curve CSV: header `label,p,pe,pq`, ten significant digits, rows ordered
/// by code then ascending `p`.
pub fn curves_to_csv(curves: &[CodeCurve]) -> String {
    let mut out = String::from("label,p,pe,pq\n");
    for curve in curves {
        let label = csv_field(&curve.code.label);
        for pt in &curve.points {
            out.push_str(&format!(
                "{label},{:.9e},{:.9e},{:.9e}\n",
                pt.p, pt.pe, pt.pq
            ));
        }
    }
    out
}
