//! Named, runtime-selectable strategies.
//!
//! Two families are registered here: code families that turn a short spec
//! such as `rm:5,10` or `rep:13,5` into a [`CodePoint`], and block error
//! models (`tail`, `monte-carlo`) that evaluate `P_e` for a curve.

use crate::css_quantum::css_from_rm;
use crate::error::{Error, Result};
use crate::error_analysis::{block_error_bound, monte_carlo_block_error, CodePoint};

/// Builds a comparison code from integer parameters.
pub trait CodeFamily: Send + Sync {
    fn name(&self) -> &'static str;

    /// Parameter syntax shown in help text, e.g. `<r>,<m>`.
    fn syntax(&self) -> &'static str;

    fn build(&self, args: &[u64]) -> Result<CodePoint>;
}

/// Evaluates the probability that an `n`-qubit block correcting `t` errors
/// fails at per-qubit error rate `p`.
pub trait BlockErrorModel: Send + Sync {
    fn name(&self) -> &'static str;

    fn block_error(&self, n: u64, t: u64, p: f64) -> Result<f64>;
}

pub trait Named {
    fn entry_name(&self) -> &'static str;
}

impl Named for dyn CodeFamily {
    fn entry_name(&self) -> &'static str {
        self.name()
    }
}

impl Named for dyn BlockErrorModel {
    fn entry_name(&self) -> &'static str {
        self.name()
    }
}

/// Insertion-ordered collection of boxed strategies, looked up by name.
pub struct Registry<T: ?Sized + Named> {
    entries: Vec<Box<T>>,
}

impl<T: ?Sized + Named> Default for Registry<T> {
    fn default() -> Self {
        Self {
            entries: Vec::new(),
        }
    }
}

impl<T: ?Sized + Named> Registry<T> {
    /// Adds `entry`, replacing any entry of the same name.
    pub fn register(&mut self, entry: Box<T>) {
        let name = entry.entry_name();
        self.entries.retain(|e| e.entry_name() != name);
        self.entries.push(entry);
    }

    pub fn get(&self, name: &str) -> Option<&T> {
        self.entries
            .iter()
            .find(|e| e.entry_name() == name)
            .map(|e| e.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.entry_name()).collect()
    }

    fn lookup(&self, name: &str) -> Result<&T> {
        self.get(name).ok_or_else(|| {
            Error::Parse(format!(
                "unknown name {name:?}; expected one of {}",
                self.names().join(", ")
            ))
        })
    }
}

fn expect_args<const N: usize>(family: &str, args: &[u64]) -> Result<[u64; N]> {
    args.try_into()
        .map_err(|_| Error::Parse(format!("{family} takes {N} parameters, got {}", args.len())))
}

/// Quantum Reed-Muller code `rm:<r>,<m>`.
pub struct QuantumRm;

impl CodeFamily for QuantumRm {
    fn name(&self) -> &'static str {
        "rm"
    }

    fn syntax(&self) -> &'static str {
        "<r>,<m>"
    }

    fn build(&self, args: &[u64]) -> Result<CodePoint> {
        let [r, m] = expect_args::<2>(self.name(), args)?;
        CodePoint::from_css(&css_from_rm(r as i64, m as i64)?)
    }
}

/// Repetition-style `[[n,1,d]]` code `rep:<n>,<d>`.
pub struct Repetition;

impl CodeFamily for Repetition {
    fn name(&self) -> &'static str {
        "rep"
    }

    fn syntax(&self) -> &'static str {
        "<n>,<d>"
    }

    fn build(&self, args: &[u64]) -> Result<CodePoint> {
        let [n, d] = expect_args::<2>(self.name(), args)?;
        CodePoint::repetition(n, d)
    }
}

/// Analytic binomial tail.
pub struct TailBound;

impl BlockErrorModel for TailBound {
    fn name(&self) -> &'static str {
        "tail"
    }

    fn block_error(&self, n: u64, t: u64, p: f64) -> Result<f64> {
        block_error_bound(n, t, p)
    }
}

/// Simulated block failures; each call reuses the same seed.
pub struct MonteCarlo {
    pub trials: u64,
    pub seed: u64,
}

impl BlockErrorModel for MonteCarlo {
    fn name(&self) -> &'static str {
        "monte-carlo"
    }

    fn block_error(&self, n: u64, t: u64, p: f64) -> Result<f64> {
        Ok(monte_carlo_block_error(n, t, p, self.trials, self.seed)?.estimate)
    }
}

pub fn code_families() -> Registry<dyn CodeFamily> {
    let mut reg: Registry<dyn CodeFamily> = Registry::default();
    reg.register(Box::new(QuantumRm));
    reg.register(Box::new(Repetition));
    reg
}

pub fn block_error_models(trials: u64, seed: u64) -> Registry<dyn BlockErrorModel> {
    let mut reg: Registry<dyn BlockErrorModel> = Registry::default();
    reg.register(Box::new(TailBound));
    reg.register(Box::new(MonteCarlo { trials, seed }));
    reg
}

/// Parses `<family>:<a>,<b>,...` against `registry`.
pub fn parse_code_spec(registry: &Registry<dyn CodeFamily>, spec: &str) -> Result<CodePoint> {
    let (name, params) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("code spec {spec:?} must look like family:a,b")))?;
    let family = registry.lookup(name)?;
    let args = params
        .split(',')
        .map(|s| {
            s.trim().parse::<u64>().map_err(|_| {
                Error::Parse(format!(
                    "bad parameter {s:?} in {spec:?}; expected {}",
                    family.syntax()
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    family.build(&args)
}

pub fn model<'a>(
    registry: &'a Registry<dyn BlockErrorModel>,
    name: &str,
) -> Result<&'a dyn BlockErrorModel> {
    registry.lookup(name)
}
