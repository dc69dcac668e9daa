mod config;
mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use config::{CliConfig, OutputFormat, Overrides, ENUM_CAP_ENV};
use qrm_core::css_quantum::{
    css_from_rm, encode_basis1, encode_basis2, quantum_table, Basis, LeaderCap,
};
use qrm_core::error_analysis::{
    block_error_bound, builtin_comparison_set, curves_to_csv, monte_carlo_block_error,
    performance_curve_with, qubit_error_rate, Spacing,
};
use qrm_core::gf2::{BitVec, EnumerationCap};
use qrm_core::reed_muller::{classical_table, rm_generator, RmSpec};
use qrm_core::registry::{block_error_models, code_families, model, parse_code_spec};
use qrm_core::verify::{run_suite, Status, VerifyConfig};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "qrm",
    version,
    about = "Classical and quantum Reed-Muller codes: construction, checks and error rates"
)]
struct Cli {
    /// Key/value TOML file with enumeration_cap, leader_cap, format, seed.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Largest log2 codeword count to enumerate (overrides QRM_ENUM_CAP).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=40))]
    enum_cap: Option<u32>,

    /// Largest number of logical qubits for coset-leader listing.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=30))]
    leader_cap: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parameter tables of the classical or quantum codes.
    Tables {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=62))]
        max_m: u32,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Parameters of one code: `(n,k,d)` or `[[n,k,d]] t=<t>`.
    Params {
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        quantum: bool,
    },
    /// Generator matrix of RM(r,m), one row per line.
    Matrix {
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long)]
        m: i64,
    },
    /// Encoded basis state as JSON.
    Encode {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        w: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        basis: u8,
    },
    /// Block and qubit error rates of one code at one channel probability.
    Bound {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        p: f64,
        /// Block error model: tail or monte-carlo.
        #[arg(long, default_value = "tail")]
        model: String,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Curve CSV (`label,p,pe,pq`) for a set of codes.
    Curve {
        /// Code specs: rm:<r>,<m> or rep:<n>,<d>. Defaults to the comparison set.
        #[arg(long, num_args = 1..)]
        codes: Vec<String>,
        #[arg(long)]
        p_min: f64,
        #[arg(long)]
        p_max: f64,
        #[arg(long)]
        points: usize,
        #[arg(long, value_enum, default_value = "log")]
        spacing: SpacingArg,
        #[arg(long, default_value = "tail")]
        model: String,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Monte Carlo estimate of the block error rate.
    Mc {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Runs the structural check suite.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=62))]
        max_m: u32,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "correction")]
struct Correction {
    /// Minimum distance; t = floor((d-1)/2).
    #[arg(long)]
    d: Option<u64>,
    /// Correctable errors.
    #[arg(long)]
    t: Option<u64>,
}

#[derive(Args)]
struct BlockArgs {
    #[arg(long)]
    n: u64,
    #[command(flatten)]
    correction: Correction,
}

impl BlockArgs {
    fn t(&self) -> Result<u64, String> {
        match (self.correction.d, self.correction.t) {
            (Some(0), _) => Err("d must be at least 1".into()),
            (Some(d), _) => Ok((d - 1) / 2),
            (None, Some(t)) => Ok(t),
            (None, None) => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Classical,
    Quantum,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpacingArg {
    Linear,
    Log,
}

fn sci(x: f64) -> String {
    format!("{x:.9e}")
}

fn run(cli: Cli) -> Result<String, String> {
    let flags = Overrides {
        enumeration_cap: cli.enum_cap,
        leader_cap: cli.leader_cap,
        seed: None,
    };
    let mut cfg = CliConfig::resolve(
        cli.config.as_deref(),
        std::env::var(ENUM_CAP_ENV).ok(),
        &flags,
    )?;
    let cap = EnumerationCap(cfg.enumeration_cap);
    let err = |e: qrm_core::Error| e.to_string();

    match cli.command {
        Command::Tables {
            which,
            max_m,
            format,
        } => {
            let format = format.unwrap_or(cfg.output_format);
            let (rows, title) = match which {
                Which::Classical => (
                    classical_table(max_m).map_err(err)?,
                    "Classical Reed-Muller codes: k",
                ),
                Which::Quantum => (
                    quantum_table(max_m).map_err(err)?,
                    "Quantum Reed-Muller codes: k",
                ),
            };
            Ok(render::table(&rows, format, title))
        }
        Command::Params { r, m, quantum } => {
            if quantum {
                let code = css_from_rm(r, m).map_err(err)?;
                Ok(format!("{code} t={}\n", code.t()))
            } else {
                let spec = RmSpec::concrete(r, m).map_err(err)?;
                Ok(format!(
                    "({},{},{})\n",
                    spec.n(),
                    spec.k(),
                    spec.d().expect("concrete")
                ))
            }
        }
        Command::Matrix { r, m } => {
            let spec = RmSpec::new(r, m).map_err(err)?;
            Ok(rm_generator(spec).map_err(err)?.to_string())
        }
        Command::Encode { r, m, w, basis } => {
            let code = css_from_rm(r, m).map_err(err)?;
            let w: BitVec = w.parse().map_err(err)?;
            let state = match Basis::try_from(basis).map_err(err)? {
                Basis::Computational => encode_basis1(&code, &w, cap),
                Basis::Conjugate => encode_basis2(&code, &w, cap),
            }
            .map_err(err)?;
            Ok(state.to_json() + "\n")
        }
        Command::Bound {
            block,
            p,
            model: name,
            trials,
            seed,
        } => {
            cfg.seed = seed.unwrap_or(cfg.seed);
            let t = block.t()?;
            let models = block_error_models(trials, cfg.seed);
            let pe = model(&models, &name)
                .map_err(err)?
                .block_error(block.n, t, p)
                .map_err(err)?;
            let pq = qubit_error_rate(pe, block.n).map_err(err)?;
            Ok(format!(
                "n={} t={t} p={} model={name}\npe={}\npq={}\n",
                block.n,
                sci(p),
                sci(pe),
                sci(pq)
            ))
        }
        Command::Curve {
            codes,
            p_min,
            p_max,
            points,
            spacing,
            model: name,
            trials,
            seed,
        } => {
            cfg.seed = seed.unwrap_or(cfg.seed);
            let families = code_families();
            let codes = if codes.is_empty() {
                builtin_comparison_set().map_err(err)?
            } else {
                codes
                    .iter()
                    .map(|s| parse_code_spec(&families, s))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(err)?
            };
            let spacing = match spacing {
                SpacingArg::Linear => Spacing::Linear,
                SpacingArg::Log => Spacing::Log,
            };
            let models = block_error_models(trials, cfg.seed);
            let chosen = model(&models, &name).map_err(err)?;
            let curves = performance_curve_with(chosen, &codes, p_min, p_max, points, spacing)
                .map_err(err)?;
            Ok(curves_to_csv(&curves))
        }
        Command::Mc {
            block,
            p,
            trials,
            seed,
        } => {
            let seed = seed.unwrap_or(cfg.seed);
            let t = block.t()?;
            let mc = monte_carlo_block_error(block.n, t, p, trials, seed).map_err(err)?;
            let analytic = block_error_bound(block.n, t, p).map_err(err)?;
            Ok(format!(
                "estimate={}\nstderr={}\ntrials={}\nseed={}\nfailures={}\nanalytic={}\nrng={}\n",
                sci(mc.estimate),
                sci(mc.stderr),
                mc.trials,
                mc.seed,
                mc.failures,
                sci(analytic),
                mc.algorithm
            ))
        }
        Command::Verify { max_m } => {
            let vcfg = VerifyConfig {
                max_m,
                cap,
                leader_cap: LeaderCap(cfg.leader_cap),
            };
            let outcomes = run_suite(&vcfg, &mut |o| println!("{o}"));
            let failed: Vec<_> = outcomes
                .iter()
                .filter(|o| matches!(o.status, Status::Fail(_)))
                .collect();
            let skipped = outcomes
                .iter()
                .filter(|o| matches!(o.status, Status::Skip(_)))
                .count();
            eprintln!(
                "{} checks: {} passed, {} failed, {skipped} skipped",
                outcomes.len(),
                outcomes.len() - failed.len() - skipped,
                failed.len()
            );
            match failed.first() {
                Some(first) => Err(format!("first failing check: {}", first.name)),
                None => Ok(String::new()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
