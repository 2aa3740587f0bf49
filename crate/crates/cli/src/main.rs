//! `doubling` — classify integer sets by sumset doubling structure and run
//! exhaustive verification campaigns.
//!
//! Set arguments use the shared literal format: comma-separated decimal
//! integers ("0,1,2,5,6,10"), or "@path" to read one set per line.

use clap::{Parser, Subcommand};
use doubling_core::{
    classify, enumerate_normalized, find_isomorphism, format_set, generate_forms, parse_set_arg,
    run_census, run_verification, Error, FamilyFilter, HarnessConfig, IntSet, Regime,
    SumPartition, TheoremId,
};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

/// Spans above this are rejected without --force; the enumeration doubles
/// per unit of span.
const SPAN_COST_GUARD: i64 = 25;

#[derive(Parser)]
#[command(name = "doubling", version, about, arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a set against the four structure cases, with certificates.
    Classify {
        /// Set literal or @file with one set per line.
        set: String,
    },
    /// Search for an order-2 Freiman isomorphism between two sets.
    Iso {
        set_x: String,
        set_y: String,
    },
    /// Generate the complete T/S form collections for an even span.
    Forms {
        #[arg(long)]
        n: i64,
        /// T, S, or both.
        #[arg(long, default_value = "both")]
        family: String,
    },
    /// List normalized sets (min 0, max n, gcd 1), one per line.
    Enumerate {
        #[arg(long)]
        n: i64,
        /// Keep only one doubling regime: sub_critical, critical, or
        /// super_critical.
        #[arg(long)]
        regime: Option<String>,
    },
    /// Classify every normalized set up to a span and aggregate the counts.
    Census {
        #[arg(long = "max-n", default_value_t = 18)]
        max_n: i64,
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow spans past the cost guard.
        #[arg(long)]
        force: bool,
    },
    /// Check theorems exhaustively; exits 1 if any conclusion fails.
    Verify {
        #[arg(long = "max-n", default_value_t = 18)]
        max_n: i64,
        /// Comma-separated ids: thm_2k1b, thm_3k3, thm_freiman2009, thm_bg,
        /// thm_main.
        #[arg(long, value_delimiter = ',', required = true)]
        theorems: Vec<String>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        force: bool,
    },
}

fn parse_one_set(arg: &str) -> Result<IntSet, Error> {
    let sets = parse_set_arg(arg)?;
    match <[IntSet; 1]>::try_from(sets) {
        Ok([set]) => Ok(set),
        Err(sets) => Err(Error::Parse(format!(
            "expected exactly one set, got {}",
            sets.len()
        ))),
    }
}

fn parse_family(s: &str) -> Result<FamilyFilter, Error> {
    match s {
        "T" => Ok(FamilyFilter::T),
        "S" => Ok(FamilyFilter::S),
        "both" => Ok(FamilyFilter::Both),
        _ => Err(Error::Parse(format!(
            "family must be T, S, or both, got \"{s}\""
        ))),
    }
}

fn parse_regime(s: &str) -> Result<Regime, Error> {
    match s {
        "sub_critical" => Ok(Regime::SubCritical),
        "critical" => Ok(Regime::Critical),
        "super_critical" => Ok(Regime::SuperCritical),
        _ => Err(Error::Parse(format!("unknown regime \"{s}\""))),
    }
}

fn guard_span(max_n: i64, force: bool) -> Result<(), Error> {
    if max_n > SPAN_COST_GUARD && !force {
        return Err(Error::Parse(format!(
            "max span {max_n} exceeds {SPAN_COST_GUARD}; the enumeration grows as 2^n \
             (pass --force to run anyway)"
        )));
    }
    Ok(())
}

fn config(max_n: i64, jobs: Option<usize>, theorems: Vec<TheoremId>) -> HarnessConfig {
    let mut config = HarnessConfig::new(max_n);
    config.theorems = theorems;
    if let Some(jobs) = jobs {
        config.job_count = jobs;
    }
    config
}

/// Exit code 1 is reserved for verification violations.
fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Classify { set } => {
            for a in parse_set_arg(&set)? {
                let c = classify(&a)?;
                println!("{}", c.to_json());
            }
        }
        Command::Iso { set_x, set_y } => {
            let x = parse_one_set(&set_x)?;
            let y = parse_one_set(&set_y)?;
            let px = SumPartition::from_ints(x.as_slice())?;
            let py = SumPartition::from_ints(y.as_slice())?;
            match find_isomorphism(&px, &py) {
                Some(w) => {
                    let pairs: Vec<[i64; 2]> = w
                        .mapping
                        .iter()
                        .enumerate()
                        .map(|(i, &p)| [x.as_slice()[i], y.as_slice()[p]])
                        .collect();
                    println!("{}", json!({ "mapping": pairs }));
                }
                None => println!("null"),
            }
        }
        Command::Forms { n, family } => {
            let family = parse_family(&family)?;
            let forms = generate_forms(n, family)?;
            let items: Vec<serde_json::Value> = forms
                .iter()
                .map(|(a, w)| {
                    let mut obj = json!({ "set": a.set().as_slice() });
                    let detail = doubling_core::classify::form_json(w);
                    for (k, v) in detail.as_object().unwrap() {
                        obj[k] = v.clone();
                    }
                    obj
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&items).unwrap());
        }
        Command::Enumerate { n, regime } => {
            let filter = regime.as_deref().map(parse_regime).transpose()?;
            for a in enumerate_normalized(n)? {
                if let Some(r) = filter {
                    let two_a = a.sumset_bits().count_ones();
                    let profile =
                        doubling_core::DoublingProfile::from_sizes(a.len(), two_a);
                    if profile.regime != r {
                        continue;
                    }
                }
                println!("{}", format_set(a.set()));
            }
        }
        Command::Census {
            max_n,
            jobs,
            out,
            force,
        } => {
            guard_span(max_n, force)?;
            let mut config = config(max_n, jobs, Vec::new());
            config.output_path = out;
            let report = run_census(&config)?;
            if config.output_path.is_none() {
                println!("{}", report.to_json_string());
            }
        }
        Command::Verify {
            max_n,
            theorems,
            jobs,
            force,
        } => {
            guard_span(max_n, force)?;
            let ids: Vec<TheoremId> = theorems
                .iter()
                .map(|s| s.trim().parse())
                .collect::<Result<_, _>>()?;
            let config = config(max_n, jobs, ids);
            let failures = run_verification(&config)?;
            println!("{}", serde_json::to_string_pretty(&failures).unwrap());
            if !failures.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
