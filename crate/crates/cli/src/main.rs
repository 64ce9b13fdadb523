//! `brlab`: run verification suites and dump traces, orbit tables and F-polynomials.
//!
//! Exit codes: 0 when every check passes, 1 on a failed check or I/O error,
//! 2 on a usage error.

mod config;
mod suites;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use brlab::br::{t_values, BrConfig};
use brlab::report::Report;
use clap::{Args, Parser, Subcommand, ValueEnum};

use config::{br_config, check_tol, parse_grid, parse_pairs, FileConfig, Grid, RunConfig};

#[derive(Parser)]
#[command(name = "brlab", version, about = "Verify periodicities and dilogarithm identities of B_r T- and Y-systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and emit a JSON report.
    Verify {
        suite: Suite,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Write a trace, orbit table or F-polynomial list.
    Dump {
        #[command(subcommand)]
        target: DumpTarget,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum Suite {
    Tropical,
    Tsystem,
    Ysystem,
    Roots,
    Dilog,
    Pairs,
    All,
}

#[derive(Args)]
struct VerifyOpts {
    /// Rank r of B_r; with --level selects a single configuration.
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    level: Option<usize>,
    /// `default` or a list such as `2x2,3x2`.
    #[arg(long)]
    grid: Option<String>,
    /// Simply laced pair such as `A3:A2`; repeatable.
    #[arg(long)]
    pair: Vec<String>,
    /// ysystem: rational|tropical; dilog: constant|functional|all; pairs: tropical|trivial|rational|all.
    #[arg(long)]
    mode: Option<String>,
    /// Tolerance for the dilogarithm identities.
    #[arg(long)]
    tol: Option<f64>,
    /// Base seed for random positive initial data.
    #[arg(long)]
    seed: Option<u64>,
    /// Random initial points per configuration.
    #[arg(long)]
    samples: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// tropical suite: write the trace CSV of the (single) configuration here.
    #[arg(long)]
    dump_trace: Option<PathBuf>,
    /// TOML file with defaults; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Add wall-clock timings to the records (makes reports nondeterministic).
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum DumpTarget {
    /// Tropical trace as CSV.
    Trace {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        level: usize,
        /// First time point, in units of u.
        #[arg(long, allow_hyphen_values = true)]
        from: Option<f64>,
        /// Last time point, in units of u.
        #[arg(long, allow_hyphen_values = true)]
        to: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Orbits of sigma on the almost positive roots of A_{2r-1}.
    Orbits {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// F-polynomials over one period, one per line.
    Fpolys {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Usage(anyhow::Error),
    Runtime(anyhow::Error),
}

fn usage<T>(r: Result<T>) -> Result<T, Failure> {
    r.map_err(Failure::Usage)
}

fn runtime<T>(r: Result<T>) -> Result<T, Failure> {
    r.map_err(Failure::Runtime)
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn run_config(opts: &VerifyOpts) -> Result<RunConfig> {
    let file = match &opts.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let grid = match (opts.rank, opts.level, &opts.grid) {
        (Some(r), Some(l), _) => Grid::Explicit(vec![br_config(r, l)?]),
        (_, _, Some(g)) => parse_grid(g)?,
        (None, None, None) => match &file.grid {
            Some(v) => Grid::Explicit(v.iter().map(|&(r, l)| br_config(r, l)).collect::<Result<_>>()?),
            None => Grid::Default,
        },
        // a lone --rank only selects ranks for the root suite
        (Some(_), None, None) => Grid::Default,
        (None, Some(_), None) => anyhow::bail!("--level needs --rank"),
    };
    let ranks = match opts.rank {
        Some(r) => Some(vec![br_config(r, 2)?.r]),
        None => file.ranks.clone(),
    };
    let pair_names = if opts.pair.is_empty() { file.pairs.clone() } else { Some(opts.pair.clone()) };
    Ok(RunConfig {
        grid,
        ranks,
        pairs: pair_names.as_deref().map(parse_pairs).transpose()?,
        mode: opts.mode.clone().or(file.mode),
        tol: check_tol(opts.tol.or(file.tol).unwrap_or(1e-8))?,
        seed: opts.seed.or(file.seed).unwrap_or(brlab::rng::DEFAULT_SEED),
        samples: opts.samples.or(file.samples).unwrap_or(5),
        timings: opts.timings || file.timings.unwrap_or(false),
    })
}

fn suite_modes(suite: Suite) -> &'static [&'static str] {
    match suite {
        Suite::Ysystem => &["rational", "tropical"],
        Suite::Dilog => &["constant", "functional", "all"],
        Suite::Pairs => &["tropical", "trivial", "rational", "all"],
        _ => &[],
    }
}

fn verify(suite: Suite, opts: &VerifyOpts) -> Result<bool, Failure> {
    let rc = usage(run_config(opts))?;
    if let Some(m) = &rc.mode {
        let allowed = suite_modes(suite);
        if !allowed.contains(&m.as_str()) {
            return Err(Failure::Usage(anyhow::anyhow!("mode {m:?} not one of {allowed:?}")));
        }
    }
    if opts.rank.is_some() && opts.level.is_none() && suite != Suite::Roots {
        return Err(Failure::Usage(anyhow::anyhow!("--rank needs --level for this suite")));
    }
    if opts.dump_trace.is_some() && suite != Suite::Tropical {
        return Err(Failure::Usage(anyhow::anyhow!("--dump-trace applies to the tropical suite")));
    }
    let mut dumps = Vec::new();
    let records = match suite {
        Suite::Tropical => {
            let want_dump = opts.dump_trace.is_some();
            if want_dump && !matches!(&rc.grid, Grid::Explicit(v) if v.len() == 1) {
                return Err(Failure::Usage(anyhow::anyhow!("--dump-trace needs a single --rank/--level")));
            }
            suites::tropical(&rc, want_dump.then_some(&mut dumps))
        }
        Suite::Tsystem => suites::tsystem(&rc),
        Suite::Ysystem => suites::ysystem(&rc),
        Suite::Roots => suites::roots(&rc),
        Suite::Dilog => suites::dilog(&rc),
        Suite::Pairs => suites::pairs(&rc),
        Suite::All => suites::all(&rc),
    };
    let records = runtime(records)?;
    if let (Some(path), Some((_, csv))) = (&opts.dump_trace, dumps.first()) {
        runtime(write_output(Some(path), csv))?;
    }
    let name = format!("verify {}", suite.to_possible_value().expect("named").get_name());
    let report = Report::new(name, records);
    let json = runtime(serde_json::to_string_pretty(&report).map_err(Into::into))?;
    runtime(write_output(opts.out.as_deref(), &(json + "\n")))?;
    Ok(report.pass)
}

/// `u` on the half-integer grid, as `2u`.
fn doubled(u: f64) -> Result<i64> {
    let d = 2.0 * u;
    if d.fract() != 0.0 || d.abs() > 1e6 {
        anyhow::bail!("time {u} is not on the half-integer grid");
    }
    Ok(d as i64)
}

fn fpoly_listing(cfg: &BrConfig) -> Result<String> {
    let p = 2 * cfg.period();
    let vals = t_values(&brlab::fpoly::f_walk(cfg, 0, p)?);
    let mut s = String::from("a,m,u2,F\n");
    for (idx, f) in vals.iter().filter(|(k, _)| (0..p).contains(&k.u2)) {
        s.push_str(&format!("{},{},{},{}\n", idx.a, idx.m, idx.u2, f));
    }
    Ok(s)
}

fn dump(target: &DumpTarget) -> Result<(), Failure> {
    match target {
        DumpTarget::Trace { rank, level, from, to, out } => {
            let cfg = usage(br_config(*rank, *level))?;
            let from = usage(from.map(doubled).transpose())?.unwrap_or(-2 * cfg.h_dual());
            let to = usage(to.map(doubled).transpose())?.unwrap_or(2 * cfg.period());
            if from > to {
                return Err(Failure::Usage(anyhow::anyhow!("--from is after --to")));
            }
            let trace = runtime(brlab::troplab::run_tropical(&cfg, from, to).map_err(Into::into))?;
            runtime(write_output(out.as_deref(), &trace.to_csv()))
        }
        DumpTarget::Orbits { rank, out } => {
            let r = usage(br_config(*rank, 2))?.r;
            let table = runtime(brlab::roots::orbit_decomposition(r).map_err(Into::into))?;
            runtime(write_output(out.as_deref(), &table.to_text()))
        }
        DumpTarget::Fpolys { rank, level, out } => {
            let cfg = usage(br_config(*rank, *level))?;
            let text = runtime(fpoly_listing(&cfg))?;
            runtime(write_output(out.as_deref(), &text))
        }
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify { suite, opts } => verify(*suite, opts),
        Command::Dump { target } => dump(target).map(|()| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
