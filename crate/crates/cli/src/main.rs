//! Command-line front end: scan, dzeros, verify, report, all.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use zetalab_cli::pipeline::{self, PipelineError, RunArtifacts};
use zetalab_cli::RunConfig;
use zetalab_core::verify::CheckName;

#[derive(Parser)]
#[command(name = "zetalab", version, about = "Desk-scale zeta / zeta' zero laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonFlags {
    /// Mantissa bits of the working precision.
    #[arg(long)]
    bits: Option<u32>,
    /// Absolute-error target per evaluation.
    #[arg(long)]
    eps: Option<f64>,
    /// Worker threads (does not affect results).
    #[arg(long)]
    workers: Option<usize>,
    /// Zero-cache file.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Report directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for the randomized property checks.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Locate and certify critical-line zeros up to --t-max.
    Scan {
        #[arg(long = "t-max")]
        t_max: f64,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Census of zeta' zeros in [0, --sigma-max] x (0, --t-max].
    Dzeros {
        #[arg(long = "t-max")]
        t_max: f64,
        #[arg(long = "sigma-max", default_value_t = 3.0)]
        sigma_max: f64,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Run verification checks over the cached populations.
    Verify {
        /// Comma-separated check names, or "all".
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long = "t-max", default_value_t = 100.0)]
        t_max: f64,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Regenerate every report file from the cache.
    Report {
        #[arg(long = "t-max", default_value_t = 100.0)]
        t_max: f64,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Full pipeline: scan, dzeros, pair, verify, report.
    All {
        #[arg(long = "t-max")]
        t_max: f64,
        #[arg(long = "sigma-max", default_value_t = 3.0)]
        sigma_max: f64,
        #[command(flatten)]
        common: CommonFlags,
    },
}

fn apply_common(cfg: &mut RunConfig, c: &CommonFlags) {
    if let Some(b) = c.bits {
        cfg.mantissa_bits = b;
    }
    if let Some(e) = c.eps {
        cfg.target_abs_error = e;
    }
    if let Some(w) = c.workers {
        cfg.workers = w;
    }
    if let Some(p) = &c.cache {
        cfg.cache_path = p.clone();
    }
    if let Some(p) = &c.out {
        cfg.report_dir = p.clone();
    }
    if let Some(s) = c.seed {
        cfg.seed = s;
    }
}

fn finish(result: Result<RunArtifacts, PipelineError>) -> ExitCode {
    match result {
        Ok(art) => {
            for n in &art.notes {
                eprintln!("note: {n}");
            }
            for e in &art.events {
                eprintln!("event[{}]: {}", e.code, e.message);
            }
            println!(
                "zeros={} dzeros={} pairings={} checks={} wall={:.1}s exit={}",
                art.zeros.zeros().len(),
                art.dzeros.dzeros().len(),
                art.pairings.len(),
                art.records.len(),
                art.wall_secs,
                art.exit_code()
            );
            ExitCode::from(art.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut cfg = RunConfig::default();
    match cli.command {
        Command::Scan { t_max, common } => {
            cfg.t_max = t_max;
            apply_common(&mut cfg, &common);
            finish(pipeline::run_scan(&cfg))
        }
        Command::Dzeros {
            t_max,
            sigma_max,
            common,
        } => {
            cfg.t_max = t_max;
            cfg.rect_sigma_max = sigma_max;
            apply_common(&mut cfg, &common);
            finish(pipeline::run_dzeros(&cfg))
        }
        Command::Verify {
            checks,
            t_max,
            common,
        } => {
            cfg.t_max = t_max;
            apply_common(&mut cfg, &common);
            let filter = if checks.trim() == "all" {
                None
            } else {
                let names: Option<Vec<CheckName>> =
                    checks.split(',').map(|s| CheckName::parse(s.trim())).collect();
                match names {
                    Some(v) => Some(v),
                    None => {
                        eprintln!("error: unknown check name in --checks '{checks}'");
                        return ExitCode::from(pipeline::EXIT_IO as u8);
                    }
                }
            };
            finish(pipeline::run_verify(&cfg, filter.as_deref()))
        }
        Command::Report { t_max, common } => {
            cfg.t_max = t_max;
            apply_common(&mut cfg, &common);
            finish(pipeline::run_report(&cfg))
        }
        Command::All {
            t_max,
            sigma_max,
            common,
        } => {
            cfg.t_max = t_max;
            cfg.rect_sigma_max = sigma_max;
            apply_common(&mut cfg, &common);
            finish(pipeline::run_all(&cfg))
        }
    }
}
