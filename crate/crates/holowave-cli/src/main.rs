//! `holowave <scenario> [--config PATH] [--out DIR] [--seed N]`
//!
//! Runs one verification scenario and writes machine-readable results
//! (result.json plus per-scenario artifacts) into the output directory.
//! Exit status 0 iff all criteria pass.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;

use holowave_cli::config::{RunConfig, Scenario};
use holowave_cli::scenarios;

#[derive(Parser, Debug)]
#[command(
    name = "holowave",
    version,
    about = "gravity-capillary water-wave workbench"
)]
struct Cli {
    /// Scenario: simulate | verify-symbols | conservation | dispersion |
    /// linearization | para-residuals | energy-equivalence | energy-growth.
    /// Optional when --config provides one.
    scenario: Option<String>,

    /// JSON configuration file; CLI arguments override its scenario/out/seed.
    #[arg(long)]
    config: Option<PathBuf>,

    /// Output directory (default: ./out/<scenario>).
    #[arg(long)]
    out: Option<PathBuf>,

    /// Seed for random ensembles.
    #[arg(long)]
    seed: Option<u64>,
}

fn load_config(cli: &Cli) -> anyhow::Result<RunConfig> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))?;
            serde_json::from_str::<RunConfig>(&text)
                .with_context(|| format!("parsing config {}", path.display()))?
        }
        None => {
            let name = cli
                .scenario
                .as_deref()
                .context("a scenario name is required when no --config is given")?;
            let scenario =
                Scenario::parse(name).with_context(|| format!("unknown scenario '{name}'"))?;
            RunConfig::for_scenario(scenario)
        }
    };
    if let Some(name) = &cli.scenario {
        cfg.scenario =
            Scenario::parse(name).with_context(|| format!("unknown scenario '{name}'"))?;
    }
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match load_config(&cli) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let out_dir = cli
        .out
        .clone()
        .or_else(|| cfg.output_dir.clone().map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("out").join(cfg.scenario.name()));
    match scenarios::run(&cfg, &out_dir) {
        Ok(result) => {
            result.print_summary();
            if result.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
