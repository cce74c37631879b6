//! Command-line front end for the dueling-bandit harness.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde::Deserialize;

use duelband::env::{yj_environment, PreferenceMatrixEnvironment};
use duelband::harness::{
    default_checkpoints, find_scenario, registry, run_cell, selftest, write_csv, Algorithm,
    OUTPUT_DIR_ENV,
};
use duelband::RandomSeed;

#[derive(Parser)]
#[command(
    name = "duelband",
    version,
    about = "Replicated duel simulations for bandit reductions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in scenarios.
    List {
        /// Emit full scenario specs as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run one scenario and write its regret curves as CSV.
    Run {
        /// Scenario name, as shown by `list`.
        #[arg(long)]
        scenario: String,
        /// Comma-separated subset of algorithms to run.
        #[arg(long, value_delimiter = ',')]
        algs: Vec<Algorithm>,
        /// Override the number of replicated runs.
        #[arg(long)]
        runs: Option<u32>,
        /// Override the duel horizon; checkpoints are re-derived.
        #[arg(long)]
        horizon: Option<u64>,
        /// Override the base seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Output CSV path. Defaults to <scenario>.csv in $DUELBAND_OUT_DIR
        /// (or the working directory).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Diagnose a preference matrix: transitivity factor, order
    /// violations, and triangle-inequality feasibility.
    VerifyMatrix {
        /// JSON file with an `epsilon` matrix and optional `implied_order`
        /// (best arm first). Defaults to the built-in six-arm table.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Run the built-in functional checks.
    Selftest,
}

#[derive(Deserialize)]
struct MatrixFile {
    epsilon: Vec<Vec<f64>>,
    implied_order: Option<Vec<usize>>,
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::List { json } => list(json),
        Command::Run {
            scenario,
            algs,
            runs,
            horizon,
            seed,
            out,
        } => run(&scenario, algs, runs, horizon, seed, out),
        Command::VerifyMatrix { file } => verify_matrix(file.as_deref()),
        Command::Selftest => Ok(run_selftest()),
    }
}

fn list(json: bool) -> Result<ExitCode> {
    let scenarios = registry();
    if json {
        println!("{}", serde_json::to_string_pretty(&scenarios)?);
        return Ok(ExitCode::SUCCESS);
    }
    for spec in &scenarios {
        println!(
            "{}\t{} arms\thorizon {}\truns {}",
            spec.name,
            spec.arm_count(),
            spec.horizon,
            spec.runs
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn run(
    scenario: &str,
    algs: Vec<Algorithm>,
    runs: Option<u32>,
    horizon: Option<u64>,
    seed: Option<u64>,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    let mut spec = find_scenario(scenario)?;
    if let Some(h) = horizon {
        spec.horizon = h;
        spec.checkpoints = default_checkpoints(h);
    }
    if let Some(r) = runs {
        spec.runs = r;
    }
    if let Some(s) = seed {
        spec.base_seed = RandomSeed(s);
    }
    if !algs.is_empty() {
        spec.algorithms = algs;
    }
    spec.validate()?;

    let mut cells = Vec::new();
    for &algorithm in &spec.algorithms {
        cells.push(run_cell(&spec, algorithm)?);
        eprintln!(
            "{}: {} runs of {} duels done",
            algorithm, spec.runs, spec.horizon
        );
    }

    let path = match out {
        Some(path) => path,
        None => {
            let dir = std::env::var_os(OUTPUT_DIR_ENV)
                .map(PathBuf::from)
                .unwrap_or_else(|| PathBuf::from("."));
            dir.join(format!("{}.csv", spec.name))
        }
    };
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)
                .with_context(|| format!("creating {}", parent.display()))?;
        }
    }
    write_csv(&path, &cells).with_context(|| format!("writing {}", path.display()))?;
    println!(
        "wrote {} curve(s) x {} checkpoint(s) to {}",
        cells.len(),
        spec.checkpoints.len(),
        path.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn verify_matrix(file: Option<&std::path::Path>) -> Result<ExitCode> {
    let env = match file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let parsed: MatrixFile = serde_json::from_str(&text)
                .with_context(|| format!("parsing {}", path.display()))?;
            let order = parsed
                .implied_order
                .unwrap_or_else(|| (0..parsed.epsilon.len()).collect());
            PreferenceMatrixEnvironment::new(parsed.epsilon, order)?
        }
        None => yj_environment(),
    };
    print!("{}", env.verify_relaxed_properties());
    Ok(ExitCode::SUCCESS)
}

fn run_selftest() -> ExitCode {
    let outcomes = selftest::run_all();
    let mut failures = 0u32;
    for outcome in &outcomes {
        if outcome.passed {
            println!("PASS {}", outcome.name);
        } else {
            println!("FAIL {} ({})", outcome.name, outcome.detail);
            failures += 1;
        }
    }
    if failures == 0 {
        println!("all {} checks passed", outcomes.len());
        ExitCode::SUCCESS
    } else {
        eprintln!("{failures} of {} checks failed", outcomes.len());
        ExitCode::FAILURE
    }
}
