//! Experiment harness: named scenarios, replicated runs, and flat-file
//! output for plotting.

mod csv;
mod runner;
mod scenario;
pub mod selftest;

pub use csv::{emit_csv, write_csv, CSV_HEADER};
pub use runner::{
    build_solver, run_batch, run_cell, run_trajectory, run_ucb_pseudo_regret, CurvePoint,
    CurveSummary, RunBatch, TrajectoryOutcome,
};
pub use scenario::{
    default_checkpoints, find_scenario, registry, Algorithm, EnvironmentSpec, ScenarioSpec,
};

/// Environment variable naming the default output directory for results.
pub const OUTPUT_DIR_ENV: &str = "DUELBAND_OUT_DIR";
