//! Monte-Carlo execution of scenarios: single trajectories, replicated
//! batches, and per-checkpoint summaries.

use rand::seq::SliceRandom;

use crate::env::{
    LedgerCheckpoint, MabEnvironment, PreferenceMatrixEnvironment, RegretLedger, UtilityEnvironment,
};
use crate::error::Error;
use crate::harness::scenario::{Algorithm, EnvironmentSpec, ScenarioSpec};
use crate::link::ChoiceOutcome;
use crate::reductions::{
    multisbm_alpha, Doubler, DuelingSolver, MultiSbm, Sparring, DEFAULT_UCB_ALPHA,
};
use crate::sbm::{Sbm, UcbPolicy};
use crate::seed::RunRng;

/// One simulated trajectory's regret record.
#[derive(Clone, Debug)]
pub struct TrajectoryOutcome {
    /// Cumulative regret at each requested checkpoint, in time order.
    pub checkpoints: Vec<LedgerCheckpoint>,
    pub final_average_regret: f64,
    pub final_choice_regret: f64,
    /// Arm relabelling used for this run, when the scenario shuffles arms.
    /// Solver arm `i` played the environment's original arm `perm[i]`.
    pub permutation: Option<Vec<usize>>,
}

/// Instantiates the solver a scenario cell asks for.
pub fn build_solver(
    arm_count: usize,
    algorithm: Algorithm,
    horizon: u64,
) -> Result<Box<dyn DuelingSolver>, Error> {
    Ok(match algorithm {
        Algorithm::Doubler => {
            Box::new(Doubler::new(UcbPolicy::new(arm_count, DEFAULT_UCB_ALPHA)?)?)
        }
        Algorithm::MultiSbm => {
            let alpha = multisbm_alpha(arm_count, Some(horizon));
            let sbms = (0..arm_count)
                .map(|_| UcbPolicy::new(arm_count, alpha))
                .collect::<Result<Vec<_>, _>>()?;
            Box::new(MultiSbm::new(sbms)?)
        }
        Algorithm::Sparring => Box::new(Sparring::new(
            UcbPolicy::new(arm_count, DEFAULT_UCB_ALPHA)?,
            UcbPolicy::new(arm_count, DEFAULT_UCB_ALPHA)?,
        )?),
    })
}

enum RunEnv {
    Utility(UtilityEnvironment),
    Matrix(PreferenceMatrixEnvironment),
}

impl RunEnv {
    fn arm_count(&self) -> usize {
        match self {
            RunEnv::Utility(env) => env.arm_count(),
            RunEnv::Matrix(env) => env.arm_count(),
        }
    }

    /// Plays one duel and returns the outcome with both regret increments.
    fn duel(
        &self,
        x: usize,
        y: usize,
        rng: &mut RunRng,
    ) -> Result<(ChoiceOutcome, f64, f64), Error> {
        match self {
            RunEnv::Utility(env) => {
                let record = env.duel(x, y, rng)?;
                Ok((
                    record.choice,
                    env.regret_av_step(&record.utilities),
                    env.regret_choice_step(record.choice, &record.utilities),
                ))
            }
            RunEnv::Matrix(env) => {
                let choice = env.duel(x, y, rng)?;
                let step = env.regret_step(x, y);
                Ok((choice, step, step))
            }
        }
    }
}

/// Plays one full trajectory of the scenario with the given algorithm.
///
/// The run index selects the seed offset; every random decision of the
/// run (arm relabelling, environment draws, solver tie-breaking draws)
/// comes from that single stream, so a `(scenario, algorithm, run)`
/// triple re-plays bit for bit.
pub fn run_trajectory(
    spec: &ScenarioSpec,
    algorithm: Algorithm,
    run_index: u32,
) -> Result<TrajectoryOutcome, Error> {
    spec.validate()?;
    let mut rng = spec.base_seed.for_run(u64::from(run_index)).rng();

    let mut permutation = None;
    let env = match &spec.environment {
        EnvironmentSpec::Utility { mu, link, noise } => {
            let mu_run = if spec.permute_arms {
                let mut perm: Vec<usize> = (0..mu.len()).collect();
                perm.shuffle(&mut rng);
                let shuffled = perm.iter().map(|&i| mu[i]).collect();
                permutation = Some(perm);
                shuffled
            } else {
                mu.clone()
            };
            RunEnv::Utility(UtilityEnvironment::new(mu_run, *link, *noise)?)
        }
        EnvironmentSpec::PreferenceMatrix {
            epsilon,
            implied_order,
        } => RunEnv::Matrix(PreferenceMatrixEnvironment::new(
            epsilon.clone(),
            implied_order.clone(),
        )?),
    };

    let mut solver = build_solver(env.arm_count(), algorithm, spec.horizon)?;
    let mut ledger = RegretLedger::new();
    let mut next_checkpoint = 0usize;
    for t in 1..=spec.horizon {
        let (x, y) = solver.propose(&mut rng)?;
        let (choice, average_inc, choice_inc) = env.duel(x, y, &mut rng)?;
        ledger.accrue(average_inc, choice_inc);
        solver.absorb(choice)?;
        if next_checkpoint < spec.checkpoints.len() && spec.checkpoints[next_checkpoint] == t {
            ledger.checkpoint(t);
            next_checkpoint += 1;
        }
    }

    Ok(TrajectoryOutcome {
        checkpoints: ledger.checkpoints().to_vec(),
        final_average_regret: ledger.cumulative_average(),
        final_choice_regret: ledger.cumulative_choice(),
        permutation,
    })
}

/// Summary of the pair-average regret curve at one checkpoint.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvePoint {
    pub time: u64,
    pub mean_regret: f64,
    pub std_regret: f64,
    pub runs: u32,
}

/// One scenario-by-algorithm cell of the results table.
#[derive(Clone, Debug)]
pub struct CurveSummary {
    pub scenario: String,
    pub algorithm: Algorithm,
    pub points: Vec<CurvePoint>,
}

/// Streaming moments of the average-regret curve across runs.
///
/// Batches over disjoint run ranges can be merged; the summary is the
/// same (up to floating-point association) as pushing every run into one
/// batch, which is what lets large cells be split into chunks.
#[derive(Clone, Debug)]
pub struct RunBatch {
    times: Vec<u64>,
    runs: u32,
    sums: Vec<f64>,
    squares: Vec<f64>,
}

impl RunBatch {
    pub fn new(times: Vec<u64>) -> Self {
        let len = times.len();
        RunBatch {
            times,
            runs: 0,
            sums: vec![0.0; len],
            squares: vec![0.0; len],
        }
    }

    pub fn times(&self) -> &[u64] {
        &self.times
    }

    pub fn runs(&self) -> u32 {
        self.runs
    }

    /// Folds one trajectory in. The outcome's checkpoints must line up
    /// with the batch's times.
    pub fn push(&mut self, outcome: &TrajectoryOutcome) -> Result<(), Error> {
        if outcome.checkpoints.len() != self.times.len()
            || outcome
                .checkpoints
                .iter()
                .zip(&self.times)
                .any(|(cp, &t)| cp.time != t)
        {
            return Err(Error::InvalidParameter(
                "trajectory checkpoints do not match the batch times".into(),
            ));
        }
        for (i, cp) in outcome.checkpoints.iter().enumerate() {
            self.sums[i] += cp.average_regret;
            self.squares[i] += cp.average_regret * cp.average_regret;
        }
        self.runs += 1;
        Ok(())
    }

    /// Combines another batch over the same checkpoint times.
    pub fn merge(&mut self, other: &RunBatch) -> Result<(), Error> {
        if other.times != self.times {
            return Err(Error::InvalidParameter(
                "cannot merge batches with different checkpoint times".into(),
            ));
        }
        for i in 0..self.sums.len() {
            self.sums[i] += other.sums[i];
            self.squares[i] += other.squares[i];
        }
        self.runs += other.runs;
        Ok(())
    }

    /// Per-checkpoint mean and sample standard deviation (zero when fewer
    /// than two runs are present).
    pub fn summarize(&self) -> Vec<CurvePoint> {
        let n = f64::from(self.runs);
        self.times
            .iter()
            .enumerate()
            .map(|(i, &time)| {
                let mean = if self.runs == 0 {
                    0.0
                } else {
                    self.sums[i] / n
                };
                let std = if self.runs < 2 {
                    0.0
                } else {
                    let var = (self.squares[i] - n * mean * mean) / (n - 1.0);
                    var.max(0.0).sqrt()
                };
                CurvePoint {
                    time,
                    mean_regret: mean,
                    std_regret: std,
                    runs: self.runs,
                }
            })
            .collect()
    }
}

/// Runs `count` consecutive trajectories starting at `first_run`.
pub fn run_batch(
    spec: &ScenarioSpec,
    algorithm: Algorithm,
    first_run: u32,
    count: u32,
) -> Result<RunBatch, Error> {
    let mut batch = RunBatch::new(spec.checkpoints.clone());
    for offset in 0..count {
        let outcome = run_trajectory(spec, algorithm, first_run + offset)?;
        batch.push(&outcome)?;
    }
    Ok(batch)
}

/// Runs the scenario's full replication count for one algorithm.
pub fn run_cell(spec: &ScenarioSpec, algorithm: Algorithm) -> Result<CurveSummary, Error> {
    let batch = run_batch(spec, algorithm, 0, spec.runs)?;
    Ok(CurveSummary {
        scenario: spec.name.clone(),
        algorithm,
        points: batch.summarize(),
    })
}

/// Pseudo-regret of a single-bandit policy run, `sum(gap(arm) * pulls)`.
///
/// Drives the policy against reward feedback for `horizon` cycles. Kept
/// here so benchmarks of the inner policy share the harness seeding.
pub fn run_ucb_pseudo_regret(
    env: &MabEnvironment,
    alpha: f64,
    horizon: u64,
    rng: &mut RunRng,
) -> Result<(f64, Vec<u64>), Error> {
    let mut policy = UcbPolicy::new(env.arm_count(), alpha)?;
    for _ in 0..horizon {
        let arm = policy.advance()?;
        let reward = env.pull(arm, rng)?;
        policy.feedback(reward)?;
    }
    let gaps = env.gap_profile().gaps();
    let pulls = policy.pulls().to_vec();
    let regret = pulls
        .iter()
        .zip(gaps)
        .map(|(&n, &gap)| n as f64 * gap)
        .sum();
    Ok((regret, pulls))
}
