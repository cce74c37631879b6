//! Running a dueling solver against an ordinary reward bandit.
//!
//! Each dueling round costs two pulls: the proposed left and right arms are
//! both played in the reward environment, observing rewards `u` and `v`,
//! and a synthetic comparison bit is drawn with `Pr[right wins] =
//! (1 + v - u) / 2` (the linear link applied to the realised rewards).
//! The expected reward-bandit regret of the two pulls is exactly twice the
//! duel's average-utility regret, so a no-regret dueling solver run this
//! way is a no-regret reward bandit at a factor-two cost.

use rand::{Rng, RngCore};

use crate::env::MabEnvironment;
use crate::error::Error;
use crate::link::ChoiceOutcome;
use crate::reductions::DuelingSolver;

/// One reward-bandit pull made by the adapter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PullRecord {
    pub arm: usize,
    pub reward: f64,
}

/// Plays `pull_horizon` reward-bandit pulls (two per duel) and returns the
/// pull log in play order.
///
/// `pull_horizon` must be even, and the solver and environment must agree
/// on the arm count.
pub fn dueling_to_mab<D: DuelingSolver>(
    solver: &mut D,
    env: &MabEnvironment,
    pull_horizon: u64,
    rng: &mut dyn RngCore,
) -> Result<Vec<PullRecord>, Error> {
    if !pull_horizon.is_multiple_of(2) {
        return Err(Error::OddPullHorizon(pull_horizon));
    }
    if solver.arm_count() != env.arm_count() {
        return Err(Error::InvalidParameter(format!(
            "solver has {} arms but the environment has {}",
            solver.arm_count(),
            env.arm_count()
        )));
    }
    let mut log = Vec::with_capacity(pull_horizon as usize);
    for _ in 0..pull_horizon / 2 {
        let (left, right) = solver.propose(rng)?;
        let u = env.pull(left, rng)?;
        let v = env.pull(right, rng)?;
        log.push(PullRecord {
            arm: left,
            reward: u,
        });
        log.push(PullRecord {
            arm: right,
            reward: v,
        });
        let p_right = (1.0 + v - u) / 2.0;
        let choice = ChoiceOutcome::from_left_win(!rng.gen_bool(p_right));
        solver.absorb(choice)?;
    }
    Ok(log)
}
