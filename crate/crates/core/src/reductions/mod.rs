//! Reductions from dueling feedback to singleton bandit machines.
//!
//! A dueling solver proposes an ordered pair of arms, the environment
//! reports which one won, and the solver converts that bit into reward
//! feedback for its inner SBMs. Three reductions are provided, each with a
//! different structure/regret trade-off, plus an adapter that runs any
//! dueling solver against an ordinary reward bandit.

mod adapter;
mod doubler;
mod multisbm;
mod sparring;

pub use adapter::{dueling_to_mab, PullRecord};
pub use doubler::{Doubler, LinearDoubler};
pub use multisbm::MultiSbm;
pub use sparring::Sparring;

use rand::RngCore;

use crate::error::Error;
use crate::link::ChoiceOutcome;

/// Propose/absorb contract for index-armed dueling solvers.
///
/// `propose` yields the ordered pair `(left, right)` for the next duel and
/// `absorb` reports its outcome; the two must strictly alternate, starting
/// with `propose`. The generator parameter feeds solvers with internal
/// randomness (only the doubler uses it); passing the run's stream keeps a
/// whole trajectory reproducible from one seed.
pub trait DuelingSolver {
    /// Number of arms being duelled.
    fn arm_count(&self) -> usize;

    /// Chooses the next pair of arms.
    fn propose(&mut self, rng: &mut dyn RngCore) -> Result<(usize, usize), Error>;

    /// Consumes the comparison outcome of the proposed pair.
    fn absorb(&mut self, choice: ChoiceOutcome) -> Result<(), Error>;
}

/// Default UCB exponent for inner machines without a horizon-tuned rule.
pub const DEFAULT_UCB_ALPHA: f64 = 3.0;

/// UCB exponent for the one-SBM-per-arm reduction.
///
/// With a known horizon `T` this is `max(3, ln K / ln ln T)`; without one
/// (or when `ln ln T` is not meaningfully positive) it falls back to 3.
pub fn multisbm_alpha(arm_count: usize, horizon: Option<u64>) -> f64 {
    let fallback = DEFAULT_UCB_ALPHA;
    let Some(horizon) = horizon else {
        return fallback;
    };
    let log_log = (horizon as f64).ln().ln();
    if !log_log.is_finite() || log_log <= 0.0 {
        return fallback;
    }
    fallback.max((arm_count.max(1) as f64).ln() / log_log)
}
