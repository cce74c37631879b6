//! Singleton bandit machines.
//!
//! An SBM is the reward-feedback learner sitting inside every reduction.
//! Its lifecycle is a strict alternation: `advance` proposes an arm, the
//! caller plays it and returns a reward in `[0, 1]` through `feedback`.
//! Calling either out of turn is a contract violation and fails loudly
//! instead of silently corrupting statistics. `reset` returns the machine
//! to its freshly constructed state at any point.

mod linear;
mod ucb;

pub use linear::LinearPolicy;
pub use ucb::{ucb_index, UcbPolicy};

use crate::error::Error;

/// The advance/feedback contract shared by all singleton bandit machines.
///
/// Arms are dense indices `0..arm_count`. Implementations must start a
/// fresh (or freshly reset) machine with `advance`.
pub trait Sbm {
    /// Number of arms (or candidate vectors) the machine chooses among.
    fn arm_count(&self) -> usize;

    /// Forgets all observations and pending state.
    fn reset(&mut self);

    /// Proposes the next arm to play. Errors if a reward is still owed.
    fn advance(&mut self) -> Result<usize, Error>;

    /// Reports the reward for the most recent `advance`. Errors when no
    /// arm is pending or the reward leaves `[0, 1]`.
    fn feedback(&mut self, reward: f64) -> Result<(), Error>;
}
