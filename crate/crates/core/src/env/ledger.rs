//! Running totals of regret with checkpoint snapshots.

use serde::{Deserialize, Serialize};

/// Cumulative regret recorded at one point in time.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LedgerCheckpoint {
    pub time: u64,
    pub average_regret: f64,
    pub choice_regret: f64,
}

/// Accumulates per-duel regret increments and snapshots them on demand.
///
/// Two channels are tracked: the pair-average notion (mean utility of the
/// two arms played) and the choice notion (utility of the arm the duel
/// declared the winner). Environments that only define one notion feed the
/// same increment to both channels via [`RegretLedger::accrue_single`].
#[derive(Clone, Debug, Default)]
pub struct RegretLedger {
    cumulative_average: f64,
    cumulative_choice: f64,
    checkpoints: Vec<LedgerCheckpoint>,
}

impl RegretLedger {
    pub fn new() -> Self {
        RegretLedger::default()
    }

    /// Adds one duel's regret to both channels.
    pub fn accrue(&mut self, average_increment: f64, choice_increment: f64) {
        self.cumulative_average += average_increment;
        self.cumulative_choice += choice_increment;
    }

    /// Adds one duel's regret when only a single notion is defined.
    pub fn accrue_single(&mut self, increment: f64) {
        self.accrue(increment, increment);
    }

    /// Snapshots the running totals at the given time.
    pub fn checkpoint(&mut self, time: u64) {
        self.checkpoints.push(LedgerCheckpoint {
            time,
            average_regret: self.cumulative_average,
            choice_regret: self.cumulative_choice,
        });
    }

    pub fn cumulative_average(&self) -> f64 {
        self.cumulative_average
    }

    pub fn cumulative_choice(&self) -> f64 {
        self.cumulative_choice
    }

    pub fn checkpoints(&self) -> &[LedgerCheckpoint] {
        &self.checkpoints
    }
}
