//! Duel environment with hidden per-arm utilities.
//!
//! A duel on arms `(x, y)` first realises utilities `u, v`, either the
//! exact means (`Deterministic`) or independent Bernoulli draws with those
//! means (`Bernoulli`), then lets the left arm win with probability
//! `link(u, v)`. The realised utilities are returned alongside the outcome
//! for regret accounting only; solver code must never read them, since the
//! whole point of the dueling protocol is that utilities stay hidden.
//!
//! Two per-step regrets are tracked against the best mean `mu*`:
//!
//! ```text
//! average  mu* - (u + v) / 2
//! choice   mu* - (u if the left arm won, else v)
//! ```
//!
//! In expectation the choice regret never exceeds the average regret,
//! because every link favours the better arm.

use rand::Rng;

use crate::error::Error;
use crate::gap::GapProfile;
use crate::link::{ChoiceOutcome, LinkFunction};
use crate::seed::RunRng;

/// How realised utilities relate to the per-arm means.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UtilityNoise {
    /// Utilities equal their means on every duel.
    Deterministic,
    /// Utilities are independent Bernoulli draws with the arm's mean.
    Bernoulli,
}

/// Realised utilities of one duel; feed these to the regret ledger only.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UtilityPair {
    pub left: f64,
    pub right: f64,
}

/// Outcome of one duel in a utility environment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DuelRecord {
    pub choice: ChoiceOutcome,
    /// Hidden utilities, exposed for regret accounting only.
    pub utilities: UtilityPair,
}

/// Stationary dueling environment over hidden utilities.
#[derive(Clone, Debug)]
pub struct UtilityEnvironment {
    mu: Vec<f64>,
    link: LinkFunction,
    noise: UtilityNoise,
    gap: GapProfile,
}

impl UtilityEnvironment {
    /// Builds the environment; utilities must be nonempty and in `[0, 1]`.
    pub fn new(mu: Vec<f64>, link: LinkFunction, noise: UtilityNoise) -> Result<Self, Error> {
        let gap = GapProfile::from_utilities(&mu)?;
        Ok(UtilityEnvironment {
            mu,
            link,
            noise,
            gap,
        })
    }

    pub fn arm_count(&self) -> usize {
        self.mu.len()
    }

    pub fn utilities(&self) -> &[f64] {
        &self.mu
    }

    pub fn link(&self) -> LinkFunction {
        self.link
    }

    pub fn noise(&self) -> UtilityNoise {
        self.noise
    }

    pub fn gap_profile(&self) -> &GapProfile {
        &self.gap
    }

    /// Mean utility of the best arm.
    pub fn best_utility(&self) -> f64 {
        self.mu[self.gap.best_arm()]
    }

    fn check_arm(&self, arm: usize) -> Result<(), Error> {
        if arm < self.mu.len() {
            Ok(())
        } else {
            Err(Error::ArmOutOfRange {
                index: arm,
                arms: self.mu.len(),
            })
        }
    }

    fn realise(&self, arm: usize, rng: &mut RunRng) -> f64 {
        match self.noise {
            UtilityNoise::Deterministic => self.mu[arm],
            UtilityNoise::Bernoulli => {
                if rng.gen_bool(self.mu[arm]) {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }

    /// Plays one duel. `x` duelling itself is legal and resolves at chance
    /// level for every link.
    pub fn duel(&self, x: usize, y: usize, rng: &mut RunRng) -> Result<DuelRecord, Error> {
        self.check_arm(x)?;
        self.check_arm(y)?;
        let u = self.realise(x, rng);
        let v = self.realise(y, rng);
        let p_left = self.link.eval(u, v)?;
        let choice = ChoiceOutcome::from_left_win(rng.gen_bool(p_left));
        Ok(DuelRecord {
            choice,
            utilities: UtilityPair { left: u, right: v },
        })
    }

    /// Per-step average regret: `mu* - (u + v) / 2`.
    pub fn regret_av_step(&self, utilities: &UtilityPair) -> f64 {
        self.best_utility() - 0.5 * (utilities.left + utilities.right)
    }

    /// Per-step choice regret: `mu*` minus the winning arm's utility.
    pub fn regret_choice_step(&self, choice: ChoiceOutcome, utilities: &UtilityPair) -> f64 {
        let chosen = match choice {
            ChoiceOutcome::Left => utilities.left,
            ChoiceOutcome::Right => utilities.right,
        };
        self.best_utility() - chosen
    }
}
