//! Plain stochastic bandit environment with per-arm reward draws.

use rand::{Rng, RngCore};

use crate::env::utility::UtilityNoise;
use crate::error::Error;
use crate::gap::GapProfile;

/// Reward-feedback bandit over a fixed mean vector.
///
/// Used directly when benchmarking single-bandit policies and as the
/// reward source when a dueling solver is driven through the
/// two-pulls-per-duel adapter.
#[derive(Clone, Debug)]
pub struct MabEnvironment {
    mu: Vec<f64>,
    noise: UtilityNoise,
    gap: GapProfile,
}

impl MabEnvironment {
    pub fn new(mu: Vec<f64>, noise: UtilityNoise) -> Result<Self, Error> {
        let gap = GapProfile::from_utilities(&mu)?;
        Ok(MabEnvironment { mu, noise, gap })
    }

    pub fn arm_count(&self) -> usize {
        self.mu.len()
    }

    pub fn means(&self) -> &[f64] {
        &self.mu
    }

    pub fn best_mean(&self) -> f64 {
        self.mu[self.gap.best_arm()]
    }

    pub fn gap_profile(&self) -> &GapProfile {
        &self.gap
    }

    /// Draws one reward for the arm.
    pub fn pull(&self, arm: usize, rng: &mut dyn RngCore) -> Result<f64, Error> {
        let mean = *self.mu.get(arm).ok_or(Error::ArmOutOfRange {
            index: arm,
            arms: self.mu.len(),
        })?;
        Ok(match self.noise {
            UtilityNoise::Deterministic => mean,
            UtilityNoise::Bernoulli => f64::from(rng.gen_bool(mean)),
        })
    }
}
