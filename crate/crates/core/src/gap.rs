//! Gap structure of a utility vector.
//!
//! For arm utilities `mu` with best arm `x*`, the gap of arm `x` is
//! `mu(x*) - mu(x)`. The hardness sum `H = sum over suboptimal arms of
//! 1 / gap` shows up in logarithmic regret bounds; it is undefined when a
//! suboptimal arm ties the best one.

use crate::error::Error;
use crate::link::check_unit;

/// Per-arm gaps to the best arm, plus derived summary quantities.
#[derive(Clone, Debug, PartialEq)]
pub struct GapProfile {
    gaps: Vec<f64>,
    best_arm: usize,
    hardness: Option<f64>,
}

impl GapProfile {
    /// Derives the profile from raw arm utilities.
    ///
    /// Utilities must be in `[0, 1]` and nonempty. Ties for the best value
    /// resolve to the lowest index.
    pub fn from_utilities(mu: &[f64]) -> Result<Self, Error> {
        if mu.is_empty() {
            return Err(Error::NoArms);
        }
        for &value in mu {
            check_unit(value)?;
        }
        let mut best_arm = 0;
        for (index, &value) in mu.iter().enumerate() {
            if value > mu[best_arm] {
                best_arm = index;
            }
        }
        let best = mu[best_arm];
        let gaps: Vec<f64> = mu.iter().map(|&value| best - value).collect();
        let mut hardness = Some(0.0);
        for (index, &gap) in gaps.iter().enumerate() {
            if index == best_arm {
                continue;
            }
            if gap == 0.0 {
                hardness = None;
                break;
            }
            hardness = hardness.map(|h| h + 1.0 / gap);
        }
        Ok(GapProfile {
            gaps,
            best_arm,
            hardness,
        })
    }

    pub fn arm_count(&self) -> usize {
        self.gaps.len()
    }

    /// Gap of each arm to the best arm; the best arm's entry is zero.
    pub fn gaps(&self) -> &[f64] {
        &self.gaps
    }

    /// Index of the best arm (lowest index on ties).
    pub fn best_arm(&self) -> usize {
        self.best_arm
    }

    /// Sum of inverse gaps over suboptimal arms, or `None` when a
    /// suboptimal arm ties the best one.
    pub fn hardness(&self) -> Option<f64> {
        self.hardness
    }
}
