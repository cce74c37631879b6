//! Upper-confidence-bound policy over finitely many arms.
//!
//! At global time `t` (which starts at 1 and grows by one per completed
//! advance/feedback cycle) an arm with `n` pulls and running mean `m` has
//! index
//!
//! ```text
//! m + sqrt((alpha + 2) * ln(t) / (2 * n))
//! ```
//!
//! Unplayed arms carry an infinite index, so each arm is tried once before
//! any index comparison matters. Ties always resolve to the lowest index,
//! making the policy deterministic for a fixed reward history. The `alpha`
//! exponent controls how aggressively the tail of the pull-count
//! distribution is suppressed; any `alpha > 0` is accepted.

use crate::error::Error;
use crate::link::check_unit;
use crate::sbm::Sbm;

/// The UCB index of a single arm.
///
/// `pulls == 0` yields positive infinity, the "unplayed" sentinel.
pub fn ucb_index(mean: f64, pulls: u64, time: u64, alpha: f64) -> f64 {
    if pulls == 0 {
        return f64::INFINITY;
    }
    let bonus = ((alpha + 2.0) * (time as f64).ln() / (2.0 * pulls as f64)).sqrt();
    mean + bonus
}

/// Classic index policy with per-arm running means.
#[derive(Clone, Debug)]
pub struct UcbPolicy {
    alpha: f64,
    means: Vec<f64>,
    pulls: Vec<u64>,
    time: u64,
    pending: Option<usize>,
}

impl UcbPolicy {
    /// Creates a fresh policy over `arm_count` arms with exponent `alpha`.
    pub fn new(arm_count: usize, alpha: f64) -> Result<Self, Error> {
        if arm_count == 0 {
            return Err(Error::NoArms);
        }
        if alpha <= 0.0 || !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "ucb alpha must be a positive real, got {alpha}"
            )));
        }
        Ok(UcbPolicy {
            alpha,
            means: vec![f64::INFINITY; arm_count],
            pulls: vec![0; arm_count],
            time: 1,
            pending: None,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Global time; equals completed cycles plus one.
    pub fn time(&self) -> u64 {
        self.time
    }

    /// Number of completed advance/feedback cycles.
    pub fn completed_cycles(&self) -> u64 {
        self.time - 1
    }

    /// Pull counts per arm.
    pub fn pulls(&self) -> &[u64] {
        &self.pulls
    }

    /// Running reward mean per arm; unplayed arms report infinity.
    pub fn means(&self) -> &[f64] {
        &self.means
    }

    /// Current index of one arm, as used by [`Sbm::advance`].
    pub fn index(&self, arm: usize) -> f64 {
        ucb_index(self.means[arm], self.pulls[arm], self.time, self.alpha)
    }
}

impl Sbm for UcbPolicy {
    fn arm_count(&self) -> usize {
        self.pulls.len()
    }

    fn reset(&mut self) {
        for mean in &mut self.means {
            *mean = f64::INFINITY;
        }
        for pulls in &mut self.pulls {
            *pulls = 0;
        }
        self.time = 1;
        self.pending = None;
    }

    fn advance(&mut self) -> Result<usize, Error> {
        if self.pending.is_some() {
            return Err(Error::Alternation {
                component: "ucb",
                detail: "advance called while a reward is owed",
            });
        }
        let mut best = 0;
        let mut best_index = self.index(0);
        for arm in 1..self.arm_count() {
            let index = self.index(arm);
            if index > best_index {
                best = arm;
                best_index = index;
            }
        }
        self.pending = Some(best);
        Ok(best)
    }

    fn feedback(&mut self, reward: f64) -> Result<(), Error> {
        let arm = self.pending.ok_or(Error::Alternation {
            component: "ucb",
            detail: "feedback without a pending arm",
        })?;
        check_unit(reward).map_err(|_| Error::RewardOutOfRange(reward))?;
        if self.pulls[arm] == 0 {
            self.means[arm] = reward;
        } else {
            let n = self.pulls[arm] as f64;
            self.means[arm] += (reward - self.means[arm]) / (n + 1.0);
        }
        self.pulls[arm] += 1;
        self.time += 1;
        self.pending = None;
        Ok(())
    }
}
