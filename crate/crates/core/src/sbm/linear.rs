//! Optimistic least-squares policy over a finite set of feature vectors.
//!
//! The machine keeps a ridge-regularised Gram matrix `A = lambda I + sum of
//! x xT` over played vectors and a reward-weighted sum `b = sum of r x`.
//! Each round it estimates `theta = A^-1 b` and plays the candidate with
//! the largest optimistic value
//!
//! ```text
//! <theta, x> + scale(t) * sqrt(xT A^-1 x),   scale(t) = sqrt(d ln(1 + t)) + 1
//! ```
//!
//! where `t` counts completed cycles. The quadratic form is the confidence
//! ellipsoid width in direction `x`; unexplored directions stay wide and
//! attract play. Ties resolve to the lowest candidate index. `A` stays
//! symmetric positive definite for any `lambda > 0`, and its inverse is
//! maintained incrementally with rank-one (Sherman-Morrison) updates.

use crate::error::Error;
use crate::link::check_unit;
use crate::sbm::Sbm;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `m * v` for a dense row-major `d x d` matrix.
fn mat_vec(m: &[f64], v: &[f64], d: usize) -> Vec<f64> {
    (0..d).map(|i| dot(&m[i * d..(i + 1) * d], v)).collect()
}

/// Linear SBM with an ellipsoidal confidence bonus.
#[derive(Clone, Debug)]
pub struct LinearPolicy {
    dim: usize,
    candidates: Vec<Vec<f64>>,
    lambda: f64,
    gram: Vec<f64>,
    gram_inv: Vec<f64>,
    reward_sum: Vec<f64>,
    rounds: u64,
    pending: Option<usize>,
}

impl LinearPolicy {
    /// Creates a policy over the given candidate vectors.
    ///
    /// Candidates must be nonempty and share one dimension `d >= 1`;
    /// `lambda` is the ridge weight and must be positive.
    pub fn new(candidates: Vec<Vec<f64>>, lambda: f64) -> Result<Self, Error> {
        if candidates.is_empty() {
            return Err(Error::NoArms);
        }
        let dim = candidates[0].len();
        if dim == 0 {
            return Err(Error::InvalidParameter(
                "candidate vectors must have dimension >= 1".into(),
            ));
        }
        if let Some(bad) = candidates.iter().find(|c| c.len() != dim) {
            return Err(Error::InvalidParameter(format!(
                "candidate dimension mismatch: expected {dim}, got {}",
                bad.len()
            )));
        }
        if lambda <= 0.0 || !lambda.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "ridge weight must be a positive real, got {lambda}"
            )));
        }
        let mut policy = LinearPolicy {
            dim,
            candidates,
            lambda,
            gram: Vec::new(),
            gram_inv: Vec::new(),
            reward_sum: Vec::new(),
            rounds: 0,
            pending: None,
        };
        policy.reset();
        Ok(policy)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn candidates(&self) -> &[Vec<f64>] {
        &self.candidates
    }

    /// Row-major `d x d` Gram accumulator `lambda I + sum of x xT`.
    pub fn gram(&self) -> &[f64] {
        &self.gram
    }

    /// Reward-weighted feature sum `b`.
    pub fn reward_sum(&self) -> &[f64] {
        &self.reward_sum
    }

    /// Completed advance/feedback cycles.
    pub fn rounds(&self) -> u64 {
        self.rounds
    }

    /// Exploration multiplier `sqrt(d ln(1 + t)) + 1` at the current round.
    pub fn confidence_scale(&self) -> f64 {
        (self.dim as f64 * (1.0 + self.rounds as f64).ln()).sqrt() + 1.0
    }

    /// Ridge least-squares estimate `A^-1 b`.
    pub fn estimate(&self) -> Vec<f64> {
        mat_vec(&self.gram_inv, &self.reward_sum, self.dim)
    }

    /// Optimistic value of one candidate under the current ellipsoid.
    pub fn optimistic_value(&self, candidate: usize) -> f64 {
        let x = &self.candidates[candidate];
        let theta = self.estimate();
        let spread = dot(x, &mat_vec(&self.gram_inv, x, self.dim)).max(0.0);
        dot(&theta, x) + self.confidence_scale() * spread.sqrt()
    }
}

impl Sbm for LinearPolicy {
    fn arm_count(&self) -> usize {
        self.candidates.len()
    }

    fn reset(&mut self) {
        let d = self.dim;
        self.gram = vec![0.0; d * d];
        self.gram_inv = vec![0.0; d * d];
        for i in 0..d {
            self.gram[i * d + i] = self.lambda;
            self.gram_inv[i * d + i] = 1.0 / self.lambda;
        }
        self.reward_sum = vec![0.0; d];
        self.rounds = 0;
        self.pending = None;
    }

    fn advance(&mut self) -> Result<usize, Error> {
        if self.pending.is_some() {
            return Err(Error::Alternation {
                component: "linear sbm",
                detail: "advance called while a reward is owed",
            });
        }
        let mut best = 0;
        let mut best_value = self.optimistic_value(0);
        for candidate in 1..self.candidates.len() {
            let value = self.optimistic_value(candidate);
            if value > best_value {
                best = candidate;
                best_value = value;
            }
        }
        self.pending = Some(best);
        Ok(best)
    }

    fn feedback(&mut self, reward: f64) -> Result<(), Error> {
        let candidate = self.pending.ok_or(Error::Alternation {
            component: "linear sbm",
            detail: "feedback without a pending candidate",
        })?;
        check_unit(reward).map_err(|_| Error::RewardOutOfRange(reward))?;
        let d = self.dim;
        let x = self.candidates[candidate].clone();
        // Rank-one update of the inverse before touching the Gram matrix:
        // (A + x xT)^-1 = A^-1 - (A^-1 x)(A^-1 x)T / (1 + xT A^-1 x).
        let ax = mat_vec(&self.gram_inv, &x, d);
        let denom = 1.0 + dot(&x, &ax);
        for i in 0..d {
            for j in 0..d {
                self.gram_inv[i * d + j] -= ax[i] * ax[j] / denom;
            }
        }
        for i in 0..d {
            for j in 0..d {
                self.gram[i * d + j] += x[i] * x[j];
            }
            self.reward_sum[i] += reward * x[i];
        }
        self.rounds += 1;
        self.pending = None;
        Ok(())
    }
}
