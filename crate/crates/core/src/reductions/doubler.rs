//! Epoch-doubling reduction around a single SBM.
//!
//! Play proceeds in epochs of length 2, 4, 8, ... (boundaries fall after 2,
//! 6, 14, 30, ... duels). Within an epoch the right arm comes from the
//! inner SBM, which is reset at every epoch start, and the inner machine is
//! fed the raw comparison bit (1 when its arm, the right one, won). The
//! left arm is drawn uniformly from a multiset holding the previous
//! epoch's right arms, so the left side lags the learner by one epoch;
//! the very first multiset is the singleton {arm 0}.
//!
//! [`LinearDoubler`] is the variant for linear utilities over feature
//! vectors: instead of sampling from the multiset it plays the multiset's
//! average vector, which has the same expected utility by linearity.

use rand::{Rng, RngCore};

use crate::error::Error;
use crate::link::ChoiceOutcome;
use crate::reductions::DuelingSolver;
use crate::sbm::Sbm;

/// Shared epoch bookkeeping: epoch `i` lasts `2^i` duels, starting at 1.
#[derive(Clone, Debug)]
struct EpochClock {
    epoch: u32,
    steps_left: u64,
}

impl EpochClock {
    fn start() -> Self {
        EpochClock {
            epoch: 1,
            steps_left: 2,
        }
    }

    /// Counts down one duel; returns true when an epoch just ended.
    fn tick(&mut self) -> bool {
        self.steps_left -= 1;
        if self.steps_left == 0 {
            self.epoch += 1;
            self.steps_left = 1u64 << self.epoch;
            true
        } else {
            false
        }
    }
}

/// Doubling reduction over plain arm indices.
#[derive(Clone, Debug)]
pub struct Doubler<S> {
    inner: S,
    clock: EpochClock,
    left_arms: Vec<usize>,
    next_left: Vec<usize>,
    pending: Option<usize>,
}

impl<S: Sbm> Doubler<S> {
    /// Wraps an inner SBM; the initial left multiset is `{arm 0}`.
    pub fn new(inner: S) -> Result<Self, Error> {
        if inner.arm_count() == 0 {
            return Err(Error::NoArms);
        }
        Ok(Doubler {
            inner,
            clock: EpochClock::start(),
            left_arms: vec![0],
            next_left: Vec::new(),
            pending: None,
        })
    }

    /// Current epoch, starting at 1.
    pub fn epoch(&self) -> u32 {
        self.clock.epoch
    }

    /// The multiset the left arm is currently drawn from.
    pub fn left_multiset(&self) -> &[usize] {
        &self.left_arms
    }

    pub fn inner(&self) -> &S {
        &self.inner
    }
}

impl<S: Sbm> DuelingSolver for Doubler<S> {
    fn arm_count(&self) -> usize {
        self.inner.arm_count()
    }

    fn propose(&mut self, rng: &mut dyn RngCore) -> Result<(usize, usize), Error> {
        if self.pending.is_some() {
            return Err(Error::Alternation {
                component: "doubler",
                detail: "propose called while an outcome is owed",
            });
        }
        let slot = rng.gen_range(0..self.left_arms.len());
        let left = self.left_arms[slot];
        let right = self.inner.advance()?;
        self.pending = Some(right);
        Ok((left, right))
    }

    fn absorb(&mut self, choice: ChoiceOutcome) -> Result<(), Error> {
        let right = self.pending.take().ok_or(Error::Alternation {
            component: "doubler",
            detail: "absorb without a proposed pair",
        })?;
        self.inner.feedback(f64::from(choice.bit()))?;
        self.next_left.push(right);
        if self.clock.tick() {
            self.inner.reset();
            self.left_arms = std::mem::take(&mut self.next_left);
        }
        Ok(())
    }
}

/// Doubling reduction that plays the average feature vector on the left.
///
/// Candidates are `d`-dimensional vectors indexed like SBM arms. At an
/// epoch boundary the left vector becomes the arithmetic mean of the
/// epoch's right-hand vectors. Only meaningful when the environment's
/// utility is linear in the vector, which makes the average vector's
/// utility equal to the multiset's mean utility.
#[derive(Clone, Debug)]
pub struct LinearDoubler<S> {
    inner: S,
    candidates: Vec<Vec<f64>>,
    clock: EpochClock,
    average: Vec<f64>,
    next_sum: Vec<f64>,
    next_count: u64,
    pending: Option<usize>,
}

impl<S: Sbm> LinearDoubler<S> {
    /// Wraps an inner SBM whose arms index into `candidates`.
    ///
    /// The initial left vector is candidate 0, mirroring the singleton
    /// initial multiset of the index-armed doubler.
    pub fn new(inner: S, candidates: Vec<Vec<f64>>) -> Result<Self, Error> {
        if candidates.is_empty() {
            return Err(Error::NoArms);
        }
        if inner.arm_count() != candidates.len() {
            return Err(Error::InvalidParameter(format!(
                "inner SBM has {} arms but {} candidate vectors were given",
                inner.arm_count(),
                candidates.len()
            )));
        }
        let dim = candidates[0].len();
        if dim == 0 || candidates.iter().any(|c| c.len() != dim) {
            return Err(Error::InvalidParameter(
                "candidate vectors must share one dimension >= 1".into(),
            ));
        }
        let average = candidates[0].clone();
        Ok(LinearDoubler {
            inner,
            candidates,
            clock: EpochClock::start(),
            average,
            next_sum: vec![0.0; dim],
            next_count: 0,
            pending: None,
        })
    }

    pub fn epoch(&self) -> u32 {
        self.clock.epoch
    }

    /// The vector currently played on the left.
    pub fn average_vector(&self) -> &[f64] {
        &self.average
    }

    pub fn candidates(&self) -> &[Vec<f64>] {
        &self.candidates
    }

    pub fn inner(&self) -> &S {
        &self.inner
    }

    /// Proposes the next duel as (left vector, right candidate index).
    pub fn propose(&mut self) -> Result<(Vec<f64>, usize), Error> {
        if self.pending.is_some() {
            return Err(Error::Alternation {
                component: "linear doubler",
                detail: "propose called while an outcome is owed",
            });
        }
        let right = self.inner.advance()?;
        self.pending = Some(right);
        Ok((self.average.clone(), right))
    }

    /// Consumes the comparison outcome of the proposed duel.
    pub fn absorb(&mut self, choice: ChoiceOutcome) -> Result<(), Error> {
        let right = self.pending.take().ok_or(Error::Alternation {
            component: "linear doubler",
            detail: "absorb without a proposed pair",
        })?;
        self.inner.feedback(f64::from(choice.bit()))?;
        for (sum, value) in self.next_sum.iter_mut().zip(&self.candidates[right]) {
            *sum += value;
        }
        self.next_count += 1;
        if self.clock.tick() {
            self.inner.reset();
            let count = self.next_count as f64;
            self.average = self.next_sum.iter().map(|s| s / count).collect();
            self.next_sum.iter_mut().for_each(|s| *s = 0.0);
            self.next_count = 0;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sbm::UcbPolicy;
    use crate::seed::RandomSeed;

    fn drive_n<S: Sbm>(doubler: &mut Doubler<S>, duels: u64, rng: &mut crate::seed::RunRng) {
        for _ in 0..duels {
            doubler.propose(rng).unwrap();
            doubler.absorb(ChoiceOutcome::Right).unwrap();
        }
    }

    #[test]
    fn epoch_boundaries_fall_after_2_6_14_30_duels() {
        let mut doubler = Doubler::new(UcbPolicy::new(3, 3.0).unwrap()).unwrap();
        let mut rng = RandomSeed(7).rng();
        assert_eq!(doubler.epoch(), 1);
        let mut duels = 0u64;
        for (boundary, epoch_after) in [(2u64, 2u32), (6, 3), (14, 4), (30, 5)] {
            while duels < boundary {
                drive_n(&mut doubler, 1, &mut rng);
                duels += 1;
            }
            assert_eq!(doubler.epoch(), epoch_after, "after {boundary} duels");
        }
    }

    #[test]
    fn left_multiset_rotates_to_the_previous_epochs_right_arms() {
        let mut doubler = Doubler::new(UcbPolicy::new(4, 3.0).unwrap()).unwrap();
        let mut rng = RandomSeed(11).rng();
        assert_eq!(doubler.left_multiset(), &[0]);
        let mut rights_by_epoch: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..30 {
            let epoch_before = doubler.epoch() as usize;
            let (_, right) = doubler.propose(&mut rng).unwrap();
            rights_by_epoch[epoch_before - 1].push(right);
            doubler.absorb(ChoiceOutcome::Left).unwrap();
            if doubler.epoch() as usize > epoch_before {
                let mut expected = rights_by_epoch[epoch_before - 1].clone();
                expected.sort_unstable();
                let mut actual = doubler.left_multiset().to_vec();
                actual.sort_unstable();
                assert_eq!(actual, expected, "epoch {epoch_before} rotation");
                rights_by_epoch.push(Vec::new());
            }
        }
    }

    #[test]
    fn inner_sbm_resets_at_each_epoch_boundary() {
        let mut doubler = Doubler::new(UcbPolicy::new(3, 3.0).unwrap()).unwrap();
        let mut rng = RandomSeed(3).rng();
        drive_n(&mut doubler, 2, &mut rng);
        // Fresh epoch: the inner machine must start over with arm 0.
        assert_eq!(doubler.inner().completed_cycles(), 0);
        let (_, right) = doubler.propose(&mut rng).unwrap();
        assert_eq!(right, 0);
        doubler.absorb(ChoiceOutcome::Right).unwrap();
        assert_eq!(doubler.inner().completed_cycles(), 1);
    }

    #[test]
    fn left_arm_sampling_is_uniform_over_the_multiset() {
        // A multiset {0, 0, 1} is not reachable through public play (its
        // size is always a power of two), so install it directly and hold
        // the epoch open long enough to sample.
        let mut doubler = Doubler::new(UcbPolicy::new(2, 3.0).unwrap()).unwrap();
        doubler.left_arms = vec![0, 0, 1];
        doubler.clock.steps_left = 30_000;
        let mut rng = RandomSeed(123).rng();
        let draws = 10_000u32;
        let mut zeros = 0u32;
        for _ in 0..draws {
            let (left, _) = doubler.propose(&mut rng).unwrap();
            if left == 0 {
                zeros += 1;
            }
            doubler.absorb(ChoiceOutcome::Right).unwrap();
        }
        let freq = f64::from(zeros) / f64::from(draws);
        let sigma = (2.0 / 9.0 / f64::from(draws)).sqrt();
        assert!(
            (freq - 2.0 / 3.0).abs() <= 3.0 * sigma,
            "frequency {freq} vs 2/3 (3 sigma = {})",
            3.0 * sigma
        );
    }

    #[test]
    fn propose_and_absorb_must_alternate() {
        let mut doubler = Doubler::new(UcbPolicy::new(2, 3.0).unwrap()).unwrap();
        let mut rng = RandomSeed(1).rng();
        assert!(doubler.absorb(ChoiceOutcome::Left).is_err());
        doubler.propose(&mut rng).unwrap();
        assert!(doubler.propose(&mut rng).is_err());
        doubler.absorb(ChoiceOutcome::Left).unwrap();
    }

    #[test]
    fn linear_variant_plays_the_previous_epochs_average_vector() {
        let candidates = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]];
        let inner = UcbPolicy::new(3, 3.0).unwrap();
        let mut doubler = LinearDoubler::new(inner, candidates).unwrap();
        assert_eq!(doubler.average_vector(), &[0.0, 0.0]);
        let mut rights = Vec::new();
        // Epoch 1 has exactly two duels.
        for _ in 0..2 {
            let (left, right) = doubler.propose().unwrap();
            assert_eq!(left, vec![0.0, 0.0]);
            rights.push(right);
            doubler.absorb(ChoiceOutcome::Right).unwrap();
        }
        let expected: Vec<f64> = (0..2)
            .map(|coord| {
                rights
                    .iter()
                    .map(|&r| doubler.candidates()[r][coord])
                    .sum::<f64>()
                    / 2.0
            })
            .collect();
        assert_eq!(doubler.average_vector(), &expected[..]);
        assert_eq!(doubler.epoch(), 2);
    }

    #[test]
    fn linear_variant_validates_shapes() {
        let inner = UcbPolicy::new(2, 3.0).unwrap();
        assert!(LinearDoubler::new(inner.clone(), vec![]).is_err());
        assert!(LinearDoubler::new(inner.clone(), vec![vec![1.0]]).is_err());
        assert!(
            LinearDoubler::new(inner, vec![vec![1.0], vec![1.0, 2.0]]).is_err(),
            "ragged candidates"
        );
    }
}
