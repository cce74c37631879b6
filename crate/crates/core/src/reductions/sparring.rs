//! Two SBMs playing against each other.
//!
//! The left machine picks the left arm, the right machine picks the right
//! arm, and each receives the indicator that its own side won: the left
//! machine sees reward 1 exactly when the comparison bit is 0, the right
//! machine sees the complement. Neither machine faces a stationary
//! opponent, so this reduction carries no regret guarantee, but it is the
//! strongest of the three in simulation.

use rand::RngCore;

use crate::error::Error;
use crate::link::ChoiceOutcome;
use crate::reductions::DuelingSolver;
use crate::sbm::Sbm;

/// Self-play reduction with complementary indicator rewards.
#[derive(Clone, Debug)]
pub struct Sparring<S> {
    left: S,
    right: S,
    pending: bool,
}

impl<S: Sbm> Sparring<S> {
    /// Pairs two machines over the same arm set.
    pub fn new(left: S, right: S) -> Result<Self, Error> {
        if left.arm_count() == 0 {
            return Err(Error::NoArms);
        }
        if left.arm_count() != right.arm_count() {
            return Err(Error::InvalidParameter(format!(
                "sparring sides disagree on arms: {} vs {}",
                left.arm_count(),
                right.arm_count()
            )));
        }
        Ok(Sparring {
            left,
            right,
            pending: false,
        })
    }

    pub fn left(&self) -> &S {
        &self.left
    }

    pub fn right(&self) -> &S {
        &self.right
    }
}

impl<S: Sbm> DuelingSolver for Sparring<S> {
    fn arm_count(&self) -> usize {
        self.left.arm_count()
    }

    fn propose(&mut self, _rng: &mut dyn RngCore) -> Result<(usize, usize), Error> {
        if self.pending {
            return Err(Error::Alternation {
                component: "sparring",
                detail: "propose called while an outcome is owed",
            });
        }
        let left = self.left.advance()?;
        let right = self.right.advance()?;
        self.pending = true;
        Ok((left, right))
    }

    fn absorb(&mut self, choice: ChoiceOutcome) -> Result<(), Error> {
        if !self.pending {
            return Err(Error::Alternation {
                component: "sparring",
                detail: "absorb without a proposed pair",
            });
        }
        let bit = f64::from(choice.bit());
        self.left.feedback(1.0 - bit)?;
        self.right.feedback(bit)?;
        self.pending = false;
        Ok(())
    }
}
