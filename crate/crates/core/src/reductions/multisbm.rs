//! One-SBM-per-arm reduction.
//!
//! The solver keeps `K` inner machines, one owned by each arm. Every round
//! the previous right arm becomes the left arm `x`, and `x`'s machine picks
//! the right arm `y`. After the duel, `x`'s machine is fed the raw
//! comparison bit (1 when `y` won). Against utilities `mu` and the linear
//! link, the machine owned by `x` therefore sees expected reward
//! `(mu(y) - mu(x) + 1) / 2` for arm `y`: a shifted copy of the utility
//! vector, so each machine independently learns to answer its owner.
//! The very first left arm is arm 0.

use rand::RngCore;

use crate::error::Error;
use crate::link::ChoiceOutcome;
use crate::reductions::DuelingSolver;
use crate::sbm::Sbm;

/// Dueling solver holding one inner SBM per arm.
#[derive(Clone, Debug)]
pub struct MultiSbm<S> {
    sbms: Vec<S>,
    previous_right: usize,
    pending: Option<(usize, usize)>,
}

impl<S: Sbm> MultiSbm<S> {
    /// Builds the solver from one machine per arm.
    ///
    /// Every machine must choose among exactly `sbms.len()` arms.
    pub fn new(sbms: Vec<S>) -> Result<Self, Error> {
        if sbms.is_empty() {
            return Err(Error::NoArms);
        }
        let arms = sbms.len();
        if let Some(bad) = sbms.iter().position(|s| s.arm_count() != arms) {
            return Err(Error::InvalidParameter(format!(
                "inner SBM {bad} has {} arms, expected {arms}",
                sbms[bad].arm_count()
            )));
        }
        Ok(MultiSbm {
            sbms,
            previous_right: 0,
            pending: None,
        })
    }

    /// The arm that will be played on the left in the next duel.
    pub fn previous_right(&self) -> usize {
        self.previous_right
    }

    /// Read access to the inner machines, indexed by owning arm.
    pub fn sbms(&self) -> &[S] {
        &self.sbms
    }
}

impl<S: Sbm> DuelingSolver for MultiSbm<S> {
    fn arm_count(&self) -> usize {
        self.sbms.len()
    }

    fn propose(&mut self, _rng: &mut dyn RngCore) -> Result<(usize, usize), Error> {
        if self.pending.is_some() {
            return Err(Error::Alternation {
                component: "multisbm",
                detail: "propose called while an outcome is owed",
            });
        }
        let left = self.previous_right;
        let right = self.sbms[left].advance()?;
        self.pending = Some((left, right));
        Ok((left, right))
    }

    fn absorb(&mut self, choice: ChoiceOutcome) -> Result<(), Error> {
        let (left, right) = self.pending.take().ok_or(Error::Alternation {
            component: "multisbm",
            detail: "absorb without a proposed pair",
        })?;
        self.sbms[left].feedback(f64::from(choice.bit()))?;
        self.previous_right = right;
        Ok(())
    }
}
