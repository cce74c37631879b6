//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building or driving a bandit.
#[derive(Debug, Error)]
pub enum Error {
    /// A utility value left the unit interval.
    #[error("utility {0} is outside [0, 1]")]
    UtilityOutOfRange(f64),

    /// A reward handed to an SBM left the unit interval.
    #[error("reward {0} is outside [0, 1]")]
    RewardOutOfRange(f64),

    /// An arm list was empty where at least one arm is required.
    #[error("arm list is empty")]
    NoArms,

    /// An arm index referred past the end of the arm list.
    #[error("arm {index} is out of range for {arms} arms")]
    ArmOutOfRange { index: usize, arms: usize },

    /// The advance/feedback (or propose/absorb) alternation was broken.
    #[error("{component}: {detail}")]
    Alternation {
        component: &'static str,
        detail: &'static str,
    },

    /// A constructor argument was rejected.
    #[error("{0}")]
    InvalidParameter(String),

    /// A preference matrix failed the antisymmetry check.
    #[error("preference entries ({row}, {col}) and ({col}, {row}) are not antisymmetric")]
    NotAntisymmetric { row: usize, col: usize },

    /// A preference entry left [-1/2, 1/2].
    #[error("preference entry ({row}, {col}) = {value} is outside [-1/2, 1/2]")]
    PreferenceOutOfRange { row: usize, col: usize, value: f64 },

    /// An implied order was not a permutation of the arm indices.
    #[error("implied order is not a permutation of the arm indices")]
    InvalidOrder,

    /// A scenario name was not found in the registry.
    #[error("unknown scenario '{0}'")]
    UnknownScenario(String),

    /// An algorithm name did not parse.
    #[error("unknown algorithm '{0}' (expected doubler, multisbm or sparring)")]
    UnknownAlgorithm(String),

    /// A checkpoint schedule was unusable for the requested horizon.
    #[error("checkpoint schedule must be nonempty, strictly increasing and end at or before the horizon")]
    BadCheckpoints,

    /// A pull horizon that must be even was odd.
    #[error("pull horizon must be even, got {0}")]
    OddPullHorizon(u64),
}
