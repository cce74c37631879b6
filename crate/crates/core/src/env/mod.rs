//! Simulated duel environments and regret accounting.
//!
//! Two feedback models are provided. [`UtilityEnvironment`] hides a utility
//! per arm and draws comparison outcomes through a link function; it is the
//! ground truth for average- and choice-regret. [`PreferenceMatrixEnvironment`]
//! skips utilities entirely and draws outcomes from an explicit pairwise
//! win-probability table, with its own single regret notion measured
//! against the table's best arm. [`RegretLedger`] accumulates either kind
//! of regret along a trajectory and snapshots it at checkpoint times.

pub mod data;
mod ledger;
mod mab;
mod preference;
mod utility;

pub use ledger::{LedgerCheckpoint, RegretLedger};
pub use mab::MabEnvironment;
pub use preference::{
    yj_environment, MatrixPropertyReport, PreferenceMatrixEnvironment, TriangleReport,
};
pub use utility::{DuelRecord, UtilityEnvironment, UtilityNoise, UtilityPair};
