//! Utility-based dueling bandits reduced to ordinary stochastic bandits.
//!
//! A dueling bandit solver picks two arms per round and only observes which
//! of them wins a noisy comparison. Everything in this crate turns that
//! comparison bit into reward feedback for one or more singleton bandit
//! machines (SBMs, see [`sbm`]) so that standard bandit machinery carries
//! over:
//!
//! * [`reductions::Doubler`] replays the previous epoch's right-hand arms on
//!   the left while a single SBM drives the right arm, doubling the epoch
//!   length as it goes.
//! * [`reductions::MultiSbm`] keeps one SBM per arm; each round the previous
//!   right arm becomes the left arm and that arm's SBM picks the opponent.
//! * [`reductions::Sparring`] lets two SBMs play against each other with
//!   complementary rewards.
//!
//! The [`env`] module simulates comparison feedback, either from hidden
//! utilities pushed through a link function ([`link`]) or from an explicit
//! preference matrix, and tracks regret. The [`harness`] module wraps the
//! pieces into named scenarios, seeded Monte-Carlo replications and a
//! deterministic CSV emitter.

pub mod env;
pub mod error;
pub mod gap;
pub mod harness;
pub mod link;
pub mod reductions;
pub mod sbm;
pub mod seed;

pub use error::Error;
pub use gap::GapProfile;
pub use link::{ChoiceOutcome, LinkFunction};
pub use seed::{RandomSeed, RunRng};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
