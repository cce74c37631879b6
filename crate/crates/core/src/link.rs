//! Comparison links and duel outcomes.
//!
//! A link function maps a pair of hidden utilities `(u, v)` in `[0, 1]` to
//! the probability that the left arm wins the comparison:
//!
//! ```text
//! linear   (1 + u - v) / 2
//! natural  u / (u + v)          (1/2 at the 0/0 corner)
//! logit    1 / (1 + exp(v - u))
//! ```
//!
//! Every link is complementary, `eval(u, v) + eval(v, u) = 1`, and favours
//! the better arm: `eval(u, v) > 1/2` whenever `u > v`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Validates that a utility or reward value sits in the unit interval.
pub(crate) fn check_unit(value: f64) -> Result<(), Error> {
    if value.is_finite() && (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::UtilityOutOfRange(value))
    }
}

/// Win-probability model for a duel between two utilities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LinkFunction {
    Linear,
    Natural,
    Logit,
}

impl LinkFunction {
    /// All links, in registry order.
    pub const ALL: [LinkFunction; 3] = [Self::Linear, Self::Natural, Self::Logit];

    /// Probability that the left arm wins a duel with utilities `(u, v)`.
    pub fn eval(self, u: f64, v: f64) -> Result<f64, Error> {
        check_unit(u)?;
        check_unit(v)?;
        Ok(match self {
            Self::Linear => (1.0 + u - v) / 2.0,
            Self::Natural => {
                if u == 0.0 && v == 0.0 {
                    0.5
                } else {
                    u / (u + v)
                }
            }
            Self::Logit => 1.0 / (1.0 + (v - u).exp()),
        })
    }

    /// Stable lowercase name, used in scenario ids and CSV rows.
    pub fn name(self) -> &'static str {
        match self {
            Self::Linear => "linear",
            Self::Natural => "natural",
            Self::Logit => "logit",
        }
    }
}

impl fmt::Display for LinkFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LinkFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "linear" => Ok(Self::Linear),
            "natural" => Ok(Self::Natural),
            "logit" => Ok(Self::Logit),
            other => Err(Error::InvalidParameter(format!("unknown link '{other}'"))),
        }
    }
}

/// Outcome of a single duel. `Left` is the bit value 0, `Right` is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChoiceOutcome {
    Left,
    Right,
}

impl ChoiceOutcome {
    /// The raw comparison bit: 0 when the left arm won, 1 otherwise.
    pub fn bit(self) -> u8 {
        match self {
            Self::Left => 0,
            Self::Right => 1,
        }
    }

    /// Builds an outcome from "did the left arm win".
    pub fn from_left_win(left_won: bool) -> Self {
        if left_won {
            Self::Left
        } else {
            Self::Right
        }
    }

    pub fn is_left(self) -> bool {
        matches!(self, Self::Left)
    }

    pub fn is_right(self) -> bool {
        matches!(self, Self::Right)
    }
}
