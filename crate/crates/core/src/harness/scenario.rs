//! Named experiment configurations and the built-in registry.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::env::data;
use crate::env::UtilityNoise;
use crate::error::Error;
use crate::link::LinkFunction;
use crate::seed::RandomSeed;

/// Dueling solvers the runner knows how to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Doubler,
    MultiSbm,
    Sparring,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Self::Doubler, Self::MultiSbm, Self::Sparring];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Doubler => "doubler",
            Algorithm::MultiSbm => "multisbm",
            Algorithm::Sparring => "sparring",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Algorithm::ALL
            .into_iter()
            .find(|alg| alg.name() == s)
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

/// Which simulated opponent the duels are played against.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EnvironmentSpec {
    /// Arms carry utilities; a link maps realised utility pairs to win
    /// probabilities.
    Utility {
        mu: Vec<f64>,
        link: LinkFunction,
        noise: UtilityNoise,
    },
    /// Win margins are given directly as a matrix.
    PreferenceMatrix {
        epsilon: Vec<Vec<f64>>,
        implied_order: Vec<usize>,
    },
}

impl EnvironmentSpec {
    pub fn arm_count(&self) -> usize {
        match self {
            EnvironmentSpec::Utility { mu, .. } => mu.len(),
            EnvironmentSpec::PreferenceMatrix { epsilon, .. } => epsilon.len(),
        }
    }
}

/// A fully pinned experiment cell: environment, contenders, horizon,
/// replication count, seed, and where regret is sampled.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScenarioSpec {
    pub name: String,
    pub environment: EnvironmentSpec,
    pub algorithms: Vec<Algorithm>,
    pub horizon: u64,
    pub runs: u32,
    pub base_seed: RandomSeed,
    /// Times (1-based duel counts) at which cumulative regret is recorded.
    pub checkpoints: Vec<u64>,
    /// Shuffle arm labels per run so solvers cannot benefit from the
    /// registry ordering. Matrix environments keep their labels.
    pub permute_arms: bool,
}

impl ScenarioSpec {
    pub fn arm_count(&self) -> usize {
        self.environment.arm_count()
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.horizon == 0 {
            return Err(Error::InvalidParameter("horizon must be positive".into()));
        }
        if self.runs == 0 {
            return Err(Error::InvalidParameter("runs must be positive".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::InvalidParameter(
                "at least one algorithm is required".into(),
            ));
        }
        if self.checkpoints.is_empty() {
            return Err(Error::BadCheckpoints);
        }
        let mut previous = 0u64;
        for &t in &self.checkpoints {
            if t <= previous || t > self.horizon {
                return Err(Error::BadCheckpoints);
            }
            previous = t;
        }
        Ok(())
    }
}

/// Powers of two up to the horizon, closed with the horizon itself.
pub fn default_checkpoints(horizon: u64) -> Vec<u64> {
    let mut points: Vec<u64> = (0..64)
        .map(|i| 1u64 << i)
        .take_while(|&p| p <= horizon)
        .collect();
    if points.last() != Some(&horizon) {
        points.push(horizon);
    }
    points
}

const DEFAULT_HORIZON: u64 = 32_768;
const DEFAULT_RUNS: u32 = 400;
const DEFAULT_SEED: u64 = 424_242;

/// The built-in experiment grid: five utility rows crossed with the three
/// links, plus the matrix environment.
pub fn registry() -> Vec<ScenarioSpec> {
    let mut scenarios = Vec::new();
    for (row_name, mu) in data::UTILITY_ROWS {
        for link in LinkFunction::ALL {
            scenarios.push(ScenarioSpec {
                name: format!("{row_name}-{link}"),
                environment: EnvironmentSpec::Utility {
                    mu: mu.to_vec(),
                    link,
                    noise: UtilityNoise::Deterministic,
                },
                algorithms: Algorithm::ALL.to_vec(),
                horizon: DEFAULT_HORIZON,
                runs: DEFAULT_RUNS,
                base_seed: RandomSeed(DEFAULT_SEED),
                checkpoints: default_checkpoints(DEFAULT_HORIZON),
                permute_arms: true,
            });
        }
    }
    scenarios.push(ScenarioSpec {
        name: "yj".to_string(),
        environment: EnvironmentSpec::PreferenceMatrix {
            epsilon: data::YJ_EPSILON.iter().map(|row| row.to_vec()).collect(),
            implied_order: data::YJ_ORDER.to_vec(),
        },
        algorithms: Algorithm::ALL.to_vec(),
        horizon: DEFAULT_HORIZON,
        runs: DEFAULT_RUNS,
        base_seed: RandomSeed(DEFAULT_SEED),
        checkpoints: default_checkpoints(DEFAULT_HORIZON),
        permute_arms: false,
    });
    scenarios
}

/// Looks a scenario up by name.
pub fn find_scenario(name: &str) -> Result<ScenarioSpec, Error> {
    registry()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownScenario(name.to_string()))
}
