//! Cross-module behaviour checks that need the public API end to end.

use std::time::Instant;

use duelband::env::UtilityNoise;
use duelband::harness::{
    default_checkpoints, find_scenario, run_cell, Algorithm, EnvironmentSpec, ScenarioSpec,
};
use duelband::sbm::{LinearPolicy, Sbm};
use duelband::{LinkFunction, RandomSeed};

/// The ellipsoid policy must lock onto the best vertex: on a 2-d problem
/// with a 0.3-gap vertex set and direct utility rewards, the best vertex
/// owns more than 90% of the last quarter of a 10^4-round run.
#[test]
fn linear_policy_concentrates_on_the_best_vertex() {
    let candidates = vec![
        vec![0.0, 0.0],
        vec![0.0, 1.0],
        vec![1.0, 0.0],
        vec![1.0, 1.0],
    ];
    let theta = [0.6, 0.3];
    let utility = |x: &[f64]| -> f64 { x.iter().zip(theta.iter()).map(|(a, b)| a * b).sum() };
    let best: usize = 3;

    let mut policy = LinearPolicy::new(candidates.clone(), 1.0).unwrap();
    let rounds = 10_000u32;
    let mut best_plays_late = 0u32;
    for round in 1..=rounds {
        let arm = policy.advance().unwrap();
        policy.feedback(utility(&candidates[arm])).unwrap();
        if round > 3 * rounds / 4 && arm == best {
            best_plays_late += 1;
        }
    }
    let share = f64::from(best_plays_late) / f64::from(rounds / 4);
    assert!(
        share > 0.9,
        "best-vertex share over the last quarter: {share}"
    );
}

/// When the environment has a single arm every duel is (best, best), so
/// both regret notions stay at exactly zero through every checkpoint.
#[test]
fn one_arm_scenarios_accrue_zero_regret() {
    let environments = [
        EnvironmentSpec::Utility {
            mu: vec![0.7],
            link: LinkFunction::Linear,
            noise: UtilityNoise::Deterministic,
        },
        EnvironmentSpec::PreferenceMatrix {
            epsilon: vec![vec![0.0]],
            implied_order: vec![0],
        },
    ];
    for environment in environments {
        let spec = ScenarioSpec {
            name: "solo".to_string(),
            environment,
            algorithms: Algorithm::ALL.to_vec(),
            horizon: 64,
            runs: 3,
            base_seed: RandomSeed(1),
            checkpoints: default_checkpoints(64),
            permute_arms: true,
        };
        for alg in Algorithm::ALL {
            let cell = run_cell(&spec, alg).unwrap();
            for point in &cell.points {
                assert_eq!(point.mean_regret, 0.0, "{alg} at t={}", point.time);
                assert_eq!(point.std_regret, 0.0, "{alg} at t={}", point.time);
            }
        }
    }
}

/// In deterministic utility mode every per-step regret increment is
/// nonnegative, so the mean curve never decreases between checkpoints.
#[test]
fn mean_regret_is_monotone_across_checkpoints() {
    let mut spec = find_scenario("arith-logit").unwrap();
    spec.runs = 5;
    spec.horizon = 4096;
    spec.checkpoints = default_checkpoints(4096);
    for alg in Algorithm::ALL {
        let cell = run_cell(&spec, alg).unwrap();
        for pair in cell.points.windows(2) {
            assert!(
                pair[1].mean_regret >= pair[0].mean_regret,
                "{alg}: regret dipped between t={} and t={}",
                pair[0].time,
                pair[1].time
            );
        }
    }
}

/// A one-run four-duel cell is fully pinned by its seed.
#[test]
fn tiny_cell_replays_identically() {
    let mut spec = find_scenario("2good-linear").unwrap();
    spec.runs = 1;
    spec.horizon = 4;
    spec.checkpoints = vec![1, 2, 4];
    let first = run_cell(&spec, Algorithm::MultiSbm).unwrap();
    let second = run_cell(&spec, Algorithm::MultiSbm).unwrap();
    assert_eq!(first.points, second.points);
}

/// Performance budget: one full-horizon trajectory per algorithm should be
/// near-instant; the 5-second ceiling leaves a wide margin over the
/// observed milliseconds so only order-of-magnitude regressions trip it.
#[test]
fn full_horizon_trajectory_stays_within_time_budget() {
    let spec = find_scenario("1good-natural").unwrap();
    for alg in Algorithm::ALL {
        let started = Instant::now();
        duelband::harness::run_trajectory(&spec, alg, 0).unwrap();
        let elapsed = started.elapsed();
        assert!(
            elapsed.as_secs_f64() < 5.0,
            "{alg} took {elapsed:?} for one {}-duel trajectory",
            spec.horizon
        );
    }
}
