//! Fast built-in checks of the library's core behaviour.
//!
//! These run in well under a second and are wired to the CLI so a binary
//! install can vouch for itself without the test suite. Each check
//! returns a short failure description instead of panicking.

use crate::env::{yj_environment, UtilityNoise};
use crate::harness::csv::emit_csv;
use crate::harness::runner::{run_trajectory, CurvePoint, CurveSummary};
use crate::harness::scenario::{Algorithm, EnvironmentSpec, ScenarioSpec};
use crate::link::{ChoiceOutcome, LinkFunction};
use crate::reductions::{Doubler, DuelingSolver, MultiSbm, Sparring};
use crate::sbm::{ucb_index, Sbm, UcbPolicy};
use crate::seed::RandomSeed;

/// Result of one named check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn() -> Result<(), String>;

const CHECKS: [(&str, Check); 13] = [
    ("link-complementarity", check_link_complementarity),
    ("link-values", check_link_values),
    ("link-favors-better", check_link_favors_better),
    ("seed-replay", check_seed_replay),
    ("ucb-indices", check_ucb_indices),
    ("alternation-guard", check_alternation_guard),
    ("doubler-epochs", check_doubler_epochs),
    ("multisbm-routing", check_multisbm_routing),
    ("sparring-mirror", check_sparring_mirror),
    ("matrix-diagnostics", check_matrix_diagnostics),
    ("average-beats-loser", check_average_beats_loser),
    ("csv-golden", check_csv_golden),
    ("trajectory-replay", check_trajectory_replay),
];

/// Runs every check and reports each outcome.
pub fn run_all() -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|&(name, check)| match check() {
            Ok(()) => CheckOutcome {
                name,
                passed: true,
                detail: "ok".to_string(),
            },
            Err(detail) => CheckOutcome {
                name,
                passed: false,
                detail,
            },
        })
        .collect()
}

fn grid() -> impl Iterator<Item = f64> {
    (0..=20).map(|i| f64::from(i) / 20.0)
}

fn check_link_complementarity() -> Result<(), String> {
    for link in LinkFunction::ALL {
        for u in grid() {
            for v in grid() {
                let forward = link.eval(u, v).map_err(|e| e.to_string())?;
                let backward = link.eval(v, u).map_err(|e| e.to_string())?;
                if (forward + backward - 1.0).abs() > 1e-12 {
                    return Err(format!(
                        "{link}({u}, {v}) + {link}({v}, {u}) = {}",
                        forward + backward
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_link_values() -> Result<(), String> {
    let cases = [
        (LinkFunction::Linear, 0.8, 0.2, 0.8),
        (LinkFunction::Natural, 0.8, 0.2, 0.8),
        (LinkFunction::Logit, 0.8, 0.2, 0.6456563062257954),
        (LinkFunction::Natural, 0.0, 0.0, 0.5),
    ];
    for (link, u, v, expected) in cases {
        let got = link.eval(u, v).map_err(|e| e.to_string())?;
        if (got - expected).abs() > 1e-12 {
            return Err(format!("{link}({u}, {v}) = {got}, expected {expected}"));
        }
    }
    Ok(())
}

fn check_link_favors_better() -> Result<(), String> {
    for link in LinkFunction::ALL {
        for u in grid() {
            for v in grid() {
                if u <= v {
                    continue;
                }
                let p = link.eval(u, v).map_err(|e| e.to_string())?;
                if p <= 0.5 {
                    return Err(format!("{link}({u}, {v}) = {p} does not favor {u}"));
                }
            }
        }
    }
    Ok(())
}

fn check_seed_replay() -> Result<(), String> {
    use rand::RngCore;
    let mut a = RandomSeed(11).rng();
    let mut b = RandomSeed(11).rng();
    for i in 0..256 {
        if a.next_u64() != b.next_u64() {
            return Err(format!("streams diverged at draw {i}"));
        }
    }
    let mut offset = RandomSeed(11).for_run(3).rng();
    if offset.next_u64() == RandomSeed(11).rng().next_u64() {
        return Err("run offset did not change the stream".to_string());
    }
    Ok(())
}

fn check_ucb_indices() -> Result<(), String> {
    let cases = [
        (0.6, 9, 11, 1.4161384810323365),
        (0.3, 1, 11, 2.74841544309701),
    ];
    for (mean, pulls, time, expected) in cases {
        let got = ucb_index(mean, pulls, time, 3.0);
        if (got - expected).abs() > 1e-12 {
            return Err(format!(
                "index(mean {mean}, pulls {pulls}, t {time}) = {got}, expected {expected}"
            ));
        }
    }
    if ucb_index(0.0, 0, 5, 3.0) != f64::INFINITY {
        return Err("unplayed arms must rank first".to_string());
    }
    Ok(())
}

fn check_alternation_guard() -> Result<(), String> {
    let mut policy = UcbPolicy::new(2, 3.0).map_err(|e| e.to_string())?;
    if policy.feedback(0.5).is_ok() {
        return Err("feedback before any advance was accepted".to_string());
    }
    policy.advance().map_err(|e| e.to_string())?;
    if policy.advance().is_ok() {
        return Err("second advance without feedback was accepted".to_string());
    }
    if policy.feedback(2.0).is_ok() {
        return Err("out-of-range reward was accepted".to_string());
    }
    policy.feedback(0.5).map_err(|e| e.to_string())?;

    let mut sparring = Sparring::new(
        UcbPolicy::new(2, 3.0).map_err(|e| e.to_string())?,
        UcbPolicy::new(2, 3.0).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    if sparring.absorb(ChoiceOutcome::Left).is_ok() {
        return Err("outcome before any proposal was accepted".to_string());
    }
    Ok(())
}

fn check_doubler_epochs() -> Result<(), String> {
    let mut rng = RandomSeed(21).rng();
    let mut doubler = Doubler::new(UcbPolicy::new(3, 3.0).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let expected = [(2u64, 2u32), (6, 3), (14, 4), (30, 5)];
    let mut duels = 0u64;
    for &(boundary, epoch_after) in &expected {
        while duels < boundary {
            doubler.propose(&mut rng).map_err(|e| e.to_string())?;
            doubler
                .absorb(ChoiceOutcome::Right)
                .map_err(|e| e.to_string())?;
            duels += 1;
        }
        if doubler.epoch() != epoch_after {
            return Err(format!(
                "after {duels} duels the epoch is {}, expected {epoch_after}",
                doubler.epoch()
            ));
        }
        // The pool for the new epoch is the previous epoch's right arms.
        if doubler.left_multiset().len() != 1 << (epoch_after - 1) {
            return Err(format!(
                "after {duels} duels the left pool holds {} arms",
                doubler.left_multiset().len()
            ));
        }
    }
    Ok(())
}

fn check_multisbm_routing() -> Result<(), String> {
    let mut rng = RandomSeed(22).rng();
    let sbms = (0..3)
        .map(|_| UcbPolicy::new(3, 3.0))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let mut solver = MultiSbm::new(sbms).map_err(|e| e.to_string())?;
    let mut previous_right = 0usize;
    for t in 0..50 {
        let (x, y) = solver.propose(&mut rng).map_err(|e| e.to_string())?;
        if x != previous_right {
            return Err(format!("duel {t} used left {x}, expected {previous_right}"));
        }
        solver
            .absorb(if t % 3 == 0 {
                ChoiceOutcome::Left
            } else {
                ChoiceOutcome::Right
            })
            .map_err(|e| e.to_string())?;
        previous_right = y;
    }
    let cycles: u64 = solver.sbms().iter().map(|s| s.completed_cycles()).sum();
    if cycles != 50 {
        return Err(format!("{cycles} bandit cycles for 50 duels"));
    }
    Ok(())
}

fn check_sparring_mirror() -> Result<(), String> {
    let mut rng = RandomSeed(23).rng();
    let mut sparring = Sparring::new(
        UcbPolicy::new(1, 3.0).map_err(|e| e.to_string())?,
        UcbPolicy::new(1, 3.0).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    for t in 0..12 {
        sparring.propose(&mut rng).map_err(|e| e.to_string())?;
        let outcome = if t % 3 == 0 {
            ChoiceOutcome::Left
        } else {
            ChoiceOutcome::Right
        };
        sparring.absorb(outcome).map_err(|e| e.to_string())?;
    }
    let total = sparring.left().means()[0] + sparring.right().means()[0];
    if (total - 1.0).abs() > 1e-12 {
        return Err(format!("win rates sum to {total}, expected 1"));
    }
    Ok(())
}

fn check_matrix_diagnostics() -> Result<(), String> {
    let env = yj_environment();
    if (env.entry(0, 4) - 0.11).abs() > 1e-15 || env.entry(3, 5) != 0.0 {
        return Err("built-in margin table changed".to_string());
    }
    let report = env.verify_relaxed_properties();
    let gamma = report
        .transitivity_gamma
        .ok_or("transitivity scan found no feasible factor")?;
    if (gamma - 1.5).abs() > 1e-9 {
        return Err(format!("transitivity factor {gamma}, expected 1.5"));
    }
    if report.order_violations != vec![(3, 5)] {
        return Err(format!("order violations {:?}", report.order_violations));
    }
    if report.triangle.feasible {
        return Err("triangle form should be infeasible as written".to_string());
    }
    match report.triangle.mirrored_gamma {
        Some(m) if (m - 2.75).abs() <= 1e-9 => Ok(()),
        other => Err(format!("mirrored triangle factor {other:?}, expected 2.75")),
    }
}

fn check_average_beats_loser() -> Result<(), String> {
    for link in LinkFunction::ALL {
        for u in grid() {
            for v in grid() {
                let p = link.eval(u, v).map_err(|e| e.to_string())?;
                let expected_winner = p * u + (1.0 - p) * v;
                if expected_winner + 1e-12 < (u + v) / 2.0 {
                    return Err(format!(
                        "{link}({u}, {v}): winner utility {expected_winner} below the pair mean"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_csv_golden() -> Result<(), String> {
    let cells = vec![CurveSummary {
        scenario: "probe".to_string(),
        algorithm: Algorithm::Doubler,
        points: vec![CurvePoint {
            time: 16,
            mean_regret: 3.5,
            std_regret: 0.25,
            runs: 2,
        }],
    }];
    let expected = "scenario,algorithm,t,log2_t,mean_regret,std_regret,runs\n\
                    probe,doubler,16,4,3.50000,0.250000,2\n";
    let got = String::from_utf8(emit_csv(&cells)).map_err(|e| e.to_string())?;
    if got != expected {
        return Err(format!("csv bytes changed: {got:?}"));
    }
    Ok(())
}

fn check_trajectory_replay() -> Result<(), String> {
    let spec = ScenarioSpec {
        name: "probe".to_string(),
        environment: EnvironmentSpec::Utility {
            mu: vec![0.8, 0.5, 0.2],
            link: LinkFunction::Natural,
            noise: UtilityNoise::Deterministic,
        },
        algorithms: vec![Algorithm::Sparring],
        horizon: 96,
        runs: 1,
        base_seed: RandomSeed(77),
        checkpoints: vec![32, 96],
        permute_arms: true,
    };
    for algorithm in Algorithm::ALL {
        let a = run_trajectory(&spec, algorithm, 0).map_err(|e| e.to_string())?;
        let b = run_trajectory(&spec, algorithm, 0).map_err(|e| e.to_string())?;
        if a.final_average_regret.to_bits() != b.final_average_regret.to_bits() {
            return Err(format!("{algorithm} trajectory did not replay"));
        }
    }
    Ok(())
}
