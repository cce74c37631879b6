//! Duel environment driven by an explicit preference matrix.
//!
//! Entry `(x, y)` of the matrix is the margin `eps` such that `x` beats `y`
//! with probability `1/2 + eps`. The matrix must be antisymmetric with a
//! zero diagonal and entries in `[-1/2, 1/2]`. An implied ranking (best arm
//! first) accompanies the matrix; regret for a duel `(x, y)` is measured
//! against the best arm `b` as `(eps(b, x) + eps(b, y)) / 2`.
//!
//! [`PreferenceMatrixEnvironment::verify_relaxed_properties`] checks how
//! far the matrix is from the structural assumptions that dueling-bandit
//! analyses lean on: relaxed stochastic transitivity, the gamma-scaled
//! triangle inequality (in the orientation with gamma multiplying the
//! left-hand side, exactly as usually stated, plus the mirrored
//! orientation), and strictness of the implied order.

use rand::Rng;

use crate::env::data;
use crate::error::Error;
use crate::link::ChoiceOutcome;
use crate::seed::RunRng;

const ANTISYMMETRY_TOL: f64 = 1e-12;

/// Feasible range of the scaling factor gamma under a constraint family.
///
/// Constraints only ever bound gamma from below (`lower`, at least 1) or
/// from above (`upper`), or rule it out entirely (`impossible`).
#[derive(Clone, Copy, Debug)]
struct GammaRange {
    lower: f64,
    upper: Option<f64>,
    impossible: bool,
}

impl GammaRange {
    fn new() -> Self {
        GammaRange {
            lower: 1.0,
            upper: None,
            impossible: false,
        }
    }

    /// Adds the constraint `gamma * coeff <= bound`.
    fn add_scaled_leq(&mut self, coeff: f64, bound: f64) {
        if coeff > 0.0 {
            let ratio = bound / coeff;
            self.upper = Some(self.upper.map_or(ratio, |u| u.min(ratio)));
        } else if coeff == 0.0 {
            if bound < 0.0 {
                self.impossible = true;
            }
        } else {
            self.lower = self.lower.max(bound / coeff);
        }
    }

    /// Adds the constraint `value <= gamma * coeff`.
    fn add_leq_scaled(&mut self, value: f64, coeff: f64) {
        if coeff > 0.0 {
            self.lower = self.lower.max(value / coeff);
        } else if coeff == 0.0 {
            if value > 0.0 {
                self.impossible = true;
            }
        } else {
            let ratio = value / coeff;
            self.upper = Some(self.upper.map_or(ratio, |u| u.min(ratio)));
        }
    }

    fn feasible(&self) -> bool {
        !self.impossible && self.upper.is_none_or(|u| u >= self.lower - 1e-9)
    }
}

/// Outcome of one triangle-inequality scan.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TriangleReport {
    /// Largest gamma the as-written constraints allow, when they cap it.
    pub gamma_upper: Option<f64>,
    /// Whether some gamma >= 1 satisfies the form as written.
    pub feasible: bool,
    /// Minimal gamma >= 1 for the mirrored orientation, or `None` when no
    /// gamma satisfies it.
    pub mirrored_gamma: Option<f64>,
}

/// Structural diagnosis of a preference matrix.
#[derive(Clone, Debug)]
pub struct MatrixPropertyReport {
    pub arm_count: usize,
    /// Minimal gamma >= 1 for relaxed stochastic transitivity, or `None`
    /// when no finite gamma works.
    pub transitivity_gamma: Option<f64>,
    /// Pair of non-best arms at which the transitivity bound is tight.
    pub transitivity_witness: Option<(usize, usize)>,
    /// Ranked pairs (x above y) whose margin fails to be positive.
    pub order_violations: Vec<(usize, usize)>,
    /// Triangle scan over ranked non-best pairs.
    pub triangle: TriangleReport,
    /// Triangle scan over all ordered pairs of distinct arms.
    pub extended_triangle: TriangleReport,
}

impl std::fmt::Display for MatrixPropertyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "preference matrix over {} arms", self.arm_count)?;
        match (self.transitivity_gamma, self.transitivity_witness) {
            (Some(gamma), Some((x, y))) => writeln!(
                f,
                "  relaxed stochastic transitivity: minimal gamma = {gamma:.6} (tight at arms {x}, {y})"
            )?,
            (Some(gamma), None) => writeln!(
                f,
                "  relaxed stochastic transitivity: minimal gamma = {gamma:.6}"
            )?,
            _ => writeln!(
                f,
                "  relaxed stochastic transitivity: no finite gamma works"
            )?,
        }
        if self.order_violations.is_empty() {
            writeln!(f, "  strict order: holds for every ranked pair")?;
        } else {
            let pairs: Vec<String> = self
                .order_violations
                .iter()
                .map(|(x, y)| format!("({x}, {y})"))
                .collect();
            writeln!(
                f,
                "  strict order: violated by {} pair(s): {}",
                pairs.len(),
                pairs.join(", ")
            )?;
        }
        for (label, report) in [
            ("ranked pairs", &self.triangle),
            ("all pairs", &self.extended_triangle),
        ] {
            write!(f, "  triangle inequality over {label}: ")?;
            match report.gamma_upper {
                Some(upper) if report.feasible => write!(f, "feasible up to gamma = {upper:.6}")?,
                Some(upper) => write!(f, "infeasible (constraints cap gamma at {upper:.6})")?,
                None if report.feasible => write!(f, "feasible for every gamma >= 1")?,
                None => write!(f, "infeasible")?,
            }
            match report.mirrored_gamma {
                Some(gamma) => writeln!(f, "; mirrored form: minimal gamma = {gamma:.6}")?,
                None => writeln!(f, "; mirrored form: infeasible")?,
            }
        }
        Ok(())
    }
}

/// Dueling environment defined by pairwise win margins.
#[derive(Clone, Debug)]
pub struct PreferenceMatrixEnvironment {
    epsilon: Vec<Vec<f64>>,
    implied_order: Vec<usize>,
}

impl PreferenceMatrixEnvironment {
    /// Builds the environment from a margin matrix and its implied ranking
    /// (best arm first).
    pub fn new(epsilon: Vec<Vec<f64>>, implied_order: Vec<usize>) -> Result<Self, Error> {
        let arms = epsilon.len();
        if arms == 0 {
            return Err(Error::NoArms);
        }
        for (row_index, row) in epsilon.iter().enumerate() {
            if row.len() != arms {
                return Err(Error::InvalidParameter(format!(
                    "preference matrix must be square: row {row_index} has {} entries, expected {arms}",
                    row.len()
                )));
            }
        }
        for (x, row) in epsilon.iter().enumerate() {
            for (y, &value) in row.iter().enumerate() {
                if !value.is_finite() || value.abs() > 0.5 {
                    return Err(Error::PreferenceOutOfRange {
                        row: x,
                        col: y,
                        value,
                    });
                }
                if (value + epsilon[y][x]).abs() > ANTISYMMETRY_TOL {
                    return Err(Error::NotAntisymmetric { row: x, col: y });
                }
            }
        }
        let mut seen = vec![false; arms];
        for &arm in &implied_order {
            if arm >= arms || seen[arm] {
                return Err(Error::InvalidOrder);
            }
            seen[arm] = true;
        }
        if implied_order.len() != arms {
            return Err(Error::InvalidOrder);
        }
        Ok(PreferenceMatrixEnvironment {
            epsilon,
            implied_order,
        })
    }

    /// Derives the margin matrix `eps(x, y) = (mu(x) - mu(y)) / 2` implied
    /// by utilities under the linear link, ranked by descending utility.
    pub fn from_utilities(mu: &[f64]) -> Result<Self, Error> {
        let gap = crate::gap::GapProfile::from_utilities(mu)?;
        let arms = gap.arm_count();
        let epsilon: Vec<Vec<f64>> = (0..arms)
            .map(|x| (0..arms).map(|y| (mu[x] - mu[y]) / 2.0).collect())
            .collect();
        let mut order: Vec<usize> = (0..arms).collect();
        order.sort_by(|&a, &b| mu[b].partial_cmp(&mu[a]).unwrap().then(a.cmp(&b)));
        PreferenceMatrixEnvironment::new(epsilon, order)
    }

    pub fn arm_count(&self) -> usize {
        self.epsilon.len()
    }

    pub fn epsilon(&self) -> &[Vec<f64>] {
        &self.epsilon
    }

    /// Win margin of `x` over `y`.
    pub fn entry(&self, x: usize, y: usize) -> f64 {
        self.epsilon[x][y]
    }

    /// Ranking implied by the matrix, best arm first.
    pub fn implied_order(&self) -> &[usize] {
        &self.implied_order
    }

    pub fn best_arm(&self) -> usize {
        self.implied_order[0]
    }

    fn check_arm(&self, arm: usize) -> Result<(), Error> {
        if arm < self.arm_count() {
            Ok(())
        } else {
            Err(Error::ArmOutOfRange {
                index: arm,
                arms: self.arm_count(),
            })
        }
    }

    /// Plays one duel: the left arm wins with probability `1/2 + eps(x, y)`.
    pub fn duel(&self, x: usize, y: usize, rng: &mut RunRng) -> Result<ChoiceOutcome, Error> {
        self.check_arm(x)?;
        self.check_arm(y)?;
        let p_left = 0.5 + self.epsilon[x][y];
        Ok(ChoiceOutcome::from_left_win(rng.gen_bool(p_left)))
    }

    /// Per-step regret of the pair against the best arm.
    pub fn regret_step(&self, x: usize, y: usize) -> f64 {
        let best = self.best_arm();
        0.5 * (self.epsilon[best][x] + self.epsilon[best][y])
    }

    /// Scans the matrix for the relaxed structural properties.
    pub fn verify_relaxed_properties(&self) -> MatrixPropertyReport {
        let arms = self.arm_count();
        let order = &self.implied_order;
        let best = order[0];
        let delta = |x: usize, y: usize| self.epsilon[x][y];

        // Relaxed stochastic transitivity over ranked non-best pairs:
        // max(delta(b, x), delta(x, y)) <= gamma * delta(b, y).
        let mut transitivity = GammaRange::new();
        let mut witness = None;
        let mut witness_ratio = f64::NEG_INFINITY;
        for i in 1..arms {
            for j in (i + 1)..arms {
                let (x, y) = (order[i], order[j]);
                let need = delta(best, x).max(delta(x, y));
                let have = delta(best, y);
                transitivity.add_leq_scaled(need, have);
                if have > 0.0 && need / have > witness_ratio {
                    witness_ratio = need / have;
                    witness = Some((x, y));
                }
            }
        }
        let transitivity_gamma = transitivity.feasible().then_some(transitivity.lower);

        let mut order_violations = Vec::new();
        for i in 0..arms {
            for j in (i + 1)..arms {
                if delta(order[i], order[j]) <= 0.0 {
                    order_violations.push((order[i], order[j]));
                }
            }
        }

        let ranked_pairs: Vec<(usize, usize)> = (1..arms)
            .flat_map(|i| ((i + 1)..arms).map(move |j| (i, j)))
            .map(|(i, j)| (order[i], order[j]))
            .collect();
        let all_pairs: Vec<(usize, usize)> = (0..arms)
            .flat_map(|x| (0..arms).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y)
            .collect();

        let scan = |pairs: &[(usize, usize)]| -> TriangleReport {
            // As written: gamma * delta(b, y) <= delta(b, x) + delta(x, y).
            // Mirrored:   delta(b, y) <= gamma * (delta(b, x) + delta(x, y)).
            let mut as_written = GammaRange::new();
            let mut mirrored = GammaRange::new();
            for &(x, y) in pairs {
                let lhs = delta(best, y);
                let rhs = delta(best, x) + delta(x, y);
                as_written.add_scaled_leq(lhs, rhs);
                mirrored.add_leq_scaled(lhs, rhs);
            }
            TriangleReport {
                gamma_upper: as_written.upper,
                feasible: as_written.feasible(),
                mirrored_gamma: mirrored.feasible().then_some(mirrored.lower),
            }
        };

        MatrixPropertyReport {
            arm_count: arms,
            transitivity_gamma,
            transitivity_witness: witness,
            order_violations,
            triangle: scan(&ranked_pairs),
            extended_triangle: scan(&all_pairs),
        }
    }
}

/// The built-in six-arm preference environment from the ranked-retrieval
/// study (arms A..F).
pub fn yj_environment() -> PreferenceMatrixEnvironment {
    let epsilon = data::YJ_EPSILON.iter().map(|row| row.to_vec()).collect();
    PreferenceMatrixEnvironment::new(epsilon, data::YJ_ORDER.to_vec())
        .expect("built-in preference table is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::env::data::{MU_2GOOD, YJ_EPSILON};
    use crate::seed::RandomSeed;

    #[test]
    fn construction_validates_the_matrix() {
        assert!(PreferenceMatrixEnvironment::new(vec![], vec![]).is_err());
        // Ragged row.
        assert!(
            PreferenceMatrixEnvironment::new(vec![vec![0.0], vec![0.0, 0.0]], vec![0, 1]).is_err()
        );
        // Broken antisymmetry.
        assert!(matches!(
            PreferenceMatrixEnvironment::new(vec![vec![0.0, 0.2], vec![0.1, 0.0]], vec![0, 1]),
            Err(Error::NotAntisymmetric { .. })
        ));
        // Nonzero diagonal breaks antisymmetry with itself.
        assert!(PreferenceMatrixEnvironment::new(vec![vec![0.3]], vec![0]).is_err());
        // Margin outside [-1/2, 1/2].
        assert!(matches!(
            PreferenceMatrixEnvironment::new(vec![vec![0.0, 0.6], vec![-0.6, 0.0]], vec![0, 1]),
            Err(Error::PreferenceOutOfRange { .. })
        ));
        // Order must be a permutation.
        assert!(matches!(
            PreferenceMatrixEnvironment::new(vec![vec![0.0, 0.1], vec![-0.1, 0.0]], vec![0, 0]),
            Err(Error::InvalidOrder)
        ));
    }

    #[test]
    fn duel_frequencies_match_the_margins() {
        let env = yj_environment();
        let mut rng = RandomSeed(31).rng();
        let duels = 100_000u64;
        // (A, F) has margin 0.11, (D, F) is an exact tie.
        for (x, y, p) in [(0usize, 5usize, 0.61f64), (3, 5, 0.5)] {
            let mut wins = 0u64;
            for _ in 0..duels {
                if env.duel(x, y, &mut rng).unwrap().is_left() {
                    wins += 1;
                }
            }
            let freq = wins as f64 / duels as f64;
            let sigma = (p * (1.0 - p) / duels as f64).sqrt();
            assert!((freq - p).abs() <= 3.0 * sigma, "({x}, {y}): {freq} vs {p}");
        }
    }

    #[test]
    fn regret_uses_the_best_row() {
        let env = yj_environment();
        assert!((env.regret_step(4, 5) - 0.11).abs() < 1e-15);
        assert!((env.regret_step(1, 2) - 0.05).abs() < 1e-15);
        assert_eq!(env.regret_step(0, 0), 0.0);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn transitivity_gamma_matches_a_brute_force_scan() {
        let env = yj_environment();
        let report = env.verify_relaxed_properties();
        // Independent exhaustive scan over ranked non-best pairs.
        let mut need = 1.0f64;
        for x in 1..6 {
            for y in (x + 1)..6 {
                let num = YJ_EPSILON[0][x].max(YJ_EPSILON[x][y]);
                need = need.max(num / YJ_EPSILON[0][y]);
            }
        }
        let gamma = report.transitivity_gamma.expect("feasible gamma");
        assert!((gamma - need).abs() < 1e-12);
        assert!((gamma - 1.5).abs() < 1e-9, "gamma = {gamma}");
        assert_eq!(report.transitivity_witness, Some((1, 3)));
    }

    #[test]
    fn the_exact_tie_is_reported_as_an_order_violation() {
        let report = yj_environment().verify_relaxed_properties();
        assert_eq!(report.order_violations, vec![(3, 5)]);
    }

    #[test]
    fn triangle_scan_matches_hand_computed_bounds() {
        let report = yj_environment().verify_relaxed_properties();
        // Ranked pairs: the (D, F) constraint caps gamma at
        // (eps(A,D) + eps(D,F)) / eps(A,F) = 0.04 / 0.11 < 1.
        let upper = report.triangle.gamma_upper.expect("capped");
        assert!((upper - 0.04 / 0.11).abs() < 1e-12, "upper = {upper}");
        assert!(!report.triangle.feasible);
        // Mirrored orientation is satisfiable, tight at the same pair.
        let mirrored = report.triangle.mirrored_gamma.expect("mirrored feasible");
        assert!((mirrored - 2.75).abs() < 1e-9, "mirrored = {mirrored}");
        // Over all pairs even the mirrored orientation fails: for
        // (x, y) = (D, B) the right-hand side is negative.
        assert!(!report.extended_triangle.feasible);
        assert_eq!(report.extended_triangle.mirrored_gamma, None);
    }

    #[test]
    fn utility_derived_matrices_satisfy_everything_at_gamma_one() {
        let env = PreferenceMatrixEnvironment::from_utilities(&MU_2GOOD).unwrap();
        assert_eq!(env.best_arm(), 0);
        let report = env.verify_relaxed_properties();
        let gamma = report.transitivity_gamma.expect("feasible");
        assert!((gamma - 1.0).abs() < 1e-12, "gamma = {gamma}");
        assert!(report.triangle.feasible);
        let upper = report.triangle.gamma_upper.expect("capped at equality");
        assert!((upper - 1.0).abs() < 1e-12, "upper = {upper}");
        let mirrored = report.triangle.mirrored_gamma.expect("feasible");
        assert!((mirrored - 1.0).abs() < 1e-12);
        // The telescoping identity makes even the all-pairs scan tight.
        assert!(report.extended_triangle.feasible);
        // Ties in the row produce zero margins between equal arms, which
        // the order report must surface.
        assert!(report
            .order_violations
            .iter()
            .all(|&(x, y)| (MU_2GOOD[x] - MU_2GOOD[y]).abs() < 1e-15));
        assert!(!report.order_violations.is_empty());
    }

    #[test]
    fn report_display_is_stable() {
        let text = yj_environment().verify_relaxed_properties().to_string();
        assert!(text.contains("minimal gamma = 1.5"));
        assert!(text.contains("violated by 1 pair(s): (3, 5)"));
        assert!(text.contains("mirrored form: minimal gamma = 2.75"));
    }
}
