//! Built-in scenario constants.
//!
//! Five six-arm utility rows, all with best utility 0.8 and worst 0.2 but
//! different gap structure, plus a six-arm pairwise preference table
//! estimated from a web-search interleaving experiment (arms A..F, listed
//! best to worst). In the table, entry `(x, y)` is the margin epsilon such
//! that `Pr[x beats y] = 1/2 + epsilon`; it is antisymmetric with zero
//! diagonal, and the pair (D, F) is an exact tie, a known violation of the
//! strict linear order.

/// Arms per built-in scenario.
pub const ARM_COUNT: usize = 6;

/// One strong arm, five tied weak ones.
pub const MU_1GOOD: [f64; ARM_COUNT] = [0.8, 0.2, 0.2, 0.2, 0.2, 0.2];

/// Two close strong arms ahead of four weak ones.
pub const MU_2GOOD: [f64; ARM_COUNT] = [0.8, 0.7, 0.2, 0.2, 0.2, 0.2];

/// Three strong arms, the last two tied.
pub const MU_3GOOD: [f64; ARM_COUNT] = [0.8, 0.7, 0.7, 0.2, 0.2, 0.2];

/// Arithmetic descent from 0.7 to 0.2 behind the best arm.
pub const MU_ARITH: [f64; ARM_COUNT] = [0.8, 0.7, 0.575, 0.45, 0.325, 0.2];

/// Geometric descent from 0.7 to 0.2 behind the best arm.
pub const MU_GEOM: [f64; ARM_COUNT] = [0.8, 0.7, 0.512, 0.374, 0.274, 0.2];

/// The utility rows in registry order, with their scenario name stems.
pub const UTILITY_ROWS: [(&str, [f64; ARM_COUNT]); 5] = [
    ("1good", MU_1GOOD),
    ("2good", MU_2GOOD),
    ("3good", MU_3GOOD),
    ("arith", MU_ARITH),
    ("geom", MU_GEOM),
];

/// Pairwise win margins for the six ranked retrieval functions A..F.
///
/// Encoded from the published upper triangle and mirrored, so the matrix
/// is exactly antisymmetric.
pub const YJ_EPSILON: [[f64; ARM_COUNT]; ARM_COUNT] = [
    [0.00, 0.05, 0.05, 0.04, 0.11, 0.11],
    [-0.05, 0.00, 0.05, 0.06, 0.08, 0.10],
    [-0.05, -0.05, 0.00, 0.04, 0.01, 0.06],
    [-0.04, -0.06, -0.04, 0.00, 0.04, 0.00],
    [-0.11, -0.08, -0.01, -0.04, 0.00, 0.01],
    [-0.11, -0.10, -0.06, 0.00, -0.01, 0.00],
];

/// Ranking implied by the preference study: A beats B beats ... beats F.
pub const YJ_ORDER: [usize; ARM_COUNT] = [0, 1, 2, 3, 4, 5];

/// Display names for the preference-table arms.
pub const YJ_ARM_NAMES: [&str; ARM_COUNT] = ["A", "B", "C", "D", "E", "F"];
