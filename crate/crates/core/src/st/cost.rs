use serde::{Deserialize, Serialize};

use super::general::choose_eta;
use super::small::{iteration_cap, StParams};
use super::target_trees;
use crate::sim::log_star;

/// Charged-round estimate for the message-passing version: every iteration is
/// one MST computation, and the `eta` parts pipeline their MSTs together.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CostModel {
    pub n: usize,
    pub diameter: usize,
    pub lambda: usize,
    pub eta: usize,
    pub iterations: usize,
    pub mst_rounds: usize,
    pub total_rounds: usize,
}

pub fn st_cost_model(
    n: usize,
    m: usize,
    diameter: usize,
    lambda: usize,
    epsilon: f64,
) -> CostModel {
    let eta = choose_eta(lambda, n, epsilon);
    let per_part = StParams::with_epsilon(epsilon);
    let part_m = m.div_ceil(eta).max(1);
    let alpha = per_part.alpha_for(part_m);
    let iterations = iteration_cap(n, part_m, alpha, target_trees(lambda / eta), epsilon);
    let spread = ((n * eta) as f64).sqrt().ceil() as usize;
    let mst_rounds = diameter + spread * log_star(n);
    CostModel {
        n,
        diameter,
        lambda,
        eta,
        iterations,
        mst_rounds,
        total_rounds: iterations * mst_rounds,
    }
}
