use serde::{Deserialize, Serialize};

use super::assignment::CdsParams;
use super::centralized::{cds_pack_centralized_with_assignment, CdsPacking};
use crate::error::Result;
use crate::graph::Graph;
use crate::rng::mix64;
use crate::tester::{test_cds_partition_centralized, ClassPartition, TestOutcome};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GuessRecord {
    pub guess: usize,
    pub t: usize,
    pub outcome: TestOutcome,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ApproxOutcome {
    /// Class count of the accepted packing.
    pub k_lower: usize,
    pub accepted_guess: usize,
    pub packing: CdsPacking,
    pub guesses: Vec<GuessRecord>,
}

/// Tries guesses `n / 2^j` from the top and keeps the first packing the tester
/// accepts. Guesses above twice the minimum degree are skipped, since the
/// vertex connectivity never exceeds the minimum degree.
pub fn approx_vertex_connectivity(
    g: &Graph,
    params: &CdsParams,
    announce_factor: usize,
) -> Result<ApproxOutcome> {
    let ceiling = 2 * g.min_degree();
    let mut guesses = Vec::new();
    let mut j = 0;
    while g.n() >> j >= 1 {
        let guess = g.n() >> j;
        j += 1;
        if guess > ceiling {
            continue;
        }
        let p = CdsParams {
            seed: mix64(params.seed ^ guess as u64),
            ..params.clone()
        };
        let (packing, ca) = cds_pack_centralized_with_assignment(g, guess, &p)?;
        let part = ClassPartition::from_assignment(&ca);
        let outcome = test_cds_partition_centralized(g, &part, p.seed, announce_factor);
        let passed = outcome.passed();
        guesses.push(GuessRecord {
            guess,
            t: packing.t,
            outcome,
        });
        if passed {
            return Ok(ApproxOutcome {
                k_lower: packing.t,
                accepted_guess: guess,
                packing,
                guesses,
            });
        }
    }
    let p = CdsParams {
        classes: Some(1),
        ..params.clone()
    };
    let (packing, _) = cds_pack_centralized_with_assignment(g, 1, &p)?;
    Ok(ApproxOutcome {
        k_lower: 1,
        accepted_guess: 1,
        packing,
        guesses,
    })
}
