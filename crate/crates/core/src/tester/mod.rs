//! Randomized test of whether every class of a vertex partition is a
//! connected dominating set.

mod centralized;
mod distributed;
mod partition;

pub use centralized::test_cds_partition_centralized;
pub use distributed::test_cds_partition_distributed;
pub use partition::{split_class, ClassPartition};

use serde::{Deserialize, Serialize};

/// Announcement rounds per `ln n'`.
pub const DEFAULT_ANNOUNCE_FACTOR: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    DominationFailure,
    ConnectivityFailure,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TestOutcome {
    pub verdict: Verdict,
    pub detecting_node: Option<usize>,
    /// 0 for the id exchange, `r` for the r-th announcement round.
    pub detection_round: Option<usize>,
    pub announce_rounds: usize,
}

impl TestOutcome {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

pub fn announce_rounds(n_virtual: usize, factor: usize) -> usize {
    factor * ((n_virtual.max(2) as f64).ln().ceil() as usize)
}
