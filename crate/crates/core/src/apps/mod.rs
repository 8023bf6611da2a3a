//! Applications of tree packings and the experiment report format.

mod congestion;
mod gossip;
mod report;

pub use congestion::{congestion_report, CongestionReport, Demands};
pub use gossip::{gossip, sequential_baseline, spread_origins, GossipOutcome, GossipPlan};
pub use report::{ExperimentReport, Stats, TranscriptSummary};
