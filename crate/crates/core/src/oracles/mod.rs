//! Exact connectivity oracles and packing verifiers.

mod connectivity;
mod flow;
mod verify;

pub use connectivity::{
    edge_connectivity, edge_connectivity_flow, local_vertex_connectivity, vertex_connectivity,
};
pub use flow::UnitFlow;
pub use verify::{
    verify_dominating_packing, verify_spanning_packing, FailureReason, TreeFailure, VerifierReport,
    Witness, LOAD_TOLERANCE,
};
