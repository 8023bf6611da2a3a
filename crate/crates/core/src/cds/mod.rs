//! Dominating-tree packing via layered class assignment.

pub mod approx;
pub mod assignment;
pub mod bridging;
pub mod centralized;
pub mod distributed;
pub mod extract;
pub mod luby;
pub mod slots;
pub mod virtual_graph;

pub use approx::{approx_vertex_connectivity, ApproxOutcome, GuessRecord};
pub use assignment::{assign_base_layers, CdsParams, ClassAssignment, LayerLog, MatchRecord};
pub use bridging::{build_bridging_graph, BridgingGraph};
pub use centralized::{
    assign_random_kinds, cds_pack_centralized, cds_pack_centralized_with_assignment,
    process_layer_centralized, run_centralized_assignment, CdsPacking,
};
pub use distributed::{cds_pack_distributed, run_distributed, DistributedOutcome};
pub use extract::{extract_forests, extract_trees};
pub use luby::{luby_matching, Matching};
pub use slots::SlotTable;
pub use virtual_graph::{VirtualGraph, VirtualNode};
