//! Fractional spanning-tree packing by multiplicative weights over MSTs,
//! with random edge partitioning for large edge connectivity.

mod cost;
mod general;
mod small;

pub use cost::{st_cost_model, CostModel};
pub use general::{
    choose_eta, edge_partition, st_pack_general, EdgeConnectivityEstimator, EdgePartition,
    ExactEstimator, StPacking, SubgraphReport,
};
pub use small::{iteration_cap, scale_packing, st_pack_small, StPackingState, StParams};

/// Trees a packing of a graph with edge connectivity `lambda` aims for.
pub fn target_trees(lambda: usize) -> usize {
    lambda.saturating_sub(1).div_ceil(2).max(1)
}
