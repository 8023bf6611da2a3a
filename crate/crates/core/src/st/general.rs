use serde::{Deserialize, Serialize};

use super::small::{scale_packing, st_pack_small, StParams};
use super::target_trees;
use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph};
use crate::oracles::edge_connectivity;
use crate::packing::TreePacking;
use crate::rng::{fnv1a, hash_draw};

/// Source of edge-connectivity values for the partitioned packer.
pub trait EdgeConnectivityEstimator {
    fn estimate(&self, g: &Graph) -> usize;
}

pub struct ExactEstimator;

impl EdgeConnectivityEstimator for ExactEstimator {
    fn estimate(&self, g: &Graph) -> usize {
        edge_connectivity(g)
    }
}

/// Number of parts for the random edge partition; 1 unless `lambda` is well above `100 ln n / eps^2`.
pub fn choose_eta(lambda: usize, n: usize, epsilon: f64) -> usize {
    let ln_n = (n.max(2) as f64).ln();
    let lambda = lambda as f64;
    if lambda <= 100.0 * ln_n / (epsilon * epsilon) {
        return 1;
    }
    ((lambda * epsilon * epsilon / (30.0 * ln_n)).floor() as usize).max(1)
}

#[derive(Clone, Debug)]
pub struct EdgePartition {
    pub eta: usize,
    /// Part of each edge, canonical order.
    pub part: Vec<usize>,
    pub subgraphs: Vec<Graph>,
}

pub fn edge_partition(g: &Graph, eta: usize, seed: u64) -> Result<EdgePartition> {
    if eta == 0 {
        return Err(Error::InvalidParam("eta must be positive".into()));
    }
    let tag = fnv1a("edge-partition");
    let edges = g.edge_list();
    let part: Vec<usize> = (0..edges.len())
        .map(|i| {
            if eta == 1 {
                0
            } else {
                (hash_draw(seed, tag, i as u64, 0) % eta as u64) as usize
            }
        })
        .collect();
    let mut lists = vec![Vec::new(); eta];
    for (e, &p) in edges.iter().zip(&part) {
        lists[p].push((e.u, e.v));
    }
    let subgraphs = lists
        .into_iter()
        .map(|l| Graph::from_edges_lossy(g.n(), l))
        .collect();
    Ok(EdgePartition {
        eta,
        part,
        subgraphs,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubgraphReport {
    pub lambda: usize,
    pub iterations: usize,
    pub cap: usize,
    pub max_z: f64,
    pub weight: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StPacking {
    #[serde(flatten)]
    pub trees: TreePacking,
    pub lambda_used: usize,
    pub eta: usize,
    pub epsilon: f64,
    pub alpha: f64,
    pub beta: f64,
    pub iterations: usize,
    pub max_z: f64,
    /// Guaranteed total `sum_i K_i / (1 + 6 eps)`.
    pub promised_weight: f64,
    pub parts: Vec<SubgraphReport>,
}

/// Partitions the edges into `eta` random parts, packs each part on its own and
/// takes the union. `eta` defaults to [`choose_eta`] on the estimated connectivity.
pub fn st_pack_general(
    g: &Graph,
    params: &StParams,
    seed: u64,
    eta: Option<usize>,
    estimator: &dyn EdgeConnectivityEstimator,
) -> Result<StPacking> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let lambda = estimator.estimate(g);
    let eta = eta.unwrap_or_else(|| choose_eta(lambda, g.n(), params.epsilon));
    let partition = edge_partition(g, eta, seed)?;
    let mut out = StPacking {
        trees: TreePacking::default(),
        lambda_used: lambda,
        eta,
        epsilon: params.epsilon,
        alpha: 0.0,
        beta: 0.0,
        iterations: 0,
        max_z: 0.0,
        promised_weight: 0.0,
        parts: Vec::new(),
    };
    for h in &partition.subgraphs {
        let lambda_i = if eta == 1 {
            lambda
        } else {
            estimator.estimate(h)
        };
        if lambda_i == 0 {
            out.parts.push(SubgraphReport {
                lambda: 0,
                iterations: 0,
                cap: 0,
                max_z: 0.0,
                weight: 0.0,
            });
            continue;
        }
        let state = st_pack_small(h, lambda_i, params)?;
        let packed = scale_packing(h, &state)?;
        out.alpha = out.alpha.max(state.alpha);
        out.beta = if out.beta == 0.0 {
            state.beta
        } else {
            out.beta.min(state.beta)
        };
        out.iterations = out.iterations.max(state.iterations);
        out.max_z = out.max_z.max(state.max_z);
        let bound = target_trees(lambda_i) as f64 / (1.0 + 6.0 * params.epsilon);
        out.promised_weight += bound;
        out.parts.push(SubgraphReport {
            lambda: lambda_i,
            iterations: state.iterations,
            cap: state.cap,
            max_z: state.max_z,
            weight: packed.total_weight(),
        });
        for mut t in packed.trees {
            t.id = out.trees.trees.len();
            out.trees.trees.push(t);
        }
    }
    Ok(out)
}
