use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::target_trees;
use crate::error::{Error, Result};
use crate::graph::{is_connected, EdgeId, Graph, UnionFind};
use crate::packing::{Tree, TreePacking};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StParams {
    pub epsilon: f64,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    /// Loads are rounded to multiples of this before computing costs;
    /// `None` picks `min(1/n, beta/4)`, `Some(0.0)` disables rounding.
    pub load_grid: Option<f64>,
}

impl Default for StParams {
    fn default() -> Self {
        StParams {
            epsilon: 0.1,
            alpha: None,
            beta: None,
            load_grid: None,
        }
    }
}

impl StParams {
    pub fn with_epsilon(epsilon: f64) -> Self {
        StParams {
            epsilon,
            ..Self::default()
        }
    }

    pub fn alpha_for(&self, m: usize) -> f64 {
        self.alpha.unwrap_or_else(|| {
            ((2.0 / self.epsilon) * (2.0 * m.max(1) as f64 / self.epsilon).ln()).ceil()
        })
    }

    pub fn beta_for(&self, alpha: f64, n: usize) -> f64 {
        self.beta
            .unwrap_or_else(|| 1.0 / (4.0 * alpha * (n.max(2) as f64).ln().ceil()))
    }
}

/// Iteration cap `ceil((ln n / eps) * (alpha * K + ln m)) + 1`.
pub fn iteration_cap(n: usize, m: usize, alpha: f64, trees: usize, epsilon: f64) -> usize {
    let ln_n = (n.max(2) as f64).ln();
    let ln_m = (m.max(1) as f64).ln();
    ((ln_n / epsilon) * (alpha * trees as f64 + ln_m)).ceil() as usize + 1
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StPackingState {
    /// Edge index lists (canonical order) with weights summing to 1.
    pub trees: Vec<(Vec<usize>, f64)>,
    /// Per-edge load, canonical edge order.
    pub load: Vec<f64>,
    pub lambda: usize,
    pub target: usize,
    pub epsilon: f64,
    pub alpha: f64,
    pub beta: f64,
    pub iterations: usize,
    pub cap: usize,
    pub max_z: f64,
    /// `ln sum_e c_e` before each iteration.
    pub log_potential: Vec<f64>,
}

fn min_tree(
    n: usize,
    edges: &[EdgeId],
    keys: &[i64],
    order: &mut Vec<u64>,
    start: &mut Vec<usize>,
) -> Vec<usize> {
    // keys are small grid counts, so a counting sort usually applies;
    // both branches order by (key, index)
    let low = keys.iter().copied().min().unwrap_or(0);
    let top = keys.iter().copied().max().unwrap_or(0);
    order.clear();
    if top.abs_diff(low) <= 32 * keys.len() as u64 + 65_536 {
        start.clear();
        start.resize((top - low) as usize + 2, 0);
        for &k in keys {
            start[(k - low) as usize + 1] += 1;
        }
        for j in 1..start.len() {
            start[j] += start[j - 1];
        }
        order.resize(keys.len(), 0);
        for (i, &k) in keys.iter().enumerate() {
            let b = (k - low) as usize;
            order[start[b]] = i as u64;
            start[b] += 1;
        }
    } else {
        order.extend(0..keys.len() as u64);
        order.sort_unstable_by_key(|&i| (keys[i as usize], i));
    }
    let mut uf = UnionFind::new(n);
    let mut tree = Vec::with_capacity(n.saturating_sub(1));
    for &w in order.iter() {
        let i = w as usize;
        if uf.union(edges[i].u, edges[i].v) {
            tree.push(i);
            if tree.len() + 1 == n {
                break;
            }
        }
    }
    tree.sort_unstable();
    tree
}

/// `exp(-step * d)` for integer `d`, grown on demand.
struct ExpTable {
    step: f64,
    values: Vec<f64>,
}

impl ExpTable {
    fn get(&mut self, d: usize) -> f64 {
        while self.values.len() <= d {
            let next = (-self.step * self.values.len() as f64).exp();
            self.values.push(next);
        }
        self.values[d]
    }
}

/// Packs spanning trees of `g`, whose edge connectivity is `lambda`, until the
/// MST is no longer cheap relative to the current packing.
pub fn st_pack_small(g: &Graph, lambda: usize, params: &StParams) -> Result<StPackingState> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if lambda == 0 || !(params.epsilon > 0.0 && params.epsilon < 1.0) {
        return Err(Error::InvalidParam(
            "need lambda >= 1 and 0 < epsilon < 1".into(),
        ));
    }
    let (n, m) = (g.n(), g.m());
    let edges = g.edge_list();
    let target = target_trees(lambda);
    let eps = params.epsilon;
    let alpha = params.alpha_for(m);
    let beta = params.beta_for(alpha, n);
    let cap = iteration_cap(n, m, alpha, target, eps);
    let grid = params
        .load_grid
        .unwrap_or_else(|| (1.0 / n.max(1) as f64).min(beta / 4.0));
    let scale = if grid > 0.0 { 1.0 / grid } else { 1e12 };

    let mut state = StPackingState {
        trees: Vec::new(),
        load: vec![0.0; m],
        lambda,
        target,
        epsilon: eps,
        alpha,
        beta,
        iterations: 0,
        cap,
        max_z: 0.0,
        log_potential: Vec::new(),
    };
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let (mut order, mut start) = (Vec::new(), Vec::new());
    let first = min_tree(n, &edges, &vec![0; m], &mut order, &mut start);
    for &i in &first {
        state.load[i] = 1.0;
    }
    seen.insert(first.clone(), 0);
    state.trees.push((first, 1.0));
    assert!(m < 1 << 32, "edge indices must fit in 32 bits");

    // Costs are exp(alpha * rounded z); everything is compared relative to the
    // largest cost, so on a grid only exp(-alpha * grid * d) for integer d is needed.
    let mut table = ExpTable {
        step: alpha * grid,
        values: Vec::new(),
    };
    let mut key = vec![0i64; m];
    let mut rel = vec![0.0f64; m];
    loop {
        let mut top_z: f64 = 0.0;
        for (k, &x) in key.iter_mut().zip(&state.load) {
            let z = x * target as f64;
            top_z = top_z.max(z);
            *k = (z * scale).round() as i64;
        }
        state.max_z = top_z;
        let top_key = key.iter().copied().max().unwrap_or(0);
        let top_cost = if grid > 0.0 {
            alpha * top_key as f64 * grid
        } else {
            alpha * top_z
        };
        for ((r, &k), &x) in rel.iter_mut().zip(&key).zip(&state.load) {
            *r = if grid > 0.0 {
                table.get((top_key - k) as usize)
            } else {
                (alpha * x * target as f64 - top_cost).exp()
            };
        }
        state
            .log_potential
            .push(top_cost + rel.iter().sum::<f64>().ln());
        let tree = min_tree(n, &edges, &key, &mut order, &mut start);
        let tree_cost = top_cost + tree.iter().map(|&i| rel[i]).sum::<f64>().ln();
        let packed = top_cost
            + rel
                .iter()
                .zip(&state.load)
                .map(|(&r, &x)| r * x)
                .sum::<f64>()
                .ln();
        if tree_cost > (1.0 - eps).ln() + packed {
            if state.max_z > 1.0 + 6.0 * eps + 1e-9 {
                return Err(Error::Bound(format!(
                    "terminated with max load {:.4} above {:.4}",
                    state.max_z,
                    1.0 + 6.0 * eps
                )));
            }
            return Ok(state);
        }
        if state.iterations >= cap {
            return if state.max_z <= 1.0 + 6.0 * eps + 1e-9 {
                Ok(state)
            } else {
                Err(Error::Bound(format!(
                    "iteration cap {cap} reached with max load {:.4}",
                    state.max_z
                )))
            };
        }
        state.iterations += 1;
        for (_, w) in state.trees.iter_mut() {
            *w *= 1.0 - beta;
        }
        for x in state.load.iter_mut() {
            *x *= 1.0 - beta;
        }
        for &i in &tree {
            state.load[i] += beta;
        }
        match seen.get(&tree) {
            Some(&j) => state.trees[j].1 += beta,
            None => {
                seen.insert(tree.clone(), state.trees.len());
                state.trees.push((tree, beta));
            }
        }
    }
}

/// Scales the state so that per-edge load is at most 1: every weight times `K / (1 + 6 eps)`.
pub fn scale_packing(g: &Graph, state: &StPackingState) -> Result<TreePacking> {
    let bound = 1.0 + 6.0 * state.epsilon;
    if state.max_z > bound + 1e-9 {
        return Err(Error::Bound(format!(
            "max load {:.4} above {bound:.4}",
            state.max_z
        )));
    }
    let factor = state.target as f64 / bound;
    let edges = g.edge_list();
    let trees = state
        .trees
        .iter()
        .enumerate()
        .map(|(id, (idx, w))| {
            let es: Vec<EdgeId> = idx.iter().map(|&i| edges[i]).collect();
            Tree::from_edges(id, w * factor, &es)
        })
        .collect();
    Ok(TreePacking { trees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_structured, Structured};
    use crate::oracles::verify_spanning_packing;

    #[test]
    fn cycle_needs_one_tree() {
        let g = gen_structured(&Structured::Cycle(8)).unwrap();
        let s = st_pack_small(&g, 2, &StParams::default()).unwrap();
        assert_eq!(s.target, 1);
        assert!(s.max_z <= 1.6);
        let total: f64 = s.trees.iter().map(|t| t.1).sum();
        assert!((total - 1.0).abs() < 1e-9);
    }

    #[test]
    fn k6_packs_two_trees() {
        let g = gen_structured(&Structured::Clique(6)).unwrap();
        let s = st_pack_small(&g, 5, &StParams::default()).unwrap();
        assert!(s.iterations <= s.cap);
        let p = scale_packing(&g, &s).unwrap();
        let r = verify_spanning_packing(&g, &p);
        assert!(r.valid, "{:?}", r.failures);
        assert!(r.max_edge_load <= 1.0 + 1e-9);
        assert!((p.total_weight() - 2.0 / 1.6).abs() < 1e-9);
        assert!(s.log_potential.windows(2).all(|w| w[1] <= w[0] + 1e-9));
    }

    #[test]
    fn constants() {
        let p = StParams::default();
        assert_eq!(p.alpha_for(15), (20.0 * 300f64.ln()).ceil());
        assert_eq!(
            iteration_cap(8, 28, 10.0, 3, 0.1),
            ((8f64.ln() / 0.1) * (30.0 + 28f64.ln())).ceil() as usize + 1
        );
    }
}
