use serde::{Deserialize, Serialize};

use super::slots::SlotTable;
use super::virtual_graph::{VirtualGraph, VirtualNode};
use crate::error::{Error, Result};
use crate::rng::StreamRng;
use crate::sim::ceil_log2;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CdsParams {
    pub seed: u64,
    /// Classes per unit of the connectivity guess.
    pub t_factor: f64,
    /// Layers are `2·max(4, ⌈c_layers·log₂ n⌉)`.
    pub c_layers: f64,
    pub layers: Option<usize>,
    pub classes: Option<usize>,
    /// Use a single class when the guess is below `4⌈log₂ n⌉`.
    pub small_k_fallback: bool,
}

impl Default for CdsParams {
    fn default() -> Self {
        CdsParams {
            seed: 0,
            t_factor: 0.25,
            c_layers: 4.0,
            layers: None,
            classes: None,
            small_k_fallback: true,
        }
    }
}

impl CdsParams {
    pub fn with_seed(seed: u64) -> Self {
        CdsParams {
            seed,
            ..Self::default()
        }
    }

    /// `(t, L)` for a graph on `n` vertices.
    pub fn resolve(&self, n: usize, k_guess: usize) -> Result<(usize, usize)> {
        if k_guess < 1 {
            return Err(Error::InvalidParam("k_guess must be at least 1".into()));
        }
        let log_n = (n.max(1) as f64).log2();
        let layers = self
            .layers
            .unwrap_or_else(|| 2 * 4usize.max((self.c_layers * log_n).ceil() as usize));
        if layers < 2 || layers % 2 != 0 {
            return Err(Error::InvalidParam(format!(
                "layer count {layers} must be even and >= 2"
            )));
        }
        let t = match self.classes {
            Some(0) => return Err(Error::InvalidParam("class count must be positive".into())),
            Some(t) => t,
            None if self.small_k_fallback && k_guess < 4 * ceil_log2(n) => 1,
            None => 1usize.max((k_guess as f64 * self.t_factor).floor() as usize),
        };
        Ok((t, layers))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LayerLog {
    /// The layer that was assigned.
    pub layer: usize,
    pub deactivated: usize,
    pub bridging_edges: usize,
    pub matched: usize,
    pub random_type2: usize,
    pub excess_after: usize,
}

/// Record of one matched type-2 node: the component it joined and a
/// different component of the same class it is connected to through a type-3 node.
#[derive(Clone, Debug, PartialEq)]
pub struct MatchRecord {
    pub real: usize,
    pub class: u32,
    pub component: usize,
    pub partner: usize,
}

#[derive(Clone, Debug)]
pub struct ClassAssignment {
    pub n: usize,
    pub layers: usize,
    pub t: usize,
    class: Vec<u32>,
    pub assigned_layers: usize,
    pub slots: SlotTable,
    /// Excess component count after layer `L/2`, `L/2 + 1`, ..., `L`.
    pub excess_history: Vec<usize>,
    pub dominated_after_base: bool,
    pub layer_log: Vec<LayerLog>,
    pub last_matches: Vec<MatchRecord>,
}

pub(crate) fn class_draw(seed: u64, index: usize, t: usize) -> u32 {
    1 + StreamRng::new(seed, "class", index as u64).below(t as u64) as u32
}

impl ClassAssignment {
    pub fn class_of(&self, vg: &VirtualGraph, v: VirtualNode) -> Option<u32> {
        match self.class[vg.index(v)] {
            0 => None,
            c => Some(c),
        }
    }

    pub(crate) fn class_at(&self, index: usize) -> u32 {
        self.class[index]
    }

    pub(crate) fn set_class(&mut self, index: usize, class: u32) {
        self.class[index] = class;
    }

    /// Number of virtual nodes per class (index 0 counts unassigned ones).
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.t + 1];
        for &c in &self.class {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// Distinct classes hosted by each real node.
    pub fn membership_counts(&self) -> Vec<usize> {
        (0..self.n).map(|x| self.slots.slots_at(x).len()).collect()
    }

    /// Real-node projection of every class.
    pub fn projections(&self) -> Vec<Vec<usize>> {
        (1..=self.t as u32).map(|c| self.slots.members(c)).collect()
    }

    /// Registers every virtual node of `layer` (all kinds assigned) in the slot table.
    pub(crate) fn commit_layer(&mut self, vg: &VirtualGraph, layer: usize) {
        for kind in 1..=3 {
            for x in 0..self.n {
                let c = self.class[vg.index(VirtualNode {
                    real: x,
                    layer,
                    kind,
                })];
                debug_assert!(c != 0);
                self.slots.add(vg.base, x, c);
            }
        }
        self.assigned_layers = layer;
    }
}

/// Random classes for every virtual node of layers `1..=L/2`.
pub fn assign_base_layers(vg: &VirtualGraph, t: usize, seed: u64) -> ClassAssignment {
    assert!(t >= 1);
    let n = vg.n_real();
    let mut ca = ClassAssignment {
        n,
        layers: vg.layers,
        t,
        class: vec![0; vg.len()],
        assigned_layers: 0,
        slots: SlotTable::new(n, t),
        excess_history: Vec::new(),
        dominated_after_base: false,
        layer_log: Vec::new(),
        last_matches: Vec::new(),
    };
    for layer in 1..=vg.layers / 2 {
        for kind in 1..=3 {
            for x in 0..n {
                let i = vg.index(VirtualNode {
                    real: x,
                    layer,
                    kind,
                });
                ca.class[i] = class_draw(seed, i, t);
            }
        }
        ca.commit_layer(vg, layer);
    }
    ca.dominated_after_base = ca.slots.dominates_all(vg.base);
    ca.excess_history.push(ca.slots.excess_components());
    ca
}
