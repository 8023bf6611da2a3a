//! Weighted tree collections shared by the packers, the verifiers and the CLI.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::EdgeId;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tree {
    pub id: usize,
    pub weight: f64,
    pub edges: Vec<[usize; 2]>,
    /// Needed only for trees whose vertex set is not covered by `edges` (a lone vertex).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<usize>>,
}

impl Tree {
    pub fn from_edges(id: usize, weight: f64, edges: &[EdgeId]) -> Self {
        Tree {
            id,
            weight,
            edges: edges.iter().map(|e| [e.u, e.v]).collect(),
            vertices: None,
        }
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = self.edges.iter().flatten().copied().collect();
        if let Some(vs) = &self.vertices {
            set.extend(vs.iter().copied());
        }
        set
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|&[a, b]| EdgeId::new(a, b))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TreePacking {
    pub trees: Vec<Tree>,
}

impl TreePacking {
    pub fn total_weight(&self) -> f64 {
        self.trees.iter().map(|t| t.weight).sum()
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }
}
