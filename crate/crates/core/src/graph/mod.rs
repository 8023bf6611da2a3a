//! Undirected simple graphs with contiguous vertex ids.

mod algo;
mod generators;
mod io;
mod lower_bound;
mod union_find;

pub use algo::{
    bfs_distances, bfs_tree, components_in_subset, connected_components, diameter, eccentricity,
    is_connected, mst, spanning_forest, UNREACHED,
};
pub use generators::{gen_gnp, gen_structured, Structured};
pub use io::{load_graph, parse_edge_list, save_graph, to_edge_list};
pub use lower_bound::{gen_lower_bound_graph, LowerBoundGraph, LowerBoundLabel};
pub use union_find::UnionFind;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Canonical undirected edge, `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId {
    pub u: usize,
    pub v: usize,
}

impl EdgeId {
    pub fn new(a: usize, b: usize) -> Self {
        if a < b {
            EdgeId { u: a, v: b }
        } else {
            EdgeId { u: b, v: a }
        }
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
    // first edge index of each vertex's "upper" neighbours (v > u)
    edge_offset: Vec<usize>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_adj(vec![Vec::new(); n])
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Ids(format!("edge ({a}, {b}) outside [0, {n})")));
            }
            if a == b {
                return Err(Error::Validation(format!("self-loop at vertex {a}")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Validation(format!(
                    "duplicate edge ({}, {})",
                    v.min(w[0]),
                    v.max(w[0])
                )));
            }
        }
        Ok(Self::from_sorted_adj(adj))
    }

    /// Like `from_edges` but silently drops loops and duplicates.
    pub fn from_edges_lossy(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            if a != b && a < n && b < n {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Self::from_sorted_adj(adj)
    }

    fn from_sorted_adj(adj: Vec<Vec<usize>>) -> Self {
        let mut edge_offset = Vec::with_capacity(adj.len() + 1);
        let mut acc = 0;
        for (u, list) in adj.iter().enumerate() {
            edge_offset.push(acc);
            acc += list.len() - list.partition_point(|&v| v <= u);
        }
        edge_offset.push(acc);
        Graph {
            adj,
            m: acc,
            edge_offset,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Position of an edge in canonical order, if present.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let e = EdgeId::new(a, b);
        if e.u == e.v || e.v >= self.n() {
            return None;
        }
        let list = &self.adj[e.u];
        let start = list.partition_point(|&x| x <= e.u);
        list[start..]
            .binary_search(&e.v)
            .ok()
            .map(|pos| self.edge_offset[e.u] + pos)
    }

    /// Edges in canonical (lexicographic) order; the i-th has `edge_index == i`.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&x| x <= u);
            list[start..].iter().map(move |&v| EdgeId { u, v })
        })
    }

    pub fn edge_list(&self) -> Vec<EdgeId> {
        self.edges().collect()
    }

    /// Graph on the same vertex set keeping only the listed edges.
    pub fn spanning_subgraph(&self, keep: impl Fn(EdgeId) -> bool) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for e in self.edges().filter(|&e| keep(e)) {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Self::from_sorted_adj(adj)
    }

    /// Induced subgraph on `vertices` (relabelled 0..len in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                }
            }
            adj[i].sort_unstable();
        }
        Self::from_sorted_adj(adj)
    }

    /// Self-check of the representation invariants.
    pub fn check_invariants(&self) -> Result<()> {
        let mut total = 0;
        for (v, list) in self.adj.iter().enumerate() {
            total += list.len();
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::Validation(format!(
                        "adjacency of {v} not strictly sorted"
                    )));
                }
            }
            for &w in list {
                if w == v || w >= self.n() || self.adj[w].binary_search(&v).is_err() {
                    return Err(Error::Validation(format!("bad adjacency entry {v} -> {w}")));
                }
            }
        }
        if total != 2 * self.m {
            return Err(Error::Validation("edge count mismatch".into()));
        }
        Ok(())
    }
}
