use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, UnionFind};
use crate::packing::{Tree, TreePacking};

pub const LOAD_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureReason {
    NotConnected,
    NotDominating,
    NotSpanning,
    NotSubgraph,
    NotAcyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Vertex(usize),
    Edge([usize; 2]),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TreeFailure {
    pub tree_id: usize,
    pub reason: FailureReason,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifierReport {
    pub valid: bool,
    pub total_weight: f64,
    pub max_vertex_load: f64,
    pub max_edge_load: f64,
    pub failures: Vec<TreeFailure>,
    /// Vertex or edge with the largest load, when that load exceeds 1.
    pub overloaded: Option<Witness>,
}

// Structural checks shared by both verifiers; returns the tree's vertex set.
fn check_tree(g: &Graph, tree: &Tree, failures: &mut Vec<TreeFailure>) -> BTreeSet<usize> {
    let fail = |reason, witness| TreeFailure {
        tree_id: tree.id,
        reason,
        witness,
    };
    let verts = tree.vertex_set();
    if let Some(&v) = verts.iter().find(|&&v| v >= g.n()) {
        failures.push(fail(FailureReason::NotSubgraph, Witness::Vertex(v)));
        return verts;
    }
    if let Some(e) = tree.edges.iter().find(|&&[a, b]| !g.has_edge(a, b)) {
        failures.push(fail(FailureReason::NotSubgraph, Witness::Edge(*e)));
        return verts;
    }
    let mut uf = UnionFind::new(g.n());
    for e in tree.edge_ids() {
        if !uf.union(e.u, e.v) {
            failures.push(fail(FailureReason::NotAcyclic, Witness::Edge([e.u, e.v])));
            break;
        }
    }
    if let Some(&root) = verts.iter().next() {
        if let Some(&v) = verts.iter().find(|&&v| !uf.same(root, v)) {
            failures.push(fail(FailureReason::NotConnected, Witness::Vertex(v)));
        }
    }
    verts
}

fn finish(
    g: &Graph,
    p: &TreePacking,
    failures: Vec<TreeFailure>,
    check_vertices: bool,
) -> VerifierReport {
    let (vertex_load, edge_load) = loads(g, p);
    let argmax = |xs: &[f64]| {
        xs.iter().enumerate().fold(
            (0usize, 0.0f64),
            |best, (i, &x)| if x > best.1 { (i, x) } else { best },
        )
    };
    let (vi, max_vertex_load) = argmax(&vertex_load);
    let (ei, max_edge_load) = argmax(&edge_load);
    let overloaded = if check_vertices {
        (max_vertex_load > 1.0 + LOAD_TOLERANCE).then_some(Witness::Vertex(vi))
    } else {
        (max_edge_load > 1.0 + LOAD_TOLERANCE).then(|| {
            let e = g.edges().nth(ei).unwrap();
            Witness::Edge([e.u, e.v])
        })
    };
    VerifierReport {
        valid: failures.is_empty() && overloaded.is_none(),
        total_weight: p.total_weight(),
        max_vertex_load,
        max_edge_load,
        failures,
        overloaded,
    }
}

fn loads(g: &Graph, p: &TreePacking) -> (Vec<f64>, Vec<f64>) {
    let mut vertex_load = vec![0.0; g.n()];
    let mut edge_load = vec![0.0; g.m()];
    for t in &p.trees {
        for v in t.vertex_set() {
            if v < g.n() {
                vertex_load[v] += t.weight;
            }
        }
        for e in t.edge_ids() {
            if let Some(i) = g.edge_index(e.u, e.v) {
                edge_load[i] += t.weight;
            }
        }
    }
    (vertex_load, edge_load)
}

/// Checks every tree is a dominating subtree and every vertex load is at most 1.
pub fn verify_dominating_packing(g: &Graph, p: &TreePacking) -> VerifierReport {
    let mut failures = Vec::new();
    let mut inside = vec![false; g.n()];
    for tree in &p.trees {
        let before = failures.len();
        let verts = check_tree(g, tree, &mut failures);
        if failures.len() > before && failures[before].reason == FailureReason::NotSubgraph {
            continue;
        }
        for &v in &verts {
            inside[v] = true;
        }
        let undominated =
            (0..g.n()).find(|&v| !inside[v] && !g.neighbors(v).iter().any(|&w| inside[w]));
        if let Some(v) = undominated {
            failures.push(TreeFailure {
                tree_id: tree.id,
                reason: FailureReason::NotDominating,
                witness: Witness::Vertex(v),
            });
        }
        for &v in &verts {
            inside[v] = false;
        }
    }
    finish(g, p, failures, true)
}

/// Checks every tree is a spanning tree and every edge load is at most 1.
pub fn verify_spanning_packing(g: &Graph, p: &TreePacking) -> VerifierReport {
    let mut failures = Vec::new();
    for tree in &p.trees {
        let verts = check_tree(g, tree, &mut failures);
        if let Some(v) = (0..g.n()).find(|v| !verts.contains(v)) {
            failures.push(TreeFailure {
                tree_id: tree.id,
                reason: FailureReason::NotSpanning,
                witness: Witness::Vertex(v),
            });
        }
    }
    finish(g, p, failures, false)
}
