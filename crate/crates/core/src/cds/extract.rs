use std::collections::{BTreeSet, VecDeque};

use super::assignment::ClassAssignment;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::packing::{Tree, TreePacking};

/// BFS spanning forest of `g` induced on `members` (sorted). The first tree is
/// rooted at `members[rotation % len]`, later ones at their smallest member, so
/// different classes over the same vertices get different centres.
pub(crate) fn induced_forest(g: &Graph, members: &[usize], rotation: usize) -> Vec<EdgeId> {
    let mut inside = vec![false; g.n()];
    for &x in members {
        inside[x] = true;
    }
    let mut seen = vec![false; g.n()];
    let mut edges = Vec::new();
    let mut queue = VecDeque::new();
    let first = members.get(rotation % members.len().max(1)).copied();
    for root in first.into_iter().chain(members.iter().copied()) {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if inside[y] && !seen[y] {
                    seen[y] = true;
                    edges.push(EdgeId::new(x, y));
                    queue.push_back(y);
                }
            }
        }
    }
    edges
}

fn class_tree(g: &Graph, id: usize, weight: f64, members: &[usize]) -> Tree {
    let edges = induced_forest(g, members, id);
    let mut tree = Tree::from_edges(id, weight, &edges);
    let covered: BTreeSet<usize> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
    if covered.len() != members.len() {
        tree.vertices = Some(members.to_vec());
    }
    tree
}

/// One tree per class with weight `1/(3L)`; a disconnected class yields a forest.
pub fn extract_forests(g: &Graph, ca: &ClassAssignment) -> TreePacking {
    let weight = 1.0 / (3 * ca.layers) as f64;
    let trees = ca
        .projections()
        .iter()
        .enumerate()
        .map(|(i, members)| class_tree(g, i, weight, members))
        .collect();
    TreePacking { trees }
}

/// Like `extract_forests`, but every class must be connected.
pub fn extract_trees(g: &Graph, ca: &ClassAssignment) -> Result<TreePacking> {
    if let Some(c) = (1..=ca.t as u32).find(|&c| ca.slots.components(c) != 1) {
        return Err(Error::Validation(format!(
            "class {c} has {} components",
            ca.slots.components(c)
        )));
    }
    Ok(extract_forests(g, ca))
}
