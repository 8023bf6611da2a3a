//! The two-party lower-bound family: a weighted graph whose heavy nodes are
//! expanded into cliques and whose edges become complete bipartite graphs.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LowerBoundLabel {
    /// Member of the clique standing for path `p`, position `q` (1-based).
    Heavy {
        p: usize,
        q: usize,
    },
    A,
    B,
    U(usize),
    V(usize),
}

#[derive(Clone, Debug)]
pub struct LowerBoundGraph {
    pub graph: Graph,
    pub labels: Vec<LowerBoundLabel>,
    pub a: usize,
    pub b: usize,
    pub u: BTreeMap<usize, usize>,
    pub v: BTreeMap<usize, usize>,
    pub h: usize,
    pub ell: usize,
    pub w: usize,
}

impl LowerBoundGraph {
    /// Vertices of the clique at `(p, q)`.
    pub fn clique(&self, p: usize, q: usize) -> std::ops::Range<usize> {
        let start = (p * 2 * self.ell + (q - 1)) * self.w;
        start..start + self.w
    }

    /// All vertices of path `p`.
    pub fn path_vertices(&self, p: usize) -> Vec<usize> {
        (1..=2 * self.ell).flat_map(|q| self.clique(p, q)).collect()
    }
}

pub fn gen_lower_bound_graph(
    h: usize,
    ell: usize,
    w: usize,
    xs: &BTreeSet<usize>,
    ys: &BTreeSet<usize>,
) -> Result<LowerBoundGraph> {
    if h < 2 || ell < 1 || w < 2 {
        return Err(Error::InvalidParam("need h >= 2, ell >= 1, w > 1".into()));
    }
    if let Some(bad) = xs.iter().chain(ys).find(|&&x| x == 0 || x > h) {
        return Err(Error::InvalidParam(format!(
            "set element {bad} outside [1, {h}]"
        )));
    }
    if xs.intersection(ys).count() > 1 {
        return Err(Error::InvalidParam("|X ∩ Y| must be at most 1".into()));
    }

    // weighted node ids: heavy (p, q) first, then a, b, u_x, v_y
    let len = 2 * ell;
    let heavy = |p: usize, q: usize| p * len + (q - 1);
    let n_heavy = (h + 1) * len;
    let node_a = n_heavy;
    let node_b = n_heavy + 1;
    let mut next = n_heavy + 2;
    let u_node: BTreeMap<usize, usize> = xs
        .iter()
        .map(|&x| {
            next += 1;
            (x, next - 1)
        })
        .collect();
    let v_node: BTreeMap<usize, usize> = ys
        .iter()
        .map(|&y| {
            next += 1;
            (y, next - 1)
        })
        .collect();
    let n_weighted = next;

    let mut h_edges = Vec::new();
    for p in 0..=h {
        for q in 1..len {
            h_edges.push((heavy(p, q), heavy(p, q + 1)));
        }
    }
    for x in 1..=h {
        match u_node.get(&x) {
            Some(&u) => {
                h_edges.push((u, heavy(0, 1)));
                h_edges.push((u, heavy(x, 1)));
            }
            None => h_edges.push((heavy(0, 1), heavy(x, 1))),
        }
        match v_node.get(&x) {
            Some(&v) => {
                h_edges.push((v, heavy(0, len)));
                h_edges.push((v, heavy(x, len)));
            }
            None => h_edges.push((heavy(0, len), heavy(x, len))),
        }
    }
    h_edges.push((node_a, node_b));
    for &u in u_node.values() {
        h_edges.push((node_a, u));
    }
    for &v in v_node.values() {
        h_edges.push((node_b, v));
    }
    for p in 0..=h {
        for q in 1..=len {
            h_edges.push((if q <= ell { node_a } else { node_b }, heavy(p, q)));
        }
    }

    // expand: heavy nodes become w-cliques
    let mut first = Vec::with_capacity(n_weighted + 1);
    let mut acc = 0;
    for node in 0..n_weighted {
        first.push(acc);
        acc += if node < n_heavy { w } else { 1 };
    }
    first.push(acc);
    let members = |node: usize| first[node]..first[node + 1];

    let mut labels = Vec::with_capacity(acc);
    for p in 0..=h {
        for q in 1..=len {
            labels.extend(std::iter::repeat(LowerBoundLabel::Heavy { p, q }).take(w));
        }
    }
    labels.push(LowerBoundLabel::A);
    labels.push(LowerBoundLabel::B);
    labels.extend(xs.iter().map(|&x| LowerBoundLabel::U(x)));
    labels.extend(ys.iter().map(|&y| LowerBoundLabel::V(y)));

    let mut edges = Vec::new();
    for node in 0..n_heavy {
        let r = members(node);
        for a in r.clone() {
            for b in a + 1..r.end {
                edges.push((a, b));
            }
        }
    }
    for &(x, y) in &h_edges {
        for a in members(x) {
            for b in members(y) {
                edges.push((a, b));
            }
        }
    }
    let graph = Graph::from_edges(acc, &edges)?;
    Ok(LowerBoundGraph {
        graph,
        labels,
        a: first[node_a],
        b: first[node_b],
        u: u_node.iter().map(|(&x, &node)| (x, first[node])).collect(),
        v: v_node.iter().map(|(&y, &node)| (y, first[node])).collect(),
        h,
        ell,
        w,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{components_in_subset, diameter};

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn size_and_diameter() {
        let lb = gen_lower_bound_graph(4, 2, 6, &set(&[2, 3]), &set(&[1, 3])).unwrap();
        assert_eq!(lb.graph.n(), 5 * 4 * 6 + 2 + 4);
        assert!(diameter(&lb.graph).unwrap() <= 3);
        assert_eq!(lb.labels.len(), lb.graph.n());
        assert_eq!(lb.labels[lb.a], LowerBoundLabel::A);
        assert_eq!(lb.labels[lb.u[&3]], LowerBoundLabel::U(3));
    }

    #[test]
    fn four_vertex_cut_isolates_shared_path() {
        let lb = gen_lower_bound_graph(4, 2, 6, &set(&[2, 3]), &set(&[1, 3])).unwrap();
        let mut member = vec![true; lb.graph.n()];
        for v in [lb.a, lb.b, lb.u[&3], lb.v[&3]] {
            member[v] = false;
        }
        let labels = components_in_subset(&lb.graph, &member);
        let path = lb.path_vertices(3);
        let outside = lb.clique(0, 1).start;
        assert!(path.iter().all(|&v| labels[v] == labels[path[0]]));
        assert_ne!(labels[path[0]], labels[outside]);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(gen_lower_bound_graph(4, 2, 6, &set(&[1, 2]), &set(&[1, 2])).is_err());
        assert!(gen_lower_bound_graph(1, 2, 6, &set(&[]), &set(&[])).is_err());
        assert!(gen_lower_bound_graph(4, 2, 6, &set(&[5]), &set(&[])).is_err());
    }
}
