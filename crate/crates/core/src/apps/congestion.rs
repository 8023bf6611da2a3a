use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::packing::TreePacking;
use crate::rng::StreamRng;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Demands {
    Pairs(Vec<(usize, usize)>),
    /// One message per listed source, delivered to every node.
    Broadcast(Vec<usize>),
}

impl Demands {
    pub fn len(&self) -> usize {
        match self {
            Demands::Pairs(p) => p.len(),
            Demands::Broadcast(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CongestionReport {
    pub demands: usize,
    pub max_vertex: usize,
    pub mean_vertex: f64,
    pub max_edge: usize,
    pub mean_edge: f64,
    /// `demands / k` for broadcasts when `k` is known.
    pub lower_bound: Option<f64>,
    pub ratio: Option<f64>,
}

struct TreeIndex {
    adj: Vec<BTreeMap<usize, Vec<usize>>>,
    weight: Vec<f64>,
}

impl TreeIndex {
    fn new(n: usize, p: &TreePacking) -> Self {
        let mut adj = vec![BTreeMap::new(); p.trees.len()];
        for (t, tree) in p.trees.iter().enumerate() {
            for v in tree.vertex_set() {
                adj[t].insert(v, Vec::new());
            }
            for &[a, b] in &tree.edges {
                if a >= n || b >= n {
                    continue;
                }
                adj[t].get_mut(&a).unwrap().push(b);
                adj[t].get_mut(&b).unwrap().push(a);
            }
        }
        TreeIndex {
            adj,
            weight: p.trees.iter().map(|t| t.weight.max(0.0)).collect(),
        }
    }

    fn pick(&self, rng: &mut StreamRng) -> usize {
        let total: f64 = self.weight.iter().sum();
        if total <= 0.0 {
            return rng.below(self.weight.len() as u64) as usize;
        }
        let mut r = rng.unit() * total;
        for (i, &w) in self.weight.iter().enumerate() {
            if r < w {
                return i;
            }
            r -= w;
        }
        self.weight.len() - 1
    }

    fn entry(&self, g: &Graph, t: usize, v: usize) -> Option<usize> {
        if self.adj[t].contains_key(&v) {
            return Some(v);
        }
        g.neighbors(v)
            .iter()
            .copied()
            .find(|u| self.adj[t].contains_key(u))
    }

    fn tree_path(&self, t: usize, a: usize, b: usize) -> Vec<usize> {
        let mut parent = BTreeMap::from([(a, a)]);
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            if x == b {
                break;
            }
            for &y in &self.adj[t][&x] {
                if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(y) {
                    e.insert(x);
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![b];
        let mut x = b;
        while x != a {
            x = parent[&x];
            path.push(x);
        }
        path.reverse();
        path
    }
}

/// Routes every demand along a random tree of the packing (picked with
/// probability proportional to its weight) and counts per-vertex and per-edge use.
pub fn congestion_report(
    g: &Graph,
    packing: &TreePacking,
    demands: &Demands,
    seed: u64,
    k: Option<usize>,
) -> Result<CongestionReport> {
    let n = g.n();
    let mut vload = vec![0usize; n];
    let mut eload = vec![0usize; g.m()];
    if !demands.is_empty() && packing.trees.is_empty() {
        return Err(Error::Validation("no trees to route on".into()));
    }
    let idx = TreeIndex::new(n, packing);
    let mut rng = StreamRng::new(seed, "congestion", 0);
    let walk = |path: &[usize], vload: &mut [usize], eload: &mut [usize]| {
        for &v in path {
            vload[v] += 1;
        }
        for w in path.windows(2) {
            eload[g.edge_index(w[0], w[1]).expect("route uses graph edges")] += 1;
        }
    };
    match demands {
        Demands::Pairs(pairs) => {
            for &(s, d) in pairs {
                let t = idx.pick(&mut rng);
                let (Some(a), Some(b)) = (idx.entry(g, t, s), idx.entry(g, t, d)) else {
                    return Err(Error::Validation(format!(
                        "tree {t} does not dominate demand ({s}, {d})"
                    )));
                };
                let mut path = Vec::new();
                if a != s {
                    path.push(s);
                }
                path.extend(idx.tree_path(t, a, b));
                if b != d {
                    path.push(d);
                }
                walk(&path, &mut vload, &mut eload);
            }
        }
        Demands::Broadcast(sources) => {
            for &s in sources {
                let t = idx.pick(&mut rng);
                let Some(a) = idx.entry(g, t, s) else {
                    return Err(Error::Validation(format!(
                        "tree {t} does not dominate source {s}"
                    )));
                };
                if a != s {
                    walk(&[s, a], &mut vload, &mut eload);
                    vload[a] -= 1;
                }
                for (&v, nbrs) in &idx.adj[t] {
                    vload[v] += 1;
                    for &u in nbrs {
                        if u > v {
                            eload[g.edge_index(v, u).expect("tree edge in graph")] += 1;
                        }
                    }
                }
            }
        }
    }
    let mean = |xs: &[usize]| {
        if xs.is_empty() {
            0.0
        } else {
            xs.iter().sum::<usize>() as f64 / xs.len() as f64
        }
    };
    let max_vertex = vload.iter().copied().max().unwrap_or(0);
    let lower_bound = match (demands, k) {
        (Demands::Broadcast(s), Some(k)) if k > 0 => Some(s.len() as f64 / k as f64),
        _ => None,
    };
    Ok(CongestionReport {
        demands: demands.len(),
        max_vertex,
        mean_vertex: mean(&vload),
        max_edge: eload.iter().copied().max().unwrap_or(0),
        mean_edge: mean(&eload),
        lower_bound,
        ratio: lower_bound
            .filter(|&lb| lb > 0.0)
            .map(|lb| max_vertex as f64 / lb),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_structured, spanning_forest, Structured};
    use crate::packing::Tree;

    #[test]
    fn single_pair_uses_one_path() {
        let g = gen_structured(&Structured::Path(5)).unwrap();
        let p = TreePacking {
            trees: vec![Tree::from_edges(0, 1.0, &spanning_forest(&g))],
        };
        let r = congestion_report(&g, &p, &Demands::Pairs(vec![(0, 3)]), 1, None).unwrap();
        assert_eq!((r.max_vertex, r.max_edge), (1, 1));
        assert!((r.mean_vertex - 0.8).abs() < 1e-12);
    }

    #[test]
    fn empty_demands_are_zero() {
        let g = gen_structured(&Structured::Cycle(5)).unwrap();
        let r = congestion_report(
            &g,
            &TreePacking::default(),
            &Demands::Broadcast(vec![]),
            1,
            Some(2),
        )
        .unwrap();
        assert_eq!((r.max_vertex, r.max_edge, r.mean_vertex), (0, 0, 0.0));
    }
}
