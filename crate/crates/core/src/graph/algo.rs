use std::collections::VecDeque;

use super::{EdgeId, Graph, UnionFind};
use crate::error::{Error, Result};

pub const UNREACHED: usize = usize::MAX;

pub fn bfs_distances(g: &Graph, src: usize) -> Vec<usize> {
    bfs_tree(g, src).1
}

/// BFS parents (root has `None`) and distances from `root`.
pub fn bfs_tree(g: &Graph, root: usize) -> (Vec<Option<usize>>, Vec<usize>) {
    let n = g.n();
    let mut dist = vec![UNREACHED; n];
    let mut parent = vec![None; n];
    let mut queue = VecDeque::new();
    dist[root] = 0;
    queue.push_back(root);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == UNREACHED {
                dist[w] = dist[v] + 1;
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    (parent, dist)
}

pub fn eccentricity(g: &Graph, v: usize) -> Option<usize> {
    let d = bfs_distances(g, v);
    if d.contains(&UNREACHED) {
        None
    } else {
        d.into_iter().max()
    }
}

/// Exact diameter; `None` when disconnected.
pub fn diameter(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n <= 1 {
        return Some(0);
    }
    if !is_connected(g) {
        return None;
    }
    if g.m() * 16 > n * n {
        return Some(dense_diameter(g));
    }
    (0..n).map(|v| eccentricity(g, v).unwrap()).max()
}

// Level-synchronous BFS on bitsets, cheaper than list BFS on dense graphs.
fn dense_diameter(g: &Graph) -> usize {
    let n = g.n();
    let words = n.div_ceil(64);
    let mut rows = vec![0u64; n * words];
    for v in 0..n {
        for &w in g.neighbors(v) {
            rows[v * words + w / 64] |= 1 << (w % 64);
        }
    }
    let mut best = 0;
    let mut seen = vec![0u64; words];
    let mut frontier = vec![0u64; words];
    let mut next = vec![0u64; words];
    for src in 0..n {
        seen.iter_mut().for_each(|x| *x = 0);
        frontier.iter_mut().for_each(|x| *x = 0);
        seen[src / 64] |= 1 << (src % 64);
        frontier[src / 64] |= 1 << (src % 64);
        let mut level = 0;
        loop {
            next.iter_mut().for_each(|x| *x = 0);
            for (wi, &word) in frontier.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let v = wi * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let row = &rows[v * words..(v + 1) * words];
                    for (x, r) in next.iter_mut().zip(row) {
                        *x |= r;
                    }
                }
            }
            let mut any = false;
            for ((x, s), f) in next
                .iter_mut()
                .zip(seen.iter_mut())
                .zip(frontier.iter_mut())
            {
                *x &= !*s;
                *s |= *x;
                *f = *x;
                any |= *x != 0;
            }
            if !any {
                break;
            }
            level += 1;
        }
        best = best.max(level);
    }
    best
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || !bfs_distances(g, 0).contains(&UNREACHED)
}

/// Component labels (minimum vertex id) of the subgraph of edges accepted by `active`.
pub fn connected_components(g: &Graph, active: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let n = g.n();
    let mut label = vec![UNREACHED; n];
    let mut stack = Vec::new();
    for s in 0..n {
        if label[s] != UNREACHED {
            continue;
        }
        label[s] = s;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if label[w] == UNREACHED && active(v, w) {
                    label[w] = s;
                    stack.push(w);
                }
            }
        }
    }
    label
}

/// Components of the subgraph induced on `member`; `UNREACHED` outside it.
pub fn components_in_subset(g: &Graph, member: &[bool]) -> Vec<usize> {
    let labels = connected_components(g, |a, b| member[a] && member[b]);
    labels
        .into_iter()
        .enumerate()
        .map(|(v, l)| if member[v] { l } else { UNREACHED })
        .collect()
}

/// Minimum spanning tree; ties broken by canonical edge order.
pub fn mst(g: &Graph, cost: impl Fn(EdgeId) -> f64) -> Result<Vec<EdgeId>> {
    let mut edges: Vec<(f64, EdgeId)> = g.edges().map(|e| (cost(e), e)).collect();
    edges.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let tree = kruskal(g.n(), edges.into_iter().map(|(_, e)| e));
    if g.n() > 0 && tree.len() != g.n() - 1 {
        return Err(Error::Disconnected);
    }
    Ok(tree)
}

pub fn spanning_forest(g: &Graph) -> Vec<EdgeId> {
    kruskal(g.n(), g.edges())
}

fn kruskal(n: usize, sorted: impl Iterator<Item = EdgeId>) -> Vec<EdgeId> {
    let mut uf = UnionFind::new(n);
    let mut tree = Vec::with_capacity(n.saturating_sub(1));
    for e in sorted {
        if uf.union(e.u, e.v) {
            tree.push(e);
            if tree.len() + 1 == n {
                break;
            }
        }
    }
    tree
}
