use super::UnitFlow;
use crate::graph::{diameter, is_connected, Graph};

fn split_network(g: &Graph) -> UnitFlow {
    let n = g.n();
    let big = n as u32 + 1;
    let mut f = UnitFlow::new(2 * n);
    for v in 0..n {
        f.add_arc(2 * v, 2 * v + 1, 1, 0);
    }
    for e in g.edges() {
        f.add_arc(2 * e.u + 1, 2 * e.v, big, 0);
        f.add_arc(2 * e.v + 1, 2 * e.u, big, 0);
    }
    f
}

/// Number of internally vertex-disjoint s-t paths, for non-adjacent `s`, `t`.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    assert!(
        s != t && !g.has_edge(s, t),
        "endpoints must be distinct and non-adjacent"
    );
    split_network(g).max_flow(2 * s + 1, 2 * t, u32::MAX) as usize
}

/// Exact vertex connectivity (0 if disconnected, n-1 for a clique).
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n < 2 || !is_connected(g) {
        return 0;
    }
    let mut k = g.min_degree();
    if g.m() == n * (n - 1) / 2 {
        return n - 1;
    }
    let mut net = split_network(g);
    let mut i = 0;
    // some vertex among the first k+1 lies outside any minimum cut
    while i <= k && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                let f = net.max_flow(2 * i + 1, 2 * j, k as u32) as usize;
                k = k.min(f);
            }
        }
        i += 1;
    }
    k
}

/// Edge connectivity by unit-capacity max-flow from vertex 0 to every other vertex.
pub fn edge_connectivity_flow(g: &Graph) -> usize {
    let n = g.n();
    if n < 2 || !is_connected(g) {
        return 0;
    }
    let mut net = UnitFlow::new(n);
    for e in g.edges() {
        net.add_arc(e.u, e.v, 1, 1);
    }
    let mut lambda = g.min_degree();
    for t in 1..n {
        lambda = lambda.min(net.max_flow(0, t, lambda as u32) as usize);
    }
    lambda
}

/// Exact edge connectivity. Dense graphs of diameter at most two have
/// edge connectivity equal to their minimum degree, which skips the flows.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n < 2 || !is_connected(g) {
        return 0;
    }
    if g.m() * 16 > n * n && diameter(g).is_some_and(|d| d <= 2) {
        return g.min_degree();
    }
    edge_connectivity_flow(g)
}
