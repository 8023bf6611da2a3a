//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use connpack::cds::{ClassAssignment, VirtualGraph, VirtualNode};
use connpack::Graph;

fn connected_without(g: &Graph, removed: u64) -> bool {
    let n = g.n();
    let Some(start) = (0..n).find(|&v| removed >> v & 1 == 0) else {
        return true;
    };
    let mut seen = removed | 1 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if seen >> u & 1 == 0 {
                seen |= 1 << u;
                stack.push(u);
            }
        }
    }
    seen.count_ones() as usize == n
}

/// Smallest vertex set whose removal disconnects `g`; `n - 1` for cliques.
pub fn brute_vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16);
    let mut best = n.saturating_sub(1);
    for mask in 0u64..1 << n {
        let size = mask.count_ones() as usize;
        if size < best && n - size >= 2 && !connected_without(g, mask) {
            best = size;
        }
    }
    best
}

/// Minimum number of edges crossing any bipartition.
pub fn brute_edge_connectivity(g: &Graph) -> usize {
    let n = g.n();
    assert!((2..=16).contains(&n));
    let mut best = usize::MAX;
    // vertex n-1 always on the right side
    for mask in 1u64..1 << (n - 1) {
        let cut = g
            .edges()
            .filter(|e| (mask >> e.u & 1) != (mask >> e.v & 1))
            .count();
        best = best.min(cut);
    }
    best
}

/// Class-wise connected components of the virtual nodes of layers `1..=upto`,
/// computed on the explicit virtual graph. Unlabelled entries are `usize::MAX`.
pub fn virtual_components(vg: &VirtualGraph, ca: &ClassAssignment, upto: usize) -> Vec<usize> {
    let mut label = vec![usize::MAX; vg.len()];
    let class = |v: VirtualNode| ca.class_of(vg, v);
    let mut next = 0;
    for i in 0..vg.len() {
        let v = vg.node(i);
        if v.layer > upto || label[i] != usize::MAX || class(v).is_none() {
            continue;
        }
        let c = class(v);
        label[i] = next;
        let mut queue = VecDeque::from([v]);
        while let Some(a) = queue.pop_front() {
            for b in vg.neighbors(a) {
                let j = vg.index(b);
                if b.layer <= upto && label[j] == usize::MAX && class(b) == c {
                    label[j] = next;
                    queue.push_back(b);
                }
            }
        }
        next += 1;
    }
    label
}

/// Bridging edges of `layer` derived directly from the three conditions, as
/// `(real node of the type-2 node, (real host, class) of one slot in the component)` pairs
/// normalised to component labels of [`virtual_components`].
pub fn brute_bridging_edges(
    vg: &VirtualGraph,
    ca: &ClassAssignment,
    layer: usize,
) -> BTreeSet<(usize, usize)> {
    let g = vg.base;
    let old = virtual_components(vg, ca, layer - 1);
    let closed = |x: usize| -> Vec<usize> {
        let mut v = vec![x];
        v.extend_from_slice(g.neighbors(x));
        v
    };
    // components of `class` that touch the closed neighbourhood of real node x
    let touching = |x: usize, class: u32| -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for y in closed(x) {
            for l in 1..layer {
                for kind in 1..=3 {
                    let v = VirtualNode {
                        real: y,
                        layer: l,
                        kind,
                    };
                    if ca.class_of(vg, v) == Some(class) {
                        out.insert(old[vg.index(v)]);
                    }
                }
            }
        }
        out
    };
    let new_class = |x: usize, kind: usize| {
        ca.class_of(
            vg,
            VirtualNode {
                real: x,
                layer,
                kind,
            },
        )
        .expect("new layer assigned")
    };
    // condition (b): components next to a type-1 node of their class that also sees another one
    let mut bridged = BTreeSet::new();
    for u in 0..g.n() {
        let comps = touching(u, new_class(u, 1));
        if comps.len() >= 2 {
            bridged.extend(comps);
        }
    }
    let mut edges = BTreeSet::new();
    for x in 0..g.n() {
        for w in closed(x) {
            let class = new_class(w, 3);
            let via_w = touching(w, class);
            // condition (a)
            for comp in touching(x, class) {
                if bridged.contains(&comp) {
                    continue;
                }
                // condition (c): w reaches a different component of the class
                if via_w.iter().any(|&other| other != comp) {
                    edges.insert((x, comp));
                }
            }
        }
    }
    edges
}
