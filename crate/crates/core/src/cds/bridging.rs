//! Per-layer structures: deactivated components, the components each type-3
//! node touches, and the bridging graph between old components and type-2 nodes.

use super::assignment::ClassAssignment;
use super::virtual_graph::{closed_neighborhood, VirtualGraph, VirtualNode};

pub(crate) const NONE: u32 = u32::MAX;

/// Distinct component roots of `class` slots in the closed neighbourhood of `x`, at most `cap`.
pub(crate) fn neighbor_roots(
    vg: &VirtualGraph,
    ca: &mut ClassAssignment,
    x: usize,
    class: u32,
    cap: usize,
    out: &mut Vec<u32>,
) {
    out.clear();
    for y in closed_neighborhood(vg.base, x) {
        if let Some(s) = ca.slots.slot_of(y, class) {
            let r = ca.slots.root(s) as u32;
            if !out.contains(&r) {
                out.push(r);
                if out.len() >= cap {
                    return;
                }
            }
        }
    }
}

/// Layer-local view used by both the greedy and the explicit bridging graph.
pub(crate) struct LayerView {
    pub layer: usize,
    /// Indexed by slot; meaningful on roots.
    pub deactivated: Vec<bool>,
    pub deactivated_count: usize,
    /// Per real node: class of its type-3 node and up to two adjacent components of that class.
    pub type3: Vec<(u32, u32, u32)>,
}

impl LayerView {
    /// Builds the view for `layer` once its type-1 and type-3 nodes carry classes.
    pub fn new(vg: &VirtualGraph, ca: &mut ClassAssignment, layer: usize) -> Self {
        let n = vg.n_real();
        let mut deactivated = vec![false; ca.slots.len()];
        let mut deactivated_count = 0;
        let mut buf = Vec::new();
        for x in 0..n {
            let c = ca.class_at(vg.index(VirtualNode {
                real: x,
                layer,
                kind: 1,
            }));
            if ca.slots.components(c) < 2 {
                continue;
            }
            neighbor_roots(vg, ca, x, c, usize::MAX, &mut buf);
            if buf.len() >= 2 {
                for &r in &buf {
                    if !deactivated[r as usize] {
                        deactivated[r as usize] = true;
                        deactivated_count += 1;
                    }
                }
            }
        }
        let mut type3 = vec![(0, NONE, NONE); n];
        for (y, entry) in type3.iter_mut().enumerate() {
            let c = ca.class_at(vg.index(VirtualNode {
                real: y,
                layer,
                kind: 3,
            }));
            entry.0 = c;
            // a class with one component can never offer a second one
            if ca.slots.components(c) < 2 {
                continue;
            }
            neighbor_roots(vg, ca, y, c, 2, &mut buf);
            entry.1 = buf.first().copied().unwrap_or(NONE);
            entry.2 = buf.get(1).copied().unwrap_or(NONE);
        }
        LayerView {
            layer,
            deactivated,
            deactivated_count,
            type3,
        }
    }
}

/// Per-class summary of the components reachable through type-3 neighbours
/// of one type-2 node: up to two distinct roots per class.
pub(crate) struct Summary {
    stamp: Vec<usize>,
    first: Vec<u32>,
    second: Vec<u32>,
    pub classes: Vec<u32>,
    owner: usize,
}

impl Summary {
    pub fn new(t: usize) -> Self {
        Summary {
            stamp: vec![usize::MAX; t + 1],
            first: vec![NONE; t + 1],
            second: vec![NONE; t + 1],
            classes: Vec::new(),
            owner: usize::MAX,
        }
    }

    pub fn build(&mut self, vg: &VirtualGraph, view: &LayerView, x: usize) {
        self.owner = x;
        self.classes.clear();
        for y in closed_neighborhood(vg.base, x) {
            let (c, r1, r2) = view.type3[y];
            if r1 == NONE {
                continue;
            }
            let ci = c as usize;
            if self.stamp[ci] != x {
                self.stamp[ci] = x;
                self.first[ci] = NONE;
                self.second[ci] = NONE;
                self.classes.push(c);
            }
            for r in [r1, r2] {
                if r == NONE || self.second[ci] != NONE {
                    continue;
                }
                if self.first[ci] == NONE {
                    self.first[ci] = r;
                } else if self.first[ci] != r {
                    self.second[ci] = r;
                }
            }
        }
        self.classes.sort_unstable();
    }

    /// A class-`c` component other than `root` reachable through a type-3 neighbour.
    pub fn partner(&self, c: u32, root: u32) -> Option<u32> {
        let ci = c as usize;
        if self.stamp[ci] != self.owner {
            return None;
        }
        [self.first[ci], self.second[ci]]
            .into_iter()
            .find(|&r| r != NONE && r != root)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BridgeComponent {
    /// Root slot of the component.
    pub root: usize,
    pub class: u32,
    pub active: bool,
}

/// Bipartite graph between old components and the type-2 nodes of one layer.
#[derive(Clone, Debug, PartialEq)]
pub struct BridgingGraph {
    pub layer: usize,
    pub components: Vec<BridgeComponent>,
    /// Per real node (its type-2 node): adjacent component indices in scan order.
    pub adjacency: Vec<Vec<usize>>,
}

impl BridgingGraph {
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    pub fn deactivated(&self) -> usize {
        self.components.iter().filter(|c| !c.active).count()
    }
}

pub(crate) fn bridging_from_view(
    vg: &VirtualGraph,
    ca: &mut ClassAssignment,
    view: &LayerView,
) -> BridgingGraph {
    let n = vg.n_real();
    let mut index = vec![usize::MAX; ca.slots.len()];
    let mut components = Vec::new();
    for s in 0..ca.slots.len() {
        let r = ca.slots.root(s);
        if index[r] == usize::MAX {
            index[r] = components.len();
            components.push(BridgeComponent {
                root: r,
                class: ca.slots.slot_class(r),
                active: !view.deactivated[r],
            });
        }
    }
    let mut summary = Summary::new(ca.t);
    let mut adjacency = vec![Vec::new(); n];
    for (x, adj) in adjacency.iter_mut().enumerate() {
        summary.build(vg, view, x);
        if summary.classes.is_empty() {
            continue;
        }
        for y in closed_neighborhood(vg.base, x) {
            for &c in &summary.classes {
                let Some(s) = ca.slots.slot_of(y, c) else {
                    continue;
                };
                let r = ca.slots.root(s);
                if view.deactivated[r] || summary.partner(c, r as u32).is_none() {
                    continue;
                }
                if !adj.contains(&index[r]) {
                    adj.push(index[r]);
                }
            }
        }
    }
    BridgingGraph {
        layer: view.layer,
        components,
        adjacency,
    }
}

/// Bridging graph for `layer`, given that its type-1 and type-3 nodes already have classes.
pub fn build_bridging_graph(
    vg: &VirtualGraph,
    ca: &mut ClassAssignment,
    layer: usize,
) -> BridgingGraph {
    let view = LayerView::new(vg, ca, layer);
    bridging_from_view(vg, ca, &view)
}
