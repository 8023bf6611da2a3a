use crate::graph::Graph;
use crate::sim::ceil_log2;

/// A virtual node: copy `(layer, kind)` of a real node; layers and kinds are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VirtualNode {
    pub real: usize,
    pub layer: usize,
    pub kind: usize,
}

/// `3L` copies of every real node; copies are adjacent iff they share a real
/// node or their real nodes are adjacent.
#[derive(Clone, Copy, Debug)]
pub struct VirtualGraph<'g> {
    pub base: &'g Graph,
    pub layers: usize,
}

impl<'g> VirtualGraph<'g> {
    pub fn new(base: &'g Graph, layers: usize) -> Self {
        assert!(
            layers >= 2 && layers % 2 == 0,
            "layer count must be even and at least 2"
        );
        VirtualGraph { base, layers }
    }

    pub fn n_real(&self) -> usize {
        self.base.n()
    }

    pub fn copies(&self) -> usize {
        3 * self.layers
    }

    pub fn len(&self) -> usize {
        self.copies() * self.base.n()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Storage index, grouped by (layer, kind) so each group is contiguous.
    pub fn index(&self, v: VirtualNode) -> usize {
        ((v.layer - 1) * 3 + (v.kind - 1)) * self.base.n() + v.real
    }

    pub fn node(&self, index: usize) -> VirtualNode {
        let n = self.base.n();
        let group = index / n;
        VirtualNode {
            real: index % n,
            layer: group / 3 + 1,
            kind: group % 3 + 1,
        }
    }

    /// Identifier ordered by `(real, layer, kind)`; used as component ids.
    pub fn ident(&self, v: VirtualNode) -> u64 {
        (v.real * self.copies() + (v.layer - 1) * 3 + (v.kind - 1)) as u64
    }

    pub fn ident_bits(&self) -> usize {
        ceil_log2(self.len())
    }

    pub fn adjacent(&self, a: VirtualNode, b: VirtualNode) -> bool {
        a != b && (a.real == b.real || self.base.has_edge(a.real, b.real))
    }

    pub fn edge_count(&self) -> usize {
        let c = self.copies();
        c * (c - 1) / 2 * self.base.n() + c * c * self.base.m()
    }

    pub fn neighbors(&self, v: VirtualNode) -> Vec<VirtualNode> {
        let mut out = Vec::new();
        let reals = std::iter::once(v.real).chain(self.base.neighbors(v.real).iter().copied());
        for real in reals {
            for layer in 1..=self.layers {
                for kind in 1..=3 {
                    let w = VirtualNode { real, layer, kind };
                    if w != v {
                        out.push(w);
                    }
                }
            }
        }
        out
    }

    /// Explicit virtual graph; only for small instances.
    pub fn materialize(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.edge_count());
        for a in 0..self.len() {
            let va = self.node(a);
            for vb in self.neighbors(va) {
                let b = self.index(vb);
                if a < b {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edges(self.len(), &edges).expect("virtual edges are canonical")
    }
}

/// Closed neighbourhood of `x` in increasing order.
pub(crate) fn closed_neighborhood(g: &Graph, x: usize) -> impl Iterator<Item = usize> + '_ {
    let nb = g.neighbors(x);
    let split = nb.partition_point(|&y| y < x);
    nb[..split]
        .iter()
        .copied()
        .chain(std::iter::once(x))
        .chain(nb[split..].iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_structured, Structured};

    #[test]
    fn k2_is_complete() {
        let g = gen_structured(&Structured::Clique(2)).unwrap();
        let vg = VirtualGraph::new(&g, 2);
        assert_eq!(vg.len(), 12);
        let h = vg.materialize();
        assert_eq!(h.m(), 66);
        assert_eq!(vg.edge_count(), 66);
    }

    #[test]
    fn path_endpoints_not_adjacent() {
        let g = gen_structured(&Structured::Path(3)).unwrap();
        let vg = VirtualGraph::new(&g, 2);
        let a = VirtualNode {
            real: 0,
            layer: 1,
            kind: 1,
        };
        let b = VirtualNode {
            real: 2,
            layer: 2,
            kind: 3,
        };
        assert!(!vg.adjacent(a, b));
        assert!(vg.adjacent(
            a,
            VirtualNode {
                real: 1,
                layer: 2,
                kind: 2
            }
        ));
    }

    #[test]
    fn index_round_trip() {
        let g = gen_structured(&Structured::Cycle(5)).unwrap();
        let vg = VirtualGraph::new(&g, 4);
        for i in 0..vg.len() {
            assert_eq!(vg.index(vg.node(i)), i);
        }
        let order: Vec<u64> = (0..vg.len()).map(|i| vg.ident(vg.node(i))).collect();
        let mut sorted = order.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), vg.len());
    }

    #[test]
    fn closed_neighborhood_sorted() {
        let g = gen_structured(&Structured::Star(4)).unwrap();
        assert_eq!(closed_neighborhood(&g, 2).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(
            closed_neighborhood(&g, 0).collect::<Vec<_>>(),
            vec![0, 1, 2, 3]
        );
    }
}
