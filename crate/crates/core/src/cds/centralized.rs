use serde::{Deserialize, Serialize};

use super::assignment::{
    assign_base_layers, class_draw, CdsParams, ClassAssignment, LayerLog, MatchRecord,
};
use super::bridging::{LayerView, Summary};
use super::extract::extract_forests;
use super::virtual_graph::{closed_neighborhood, VirtualGraph, VirtualNode};
use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph};
use crate::packing::TreePacking;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CdsPacking {
    pub t: usize,
    #[serde(rename = "L")]
    pub layers: usize,
    /// Real nodes hosting each class.
    pub classes: Vec<Vec<usize>>,
    pub trees: TreePacking,
    pub m_history: Vec<usize>,
    pub k_guess: usize,
    pub seed: u64,
    pub max_membership: usize,
    pub dominated_after_base: bool,
    pub all_connected: bool,
}

impl CdsPacking {
    pub fn from_assignment(g: &Graph, ca: &ClassAssignment, k_guess: usize, seed: u64) -> Self {
        CdsPacking {
            t: ca.t,
            layers: ca.layers,
            classes: ca.projections(),
            trees: extract_forests(g, ca),
            m_history: ca.excess_history.clone(),
            k_guess,
            seed,
            max_membership: ca.membership_counts().into_iter().max().unwrap_or(0),
            dominated_after_base: ca.dominated_after_base,
            all_connected: (1..=ca.t as u32).all(|c| ca.slots.components(c) == 1),
        }
    }
}

/// Random classes for the type-1 and type-3 nodes of `layer`.
pub fn assign_random_kinds(vg: &VirtualGraph, ca: &mut ClassAssignment, layer: usize, seed: u64) {
    for kind in [1, 3] {
        for x in 0..vg.n_real() {
            let i = vg.index(VirtualNode {
                real: x,
                layer,
                kind,
            });
            ca.set_class(i, class_draw(seed, i, ca.t));
        }
    }
}

/// Assigns layer `layer + 1`, where `layer` is the last assigned layer,
/// matching type-2 nodes greedily in real-id and neighbour order.
pub fn process_layer_centralized(
    vg: &VirtualGraph,
    ca: &mut ClassAssignment,
    layer: usize,
    seed: u64,
) -> Result<()> {
    if layer != ca.assigned_layers || layer < vg.layers / 2 || layer >= vg.layers {
        return Err(Error::InvalidParam(format!(
            "cannot process layer {layer} (assigned: {}, L: {})",
            ca.assigned_layers, vg.layers
        )));
    }
    let next = layer + 1;
    assign_random_kinds(vg, ca, next, seed);
    let view = LayerView::new(vg, ca, next);
    let mut matched = vec![false; ca.slots.len()];
    let mut summary = Summary::new(ca.t);
    let mut matches = Vec::new();
    let nothing_to_merge = ca.slots.excess_components() == 0;
    let mut random_type2 = 0;
    for x in 0..vg.n_real() {
        let index = vg.index(VirtualNode {
            real: x,
            layer: next,
            kind: 2,
        });
        let mut chosen = None;
        if !nothing_to_merge {
            summary.build(vg, &view, x);
            'scan: for y in closed_neighborhood(vg.base, x) {
                for &c in &summary.classes {
                    let Some(s) = ca.slots.slot_of(y, c) else {
                        continue;
                    };
                    let r = ca.slots.root(s);
                    if matched[r] || view.deactivated[r] {
                        continue;
                    }
                    if let Some(p) = summary.partner(c, r as u32) {
                        chosen = Some((c, r, p as usize));
                        break 'scan;
                    }
                }
            }
        }
        match chosen {
            Some((c, r, partner)) => {
                matched[r] = true;
                ca.set_class(index, c);
                matches.push(MatchRecord {
                    real: x,
                    class: c,
                    component: r,
                    partner,
                });
            }
            None => {
                random_type2 += 1;
                ca.set_class(index, class_draw(seed, index, ca.t));
            }
        }
    }
    ca.commit_layer(vg, next);
    let excess = ca.slots.excess_components();
    ca.excess_history.push(excess);
    ca.layer_log.push(LayerLog {
        layer: next,
        deactivated: view.deactivated_count,
        bridging_edges: 0,
        matched: matches.len(),
        random_type2,
        excess_after: excess,
    });
    ca.last_matches = matches;
    Ok(())
}

/// Full centralized pipeline up to (but excluding) tree extraction.
pub fn run_centralized_assignment(
    g: &Graph,
    t: usize,
    layers: usize,
    seed: u64,
) -> ClassAssignment {
    let vg = VirtualGraph::new(g, layers);
    let mut ca = assign_base_layers(&vg, t, seed);
    for layer in layers / 2..layers {
        process_layer_centralized(&vg, &mut ca, layer, seed).expect("layers processed in order");
    }
    ca
}

pub fn cds_pack_centralized_with_assignment(
    g: &Graph,
    k_guess: usize,
    params: &CdsParams,
) -> Result<(CdsPacking, ClassAssignment)> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let (t, layers) = params.resolve(g.n(), k_guess)?;
    let ca = run_centralized_assignment(g, t, layers, params.seed);
    Ok((
        CdsPacking::from_assignment(g, &ca, k_guess, params.seed),
        ca,
    ))
}

/// Fractional dominating tree packing with `t` classes over `3L` virtual copies per node.
pub fn cds_pack_centralized(g: &Graph, k_guess: usize, params: &CdsParams) -> Result<CdsPacking> {
    cds_pack_centralized_with_assignment(g, k_guess, params).map(|(p, _)| p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_gnp, gen_structured, Structured};
    use crate::oracles::verify_dominating_packing;

    #[test]
    fn clique_gets_connected_classes() {
        let g = gen_structured(&Structured::Clique(64)).unwrap();
        let p = cds_pack_centralized(&g, 63, &CdsParams::with_seed(3)).unwrap();
        assert_eq!((p.t, p.layers), (15, 48));
        assert!(p.all_connected);
        assert_eq!(*p.m_history.last().unwrap(), 0);
        let r = verify_dominating_packing(&g, &p.trees);
        assert!(r.valid, "{:?}", r.failures);
        assert!(r.max_vertex_load <= 1.0 + 1e-9);
    }

    #[test]
    fn excess_never_grows() {
        let g = gen_gnp(150, 0.2, 9);
        let p = cds_pack_centralized(&g, 20, &CdsParams::with_seed(1)).unwrap();
        assert!(
            p.m_history.windows(2).all(|w| w[1] <= w[0]),
            "{:?}",
            p.m_history
        );
        assert!(verify_dominating_packing(&g, &p.trees).max_vertex_load <= 1.0 + 1e-9);
    }

    #[test]
    fn rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            cds_pack_centralized(&g, 1, &CdsParams::default()),
            Err(Error::Disconnected)
        ));
    }
}
