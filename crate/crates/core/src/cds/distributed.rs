//! The packing pipeline as message-level phases over the simulator. Every
//! phase input at a real node is derived from that node's own state and
//! what it received; the slot table is only read for local class lists
//! and by the observer that records excess components.

use std::collections::BTreeSet;

use super::assignment::{
    assign_base_layers, class_draw, CdsParams, ClassAssignment, LayerLog, MatchRecord,
};
use super::centralized::{assign_random_kinds, CdsPacking};
use super::luby::proposal_value;
use super::virtual_graph::{VirtualGraph, VirtualNode};
use crate::error::{Error, Result};
use crate::graph::{diameter, is_connected, Graph};
use crate::sim::{
    build_bfs_tree, ceil_log2, exchange, slot_flood, Extremum, SimConfig, SlotValue, Transcript,
};

pub struct DistributedOutcome {
    pub packing: CdsPacking,
    pub transcript: Transcript,
    pub assignment: ClassAssignment,
    /// Matching stages used per processed layer.
    pub stages: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Report {
    One(u64),
    Connector,
}

struct Widths {
    class: usize,
    ident: usize,
    id: usize,
    value: usize,
}

// Smallest identifier per class among the virtual nodes of `x` in layers `1..=upto`.
fn local_min_idents(
    vg: &VirtualGraph,
    ca: &ClassAssignment,
    x: usize,
    upto: usize,
) -> Vec<(u32, SlotValue)> {
    let mut out: Vec<(u32, SlotValue)> = ca
        .slots
        .slots_at(x)
        .iter()
        .map(|&(c, _)| (c, None))
        .collect();
    for layer in 1..=upto {
        for kind in 1..=3 {
            let v = VirtualNode {
                real: x,
                layer,
                kind,
            };
            let c = ca.class_of(vg, v).expect("old layers are assigned");
            let i = out.binary_search_by_key(&c, |&(c, _)| c).unwrap();
            if out[i].1.is_none() {
                out[i].1 = Some((vg.ident(v), 0));
            }
        }
    }
    out
}

fn ids_of(comp: &[(u32, SlotValue)]) -> Vec<(u32, u64)> {
    comp.iter()
        .map(|&(c, v)| (c, v.expect("every slot has an id").0))
        .collect()
}

pub fn cds_pack_distributed(
    g: &Graph,
    k_guess: usize,
    params: &CdsParams,
    cfg: &SimConfig,
) -> Result<(CdsPacking, Transcript)> {
    run_distributed(g, k_guess, params, cfg).map(|o| (o.packing, o.transcript))
}

pub fn run_distributed(
    g: &Graph,
    k_guess: usize,
    params: &CdsParams,
    cfg: &SimConfig,
) -> Result<DistributedOutcome> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let (t, layers) = params.resolve(n, k_guess)?;
    let vg = VirtualGraph::new(g, layers);
    let meta = cfg.with_slots(vg.copies());
    let n_virtual = vg.len();
    let d = diameter(g).unwrap_or(0);
    let w = Widths {
        class: ceil_log2(t + 1),
        ident: vg.ident_bits(),
        id: ceil_log2(n),
        value: cfg.bits.saturating_sub(vg.ident_bits()).clamp(1, 64),
    };
    let seed = params.seed;
    let mut tr = Transcript {
        seed: cfg.seed,
        ..Transcript::default()
    };

    // nodes learn n and a diameter estimate from a BFS tree and a convergecast
    let (_, depths, bfs_tr) = build_bfs_tree(g, 0, cfg)?;
    let ecc = depths.iter().flatten().copied().max().unwrap_or(0);
    tr.absorb(bfs_tr);
    tr.charge("diameter-estimate", 2 * ecc, 0);

    let mut ca = assign_base_layers(&vg, t, seed);
    let mut stages = Vec::new();
    let stage_cap = 4 * ceil_log2(n_virtual.max(2));

    for layer in layers / 2..layers {
        let next = layer + 1;
        let init: Vec<_> = (0..n)
            .map(|x| local_min_idents(&vg, &ca, x, layer))
            .collect();
        let (comp, ph) = slot_flood(
            g,
            &meta,
            &init,
            Extremum::Min,
            w.class + w.ident,
            "component-ids",
            n_virtual,
            d,
        )?;
        tr.absorb(ph);
        let comp: Vec<Vec<(u32, u64)>> = comp.iter().map(|c| ids_of(c)).collect();

        assign_random_kinds(&vg, &mut ca, next, seed);
        let kind_class = |ca: &ClassAssignment, x: usize, kind: usize| {
            ca.class_of(
                &vg,
                VirtualNode {
                    real: x,
                    layer: next,
                    kind,
                },
            )
            .unwrap()
        };

        // old nodes announce (class, component id); type-1 nodes look for two components
        let (in_a, ph) = exchange(g, &meta, &comp, |_| w.class + w.ident)?;
        tr.absorb(ph);
        let connector: Vec<bool> = (0..n)
            .map(|x| {
                let c = kind_class(&ca, x, 1);
                let ids: BTreeSet<u64> = in_a[x]
                    .iter()
                    .map(|(_, m)| m)
                    .chain(&comp[x])
                    .filter(|m| m.0 == c)
                    .map(|m| m.1)
                    .collect();
                ids.len() >= 2
            })
            .collect();

        let out_b: Vec<Vec<u32>> = (0..n)
            .map(|x| {
                if connector[x] {
                    vec![kind_class(&ca, x, 1)]
                } else {
                    vec![]
                }
            })
            .collect();
        let (in_b, ph) = exchange(g, &meta, &out_b, |_| w.class + 1)?;
        tr.absorb(ph);
        let flags: Vec<Vec<(u32, SlotValue)>> = (0..n)
            .map(|x| {
                comp[x]
                    .iter()
                    .map(|&(c, _)| {
                        let hit = out_b[x].contains(&c) || in_b[x].iter().any(|(_, m)| *m == c);
                        (c, hit.then_some((1, 0)))
                    })
                    .collect()
            })
            .collect();
        let (flags, ph) = slot_flood(
            g,
            &meta,
            &flags,
            Extremum::Max,
            w.class + 1,
            "deactivation",
            n_virtual,
            d,
        )?;
        tr.absorb(ph);
        let status: Vec<Vec<(u32, u64, bool)>> = (0..n)
            .map(|x| {
                comp[x]
                    .iter()
                    .zip(&flags[x])
                    .map(|(&(c, id), f)| (c, id, f.1.is_none()))
                    .collect()
            })
            .collect();

        let (in_c, ph) = exchange(g, &meta, &status, |_| w.class + w.ident + 1)?;
        tr.absorb(ph);
        let reports: Vec<Option<(u32, Report)>> = (0..n)
            .map(|y| {
                let c = kind_class(&ca, y, 3);
                let ids: BTreeSet<u64> = in_c[y]
                    .iter()
                    .map(|(_, m)| m)
                    .chain(&status[y])
                    .filter(|m| m.0 == c)
                    .map(|m| m.1)
                    .collect();
                match ids.len() {
                    0 => None,
                    1 => Some((c, Report::One(*ids.first().unwrap()))),
                    _ => Some((c, Report::Connector)),
                }
            })
            .collect();
        let out_d: Vec<Vec<(u32, Report)>> = reports
            .iter()
            .map(|r| r.iter().copied().collect())
            .collect();
        let (in_d, ph) = exchange(g, &meta, &out_d, |_| w.class + w.ident + 1)?;
        tr.absorb(ph);

        // neighbour lists of type-2 nodes: adjacent active components with a type-3 witness
        let mut nlist: Vec<Vec<(u32, u64)>> = (0..n)
            .map(|x| {
                let cands: BTreeSet<(u32, u64)> = in_c[x]
                    .iter()
                    .map(|(_, m)| m)
                    .chain(&status[x])
                    .filter(|m| m.2)
                    .map(|m| (m.0, m.1))
                    .collect();
                let heard: Vec<(u32, Report)> = in_d[x]
                    .iter()
                    .map(|(_, m)| *m)
                    .chain(out_d[x].iter().copied())
                    .collect();
                cands
                    .into_iter()
                    .filter(|&(c, id)| heard.iter().any(|&(hc, r)| hc == c && r != Report::One(id)))
                    .collect()
            })
            .collect();

        let mut matched: Vec<Option<(u32, u64)>> = vec![None; n];
        let mut used = 0;
        for stage in 0..stage_cap {
            let key = (next * 1024 + stage) as usize;
            let proposals: Vec<Option<(u32, u64, u64)>> = (0..n)
                .map(|x| {
                    if matched[x].is_some() {
                        return None;
                    }
                    nlist[x]
                        .iter()
                        .map(|&(c, id)| (proposal_value(seed, key, x, id, w.value), id, c))
                        .max()
                        .map(|(v, id, c)| (c, id, v))
                })
                .collect();
            if proposals.iter().all(Option::is_none) {
                break;
            }
            used = stage + 1;
            let out_p: Vec<Vec<(u64, u64)>> = proposals
                .iter()
                .map(|p| p.iter().map(|&(_, id, v)| (id, v)).collect())
                .collect();
            let (in_p, ph) = exchange(g, &meta, &out_p, |_| w.ident + w.value)?;
            tr.absorb(ph);
            let best: Vec<Vec<(u32, SlotValue)>> = (0..n)
                .map(|y| {
                    comp[y]
                        .iter()
                        .map(|&(c, id)| {
                            let own = out_p[y].iter().map(|m| (y, m));
                            let b = in_p[y]
                                .iter()
                                .map(|(s, m)| (*s, m))
                                .chain(own)
                                .filter(|(_, m)| m.0 == id)
                                .map(|(s, m)| (m.1, s as u64))
                                .max();
                            (c, b)
                        })
                        .collect()
                })
                .collect();
            let (best, ph) = slot_flood(
                g,
                &meta,
                &best,
                Extremum::Max,
                w.value + w.id,
                "accept-proposal",
                n_virtual,
                d,
            )?;
            tr.absorb(ph);
            let out_acc: Vec<Vec<(u64, u64)>> = (0..n)
                .map(|y| {
                    comp[y]
                        .iter()
                        .zip(&best[y])
                        .filter_map(|(&(_, id), b)| b.1.map(|(_, p)| (id, p)))
                        .collect()
                })
                .collect();
            let (in_acc, ph) = exchange(g, &meta, &out_acc, |_| w.ident + w.id)?;
            tr.absorb(ph);
            for x in 0..n {
                let Some((c, target, _)) = proposals[x] else {
                    continue;
                };
                let heard: Vec<(u64, u64)> = in_acc[x]
                    .iter()
                    .map(|(_, m)| *m)
                    .chain(out_acc[x].iter().copied())
                    .collect();
                if heard.contains(&(target, x as u64)) {
                    matched[x] = Some((c, target));
                } else {
                    nlist[x].retain(|&(_, id)| !heard.iter().any(|&(h, _)| h == id));
                }
            }
        }
        stages.push(used);

        let mut matches = Vec::new();
        let mut random_type2 = 0;
        for x in 0..n {
            let index = vg.index(VirtualNode {
                real: x,
                layer: next,
                kind: 2,
            });
            match matched[x] {
                Some((c, id)) => {
                    let host = id as usize / vg.copies();
                    let slot = ca
                        .slots
                        .slot_of(host, c)
                        .expect("component host has the class");
                    let root = ca.slots.root(slot);
                    matches.push(MatchRecord {
                        real: x,
                        class: c,
                        component: root,
                        partner: usize::MAX,
                    });
                    ca.set_class(index, c);
                }
                None => {
                    random_type2 += 1;
                    ca.set_class(index, class_draw(seed, index, t));
                }
            }
        }
        let deactivated = flags.iter().flatten().filter(|f| f.1.is_some()).count();
        ca.commit_layer(&vg, next);
        let excess = ca.slots.excess_components();
        ca.excess_history.push(excess);
        ca.layer_log.push(LayerLog {
            layer: next,
            deactivated,
            bridging_edges: 0,
            matched: matches.len(),
            random_type2,
            excess_after: excess,
        });
        ca.last_matches = matches;
    }

    // per-class spanning trees: charged like a component identification on the final classes
    let init: Vec<_> = (0..n)
        .map(|x| local_min_idents(&vg, &ca, x, layers))
        .collect();
    let (_, ph) = slot_flood(
        g,
        &meta,
        &init,
        Extremum::Min,
        w.class + w.ident,
        "tree-extraction",
        n_virtual,
        d,
    )?;
    tr.absorb(ph);

    let packing = CdsPacking::from_assignment(g, &ca, k_guess, seed);
    Ok(DistributedOutcome {
        packing,
        transcript: tr,
        assignment: ca,
        stages,
    })
}
