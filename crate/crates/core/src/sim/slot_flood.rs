//! Helpers for programs where a real node hosts several virtual nodes,
//! grouped by class: a one-shot broadcast exchange and per-class flooding.

use super::{component_charge, run, Extremum, NodeCtx, NodeProgram, Outbox, SimConfig, Transcript};
use crate::error::Result;
use crate::graph::Graph;
use crate::rng::StreamRng;

struct Exchange<'a, M, B> {
    outgoing: &'a [Vec<M>],
    bits: B,
}

struct ExchangeState<M> {
    sent: bool,
    inbox: Vec<(usize, M)>,
}

impl<M: Clone, B: Fn(&M) -> usize> NodeProgram for Exchange<'_, M, B> {
    type State = ExchangeState<M>;
    type Msg = M;

    fn init(&self, _: &NodeCtx) -> Self::State {
        ExchangeState {
            sent: false,
            inbox: Vec::new(),
        }
    }

    fn step(
        &self,
        st: &mut Self::State,
        ctx: &NodeCtx,
        _round: usize,
        inbox: &[(usize, &M)],
        _: &mut StreamRng,
    ) -> Outbox<M> {
        st.inbox.extend(inbox.iter().map(|&(s, m)| (s, m.clone())));
        if st.sent {
            return Outbox::Silent;
        }
        st.sent = true;
        let out = &self.outgoing[ctx.id];
        if out.is_empty() {
            Outbox::Silent
        } else {
            Outbox::Broadcast(out.clone())
        }
    }

    fn halted(&self, st: &Self::State) -> bool {
        st.sent
    }

    fn bits(&self, m: &M) -> usize {
        (self.bits)(m)
    }
}

/// One step in which every node broadcasts its `outgoing` list; returns every node's inbox.
pub fn exchange<M: Clone>(
    g: &Graph,
    cfg: &SimConfig,
    outgoing: &[Vec<M>],
    bits: impl Fn(&M) -> usize,
) -> Result<(Vec<Vec<(usize, M)>>, Transcript)> {
    let (states, tr) = run(g, &Exchange { outgoing, bits }, cfg)?;
    Ok((states.into_iter().map(|s| s.inbox).collect(), tr))
}

pub type SlotValue = Option<(u64, u64)>;

struct SlotFlood {
    mode: Extremum,
    bits: usize,
}

struct SlotFloodState {
    slots: Vec<(u32, SlotValue)>,
    dirty: Vec<bool>,
}

impl SlotFlood {
    fn better(&self, cand: (u64, u64), cur: SlotValue) -> bool {
        match (cur, self.mode) {
            (None, _) => true,
            (Some(c), Extremum::Min) => cand < c,
            (Some(c), Extremum::Max) => cand > c,
        }
    }
}

struct SlotFloodInit<'a> {
    flood: SlotFlood,
    init: &'a [Vec<(u32, SlotValue)>],
}

impl NodeProgram for SlotFloodInit<'_> {
    type State = SlotFloodState;
    type Msg = (u32, (u64, u64));

    fn init(&self, ctx: &NodeCtx) -> SlotFloodState {
        let slots = self.init[ctx.id].clone();
        let dirty = slots.iter().map(|(_, v)| v.is_some()).collect();
        SlotFloodState { slots, dirty }
    }

    fn step(
        &self,
        st: &mut SlotFloodState,
        _: &NodeCtx,
        _round: usize,
        inbox: &[(usize, &(u32, (u64, u64)))],
        _: &mut StreamRng,
    ) -> Outbox<(u32, (u64, u64))> {
        for &(_, &(class, cand)) in inbox {
            if let Ok(i) = st.slots.binary_search_by_key(&class, |&(c, _)| c) {
                if self.flood.better(cand, st.slots[i].1) {
                    st.slots[i].1 = Some(cand);
                    st.dirty[i] = true;
                }
            }
        }
        let mut out = Vec::new();
        for (i, d) in st.dirty.iter_mut().enumerate() {
            if *d {
                *d = false;
                out.push((st.slots[i].0, st.slots[i].1.unwrap()));
            }
        }
        if out.is_empty() {
            Outbox::Silent
        } else {
            Outbox::Broadcast(out)
        }
    }

    fn halted(&self, st: &SlotFloodState) -> bool {
        !st.dirty.iter().any(|&d| d)
    }

    fn bits(&self, _: &(u32, (u64, u64))) -> usize {
        self.flood.bits
    }
}

/// Per-class flooding of the extreme value among same-class slots on adjacent
/// real nodes. `init[x]` lists `(class, value)` sorted by class. Charged as a
/// component-identification call on a graph of `n_virtual` nodes and diameter `d`.
#[allow(clippy::too_many_arguments)]
pub fn slot_flood(
    g: &Graph,
    cfg: &SimConfig,
    init: &[Vec<(u32, SlotValue)>],
    mode: Extremum,
    bits: usize,
    name: &str,
    n_virtual: usize,
    d: usize,
) -> Result<(Vec<Vec<(u32, SlotValue)>>, Transcript)> {
    let prog = SlotFloodInit {
        flood: SlotFlood { mode, bits },
        init,
    };
    let (states, flood_tr) = run(g, &prog, cfg)?;
    let meta = flood_tr.rounds_used / cfg.slots.max(1);
    let mut tr = Transcript {
        seed: cfg.seed,
        ..Transcript::default()
    };
    tr.max_bits_per_round = flood_tr.max_bits_per_round;
    tr.violations = flood_tr.violations;
    tr.messages = flood_tr.messages;
    tr.charge(
        name,
        component_charge(meta, d, n_virtual) * cfg.slots,
        flood_tr.rounds_used,
    );
    Ok((states.into_iter().map(|s| s.slots).collect(), tr))
}
