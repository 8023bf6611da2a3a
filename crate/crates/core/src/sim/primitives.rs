//! Component identification, executed by flooding and charged at the
//! cost of the sublinear component-identification algorithm.

use serde::{Deserialize, Serialize};

use super::{ceil_log2, run, NodeCtx, NodeProgram, Outbox, SimConfig, Transcript};
use crate::error::Result;
use crate::graph::{bfs_distances, connected_components, diameter, Graph, UNREACHED};
use crate::rng::StreamRng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Extremum {
    Min,
    Max,
}

/// Iterated base-2 logarithm, at least 1.
pub fn log_star(n: usize) -> usize {
    let mut x = n as f64;
    let mut k = 0;
    while x > 1.0 {
        x = x.log2();
        k += 1;
    }
    k.max(1)
}

/// `min{D', D + ⌈√n⌉·log* n}`.
pub fn component_charge(d_prime: usize, d: usize, n: usize) -> usize {
    let root = (n as f64).sqrt().ceil() as usize;
    d_prime.min(d + root * log_star(n))
}

struct ExtremeFlood<'a, F> {
    member: &'a F,
    values: &'a [Option<u64>],
    mode: Extremum,
    bits: usize,
}

#[derive(Clone, Debug)]
struct FloodState {
    best: Option<(u64, usize)>,
    dirty: bool,
}

impl<F: Fn(usize, usize) -> bool> NodeProgram for ExtremeFlood<'_, F> {
    type State = FloodState;
    type Msg = (u64, usize);

    fn init(&self, ctx: &NodeCtx) -> FloodState {
        let best = self.values[ctx.id].map(|x| (x, ctx.id));
        FloodState {
            best,
            dirty: best.is_some(),
        }
    }

    fn step(
        &self,
        st: &mut FloodState,
        ctx: &NodeCtx,
        _round: usize,
        inbox: &[(usize, &(u64, usize))],
        _: &mut StreamRng,
    ) -> Outbox<(u64, usize)> {
        for &(s, &cand) in inbox {
            if !(self.member)(s, ctx.id) {
                continue;
            }
            let better = match (st.best, self.mode) {
                (None, _) => true,
                (Some(b), Extremum::Min) => cand < b,
                (Some(b), Extremum::Max) => cand > b,
            };
            if better {
                st.best = Some(cand);
                st.dirty = true;
            }
        }
        if st.dirty {
            st.dirty = false;
            Outbox::Broadcast(vec![st.best.unwrap()])
        } else {
            Outbox::Silent
        }
    }

    fn halted(&self, st: &FloodState) -> bool {
        !st.dirty
    }

    fn bits(&self, _: &(u64, usize)) -> usize {
        self.bits
    }
}

// Largest strong diameter over the components of the member subgraph, when cheap enough.
fn strong_diameter(g: &Graph, member: &impl Fn(usize, usize) -> bool) -> Option<usize> {
    if g.n().saturating_mul(g.m()) > 50_000_000 {
        return None;
    }
    let sub = g.spanning_subgraph(|e| member(e.u, e.v));
    let labels = connected_components(&sub, |_, _| true);
    let mut best = 0;
    for v in 0..sub.n() {
        let d = bfs_distances(&sub, v);
        for w in 0..sub.n() {
            if labels[w] == labels[v] && d[w] != UNREACHED {
                best = best.max(d[w]);
            }
        }
    }
    Some(best)
}

fn flood_extreme(
    g: &Graph,
    member: impl Fn(usize, usize) -> bool,
    values: &[Option<u64>],
    value_bits: usize,
    mode: Extremum,
    cfg: &SimConfig,
    name: &str,
) -> Result<(Vec<Option<(u64, usize)>>, Transcript)> {
    let prog = ExtremeFlood {
        member: &member,
        values,
        mode,
        bits: value_bits + ceil_log2(g.n()),
    };
    let (states, flood_tr) = run(g, &prog, &cfg.with_slots(1))?;
    let actual = flood_tr.rounds_used;
    let d_prime = strong_diameter(g, &member).unwrap_or(actual);
    let d = diameter(g).unwrap_or(g.n());
    let mut tr = Transcript {
        seed: cfg.seed,
        ..Transcript::default()
    };
    tr.max_bits_per_round = flood_tr.max_bits_per_round;
    tr.violations = flood_tr.violations;
    tr.messages = flood_tr.messages;
    tr.charge(name, component_charge(d_prime, d, g.n()), actual);
    Ok((states.into_iter().map(|s| s.best).collect(), tr))
}

/// Every node learns the extreme `(value, id)` of its component in the
/// subgraph of edges accepted by `member`.
pub fn identify_components(
    g: &Graph,
    member: impl Fn(usize, usize) -> bool,
    values: &[u64],
    value_bits: usize,
    mode: Extremum,
    cfg: &SimConfig,
) -> Result<(Vec<(u64, usize)>, Transcript)> {
    let vals: Vec<Option<u64>> = values.iter().map(|&x| Some(x)).collect();
    let (res, tr) = flood_extreme(
        g,
        member,
        &vals,
        value_bits,
        mode,
        cfg,
        "identify-components",
    )?;
    Ok((res.into_iter().map(Option::unwrap).collect(), tr))
}

/// Every node learns the largest payload originated inside its component, if any.
pub fn broadcast_within_component(
    g: &Graph,
    member: impl Fn(usize, usize) -> bool,
    payloads: &[Option<u64>],
    payload_bits: usize,
    cfg: &SimConfig,
) -> Result<(Vec<Option<u64>>, Transcript)> {
    let (res, tr) = flood_extreme(
        g,
        member,
        payloads,
        payload_bits,
        Extremum::Max,
        cfg,
        "broadcast-within-component",
    )?;
    Ok((res.into_iter().map(|r| r.map(|(x, _)| x)).collect(), tr))
}
