use super::{Model, NodeCtx, NodeProgram, Outbox, SimConfig, Transcript, Violation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::StreamRng;

/// Runs `program` on every vertex of `g` until all nodes halt with nothing in flight.
pub fn run<P: NodeProgram>(
    g: &Graph,
    program: &P,
    cfg: &SimConfig,
) -> Result<(Vec<P::State>, Transcript)> {
    let n = g.n();
    let ctxs: Vec<NodeCtx> = (0..n)
        .map(|id| NodeCtx {
            id,
            n,
            neighbors: g.neighbors(id),
        })
        .collect();
    let mut states: Vec<P::State> = ctxs.iter().map(|c| program.init(c)).collect();
    let mut rngs: Vec<StreamRng> = (0..n)
        .map(|v| StreamRng::new(cfg.seed, "sim-node", v as u64))
        .collect();

    let mut prev_bcast: Vec<Vec<P::Msg>> = vec![Vec::new(); n];
    let mut prev_direct: Vec<Vec<(usize, P::Msg)>> = vec![Vec::new(); n];
    let mut cur_bcast: Vec<Vec<P::Msg>> = vec![Vec::new(); n];
    let mut cur_direct: Vec<Vec<(usize, P::Msg)>> = vec![Vec::new(); n];
    let mut tr = Transcript {
        seed: cfg.seed,
        ..Transcript::default()
    };
    let mut last_active = 0;
    let mut round = 0;
    let mut in_flight = false;

    loop {
        if !in_flight && states.iter().all(|s| program.halted(s)) {
            break;
        }
        round += 1;
        if round > cfg.round_cap {
            return Err(Error::RoundCap(cfg.round_cap));
        }
        let mut round_bits = 0;
        let mut sent_any = false;
        for v in 0..n {
            let mut inbox: Vec<(usize, &P::Msg)> = Vec::new();
            for &u in g.neighbors(v) {
                inbox.extend(prev_bcast[u].iter().map(|m| (u, m)));
                inbox.extend(
                    prev_direct[u]
                        .iter()
                        .filter(|(t, _)| *t == v)
                        .map(|(_, m)| (u, m)),
                );
            }
            if program.halted(&states[v]) && inbox.is_empty() {
                continue;
            }
            let out = program.step(&mut states[v], &ctxs[v], round, &inbox, &mut rngs[v]);
            drop(inbox);
            let check = |bits: usize, kind: &str, tr: &mut Transcript| -> Result<()> {
                if bits > cfg.bits || !kind.is_empty() {
                    let kind = if kind.is_empty() { "bits" } else { kind };
                    if cfg.strict && kind == "bits" {
                        return Err(Error::MessageTooLarge {
                            node: v,
                            round,
                            bits,
                            budget: cfg.bits,
                        });
                    }
                    tr.violations.push(Violation {
                        round,
                        node: v,
                        kind: kind.into(),
                        bits,
                    });
                }
                Ok(())
            };
            match out {
                Outbox::Silent => {}
                Outbox::Broadcast(msgs) => {
                    if msgs.len() > cfg.slots {
                        check(0, "slots", &mut tr)?;
                    }
                    for m in &msgs {
                        let b = program.bits(m);
                        round_bits = round_bits.max(b);
                        check(b, "", &mut tr)?;
                    }
                    sent_any |= !msgs.is_empty();
                    tr.messages += (msgs.len() * g.degree(v)) as u64;
                    cur_bcast[v] = msgs;
                }
                Outbox::Directed(msgs) => {
                    if cfg.model == Model::VCongest {
                        check(0, "directed-in-v-congest", &mut tr)?;
                    }
                    let mut per_target: Vec<usize> = msgs.iter().map(|(t, _)| *t).collect();
                    per_target.sort_unstable();
                    if per_target.iter().any(|t| !g.has_edge(v, *t)) {
                        check(0, "not-a-neighbor", &mut tr)?;
                    }
                    if per_target
                        .chunk_by(|a, b| a == b)
                        .any(|c| c.len() > cfg.slots)
                    {
                        check(0, "slots", &mut tr)?;
                    }
                    for (_, m) in &msgs {
                        let b = program.bits(m);
                        round_bits = round_bits.max(b);
                        check(b, "", &mut tr)?;
                    }
                    sent_any |= !msgs.is_empty();
                    tr.messages += msgs.len() as u64;
                    cur_direct[v] = msgs;
                }
            }
        }
        std::mem::swap(&mut prev_bcast, &mut cur_bcast);
        std::mem::swap(&mut prev_direct, &mut cur_direct);
        cur_bcast.iter_mut().for_each(Vec::clear);
        cur_direct.iter_mut().for_each(Vec::clear);
        in_flight = sent_any;
        tr.max_bits_per_round.push(round_bits);
        if sent_any {
            last_active = round;
        }
    }
    tr.max_bits_per_round.truncate(last_active);
    tr.rounds_used = last_active * cfg.slots;
    tr.charged_rounds = tr.rounds_used;
    Ok((states, tr))
}
