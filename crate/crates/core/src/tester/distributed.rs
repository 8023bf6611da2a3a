use super::centralized::announced_class;
use super::{announce_rounds, ClassPartition, TestOutcome, Verdict};
use crate::error::Result;
use crate::graph::{diameter, Graph};
use crate::rng::StreamRng;
use crate::sim::{
    build_bfs_tree, ceil_log2, exchange, run, slot_flood, Extremum, NodeCtx, NodeProgram, Outbox,
    SimConfig, Transcript,
};

/// Floods a one-bit alarm for a fixed number of rounds.
struct Alarm<'a> {
    raised: &'a [bool],
}

#[derive(Clone, Default)]
struct AlarmState {
    raised: bool,
    sent: bool,
}

impl NodeProgram for Alarm<'_> {
    type State = AlarmState;
    type Msg = ();

    fn init(&self, ctx: &NodeCtx) -> AlarmState {
        AlarmState {
            raised: self.raised[ctx.id],
            sent: false,
        }
    }

    fn step(
        &self,
        st: &mut AlarmState,
        _: &NodeCtx,
        _round: usize,
        inbox: &[(usize, &())],
        _: &mut StreamRng,
    ) -> Outbox<()> {
        st.raised |= !inbox.is_empty();
        if st.raised && !st.sent {
            st.sent = true;
            return Outbox::Broadcast(vec![()]);
        }
        Outbox::Silent
    }

    fn halted(&self, st: &AlarmState) -> bool {
        !st.raised || st.sent
    }

    fn bits(&self, _: &()) -> usize {
        1
    }
}

fn propagate(
    g: &Graph,
    cfg: &SimConfig,
    raised: &[bool],
    len: usize,
) -> Result<(Vec<bool>, Transcript)> {
    let (states, mut tr) = run(g, &Alarm { raised }, cfg)?;
    // every node waits out the whole phase
    let fixed = len * cfg.slots;
    tr.charged_rounds += fixed.saturating_sub(tr.rounds_used);
    tr.rounds_used = tr.rounds_used.max(fixed);
    Ok((states.into_iter().map(|s| s.raised).collect(), tr))
}

/// Message-level run of the tester. Announcement draws use `cfg.seed`, so the
/// verdict equals the centralized one under the same seed.
pub fn test_cds_partition_distributed(
    g: &Graph,
    part: &ClassPartition,
    cfg: &SimConfig,
    factor: usize,
) -> Result<(TestOutcome, Transcript, bool)> {
    let n = part.n();
    let t = part.t;
    let n_virtual = part.virtual_count();
    let meta = cfg.with_slots(part.max_multiplicity().max(1));
    let class_bits = ceil_log2(t + 1);
    let id_bits = ceil_log2(n);
    let d = diameter(g).unwrap_or(0);
    let rounds = announce_rounds(n_virtual, factor);
    let mut tr = Transcript {
        seed: cfg.seed,
        ..Transcript::default()
    };
    let mut out = TestOutcome {
        verdict: Verdict::Pass,
        detecting_node: None,
        detection_round: None,
        announce_rounds: rounds,
    };

    let (_, depths, bfs_tr) = build_bfs_tree(g, 0, cfg)?;
    let ecc = depths.iter().flatten().copied().max().unwrap_or(0);
    tr.absorb(bfs_tr);
    tr.charge("diameter-estimate", 2 * ecc, 0);
    let alarm_len = 2 * ecc + 1;

    let classes: Vec<Vec<u32>> = part
        .hosted
        .iter()
        .map(|h| h.iter().map(|&(c, _)| c).collect())
        .collect();
    let (heard, ph) = exchange(g, &meta, &classes, |_| class_bits)?;
    tr.absorb(ph);
    let undominated: Vec<bool> = (0..n)
        .map(|x| {
            if classes[x].is_empty() {
                return false;
            }
            let mut seen = vec![false; t + 1];
            for &c in classes[x].iter().chain(heard[x].iter().map(|(_, c)| c)) {
                seen[c as usize] = true;
            }
            seen[1..].iter().any(|&s| !s)
        })
        .collect();
    let (alarm, ph) = propagate(g, cfg, &undominated, alarm_len)?;
    tr.absorb(ph);
    let consistent = alarm.iter().all(|&a| a == alarm[0]);
    if alarm.iter().any(|&a| a) {
        out.verdict = Verdict::DominationFailure;
        out.detecting_node = undominated.iter().position(|&u| u);
        return Ok((out, tr, consistent));
    }

    let init: Vec<Vec<_>> = (0..n)
        .map(|x| {
            classes[x]
                .iter()
                .map(|&c| (c, Some((x as u64, 0))))
                .collect()
        })
        .collect();
    let (ids, ph) = slot_flood(
        g,
        &meta,
        &init,
        Extremum::Min,
        class_bits + id_bits,
        "component-ids",
        n_virtual,
        d,
    )?;
    tr.absorb(ph);
    let ids: Vec<Vec<(u32, u64)>> = ids
        .iter()
        .map(|s| s.iter().map(|&(c, v)| (c, v.unwrap().0)).collect())
        .collect();

    let (heard, ph) = exchange(g, &meta, &ids, |_| class_bits + id_bits)?;
    tr.absorb(ph);
    // known[x][c]: Some(id) while consistent, None after a conflict
    let mut known: Vec<Vec<Option<Option<u64>>>> = vec![vec![None; t + 1]; n];
    let mut detected = vec![false; n];
    for x in 0..n {
        for &(c, id) in ids[x].iter().chain(heard[x].iter().map(|(_, m)| m)) {
            let slot = &mut known[x][c as usize];
            match *slot {
                None => *slot = Some(Some(id)),
                Some(Some(k)) if k != id => {
                    *slot = Some(None);
                    detected[x] = !classes[x].is_empty();
                }
                _ => {}
            }
        }
    }
    if let Some(x) = detected.iter().position(|&d| d) {
        out.detecting_node = Some(x);
        out.detection_round = Some(0);
    }

    let starts: Vec<usize> = part
        .hosted
        .iter()
        .scan(0, |acc, h| {
            let o = *acc;
            *acc += h.iter().map(|&(_, m)| m as usize).sum::<usize>();
            Some(o)
        })
        .collect();
    let mut round = 1;
    while round <= rounds && out.detection_round.is_none() {
        let msgs: Vec<Vec<(u32, u64)>> = (0..n)
            .map(|x| {
                let count: usize = part.hosted[x].iter().map(|&(_, m)| m as usize).sum();
                (starts[x]..starts[x] + count)
                    .filter_map(|v| {
                        let c = announced_class(cfg.seed, v, round, t);
                        known[x][c as usize].flatten().map(|id| (c, id))
                    })
                    .collect()
            })
            .collect();
        let (heard, ph) = exchange(g, &meta, &msgs, |_| class_bits + id_bits)?;
        tr.absorb(ph);
        for x in 0..n {
            if heard[x]
                .iter()
                .any(|(_, (c, id))| matches!(known[x][*c as usize], Some(Some(k)) if k != *id))
            {
                detected[x] = true;
                if out.detecting_node.is_none() {
                    out.detecting_node = Some(x);
                    out.detection_round = Some(round);
                }
            }
        }
        round += 1;
    }
    // the schedule is fixed: rounds skipped after a detection still elapse
    let idle = (rounds + 1 - round) * meta.slots;
    tr.charge("announce-idle", idle, 0);

    let (alarm, ph) = propagate(g, cfg, &detected, alarm_len)?;
    tr.absorb(ph);
    let consistent = alarm.iter().all(|&a| a == alarm[0]);
    if alarm.iter().any(|&a| a) {
        out.verdict = Verdict::ConnectivityFailure;
    }
    Ok((out, tr, consistent))
}
