use super::{announce_rounds, ClassPartition, TestOutcome, Verdict};
use crate::graph::Graph;
use crate::rng::{fnv1a, hash_draw};

/// Classes with two or more components, and per real node the component id it
/// hears for each of them (`None` when it hears two different ones).
pub(super) struct Knowledge {
    pub broken: Vec<u32>,
    /// `known[x][i]` for `broken[i]`.
    pub known: Vec<Vec<Option<u64>>>,
    pub first_conflict: Option<usize>,
}

/// Component id of a slot: the smallest real node hosting its component.
pub(super) fn component_ids(g: &Graph, part: &ClassPartition) -> Vec<Vec<u64>> {
    let (offset, mut uf) = part.slot_components(g);
    let mut min_host = vec![u64::MAX; *offset.last().unwrap()];
    for x in 0..part.n() {
        for j in 0..part.hosted[x].len() {
            let r = uf.find(offset[x] + j);
            min_host[r] = min_host[r].min(x as u64);
        }
    }
    (0..part.n())
        .map(|x| {
            (0..part.hosted[x].len())
                .map(|j| min_host[uf.find(offset[x] + j)])
                .collect()
        })
        .collect()
}

pub(super) fn knowledge(
    g: &Graph,
    part: &ClassPartition,
    ids: &[Vec<u64>],
    counts: &[usize],
) -> Knowledge {
    let broken: Vec<u32> = (1..=part.t)
        .filter(|&c| counts[c] >= 2)
        .map(|c| c as u32)
        .collect();
    let mut known = vec![vec![None; broken.len()]; part.n()];
    let mut first_conflict = None;
    for x in 0..part.n() {
        let mut conflict = vec![false; broken.len()];
        for y in std::iter::once(x).chain(g.neighbors(x).iter().copied()) {
            for (j, &(c, _)) in part.hosted[y].iter().enumerate() {
                let Ok(i) = broken.binary_search(&c) else {
                    continue;
                };
                match known[x][i] {
                    None if !conflict[i] => known[x][i] = Some(ids[y][j]),
                    Some(k) if k != ids[y][j] => {
                        conflict[i] = true;
                        known[x][i] = None;
                    }
                    _ => {}
                }
            }
        }
        if first_conflict.is_none() && conflict.iter().any(|&c| c) && !part.hosted[x].is_empty() {
            first_conflict = Some(x);
        }
    }
    Knowledge {
        broken,
        known,
        first_conflict,
    }
}

pub(super) const ANNOUNCE_TAG: &str = "tester-announce";

/// Class announced by virtual node `v` in announcement round `round` (1-based).
pub(super) fn announced_class(seed: u64, v: usize, round: usize, t: usize) -> u32 {
    1 + (hash_draw(seed, fnv1a(ANNOUNCE_TAG), v as u64, round as u64) % t as u64) as u32
}

pub fn test_cds_partition_centralized(
    g: &Graph,
    part: &ClassPartition,
    seed: u64,
    factor: usize,
) -> TestOutcome {
    let rounds = announce_rounds(part.virtual_count(), factor);
    let mut out = TestOutcome {
        verdict: Verdict::Pass,
        detecting_node: None,
        detection_round: None,
        announce_rounds: rounds,
    };
    if let Some((x, _)) = part.undominated(g) {
        out.verdict = Verdict::DominationFailure;
        out.detecting_node = Some(x);
        return out;
    }
    let ids = component_ids(g, part);
    let counts = part.component_counts(g);
    let k = knowledge(g, part, &ids, &counts);
    if k.broken.is_empty() {
        return out;
    }
    if let Some(x) = k.first_conflict {
        out.verdict = Verdict::ConnectivityFailure;
        out.detecting_node = Some(x);
        out.detection_round = Some(0);
        return out;
    }
    // classes whose announcement by a virtual node on x would expose a neighbour's conflict
    let detect: Vec<Vec<u32>> = (0..part.n())
        .map(|x| {
            k.broken
                .iter()
                .enumerate()
                .filter(|&(i, _)| {
                    g.neighbors(x)
                        .iter()
                        .any(|&y| k.known[y][i] != k.known[x][i])
                })
                .map(|(_, &c)| c)
                .collect()
        })
        .collect();
    let mut offset = 0;
    let starts: Vec<usize> = part
        .hosted
        .iter()
        .map(|h| {
            let o = offset;
            offset += h.iter().map(|&(_, m)| m as usize).sum::<usize>();
            o
        })
        .collect();
    let hosts: Vec<usize> = (0..part.n()).filter(|&x| !detect[x].is_empty()).collect();
    for round in 1..=rounds {
        let mut detector: Option<usize> = None;
        for &x in &hosts {
            let count: usize = part.hosted[x].iter().map(|&(_, m)| m as usize).sum();
            for v in starts[x]..starts[x] + count {
                let c = announced_class(seed, v, round, part.t);
                if !detect[x].contains(&c) {
                    continue;
                }
                let i = k.broken.binary_search(&c).unwrap();
                let y = g
                    .neighbors(x)
                    .iter()
                    .copied()
                    .find(|&y| k.known[y][i] != k.known[x][i]);
                detector = match (detector, y) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
            }
        }
        if detector.is_some() {
            out.verdict = Verdict::ConnectivityFailure;
            out.detecting_node = detector;
            out.detection_round = Some(round);
            return out;
        }
    }
    out
}
