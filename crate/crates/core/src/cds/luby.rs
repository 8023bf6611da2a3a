//! Proposal-based maximal matching on the bridging graph: each unmatched
//! type-2 node proposes to its best-valued candidate, each component accepts
//! its best proposal, and losers drop components that accepted someone else.

use super::bridging::BridgingGraph;
use crate::rng::{fnv1a, hash_draw};

#[derive(Clone, Debug, PartialEq)]
pub struct Matching {
    /// Per type-2 node (real id): matched component index.
    pub mate: Vec<Option<usize>>,
    pub stages_used: usize,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.mate.iter().flatten().count()
    }
}

/// Random proposal value of `bits` bits (at most 64).
pub fn proposal_value(seed: u64, stage: usize, proposer: usize, key: u64, bits: usize) -> u64 {
    let word = hash_draw(seed, fnv1a("proposal") ^ stage as u64, proposer as u64, key);
    if bits >= 64 {
        word
    } else {
        word >> (64 - bits)
    }
}

pub fn luby_matching(bg: &BridgingGraph, seed: u64, stages: usize, value_bits: usize) -> Matching {
    let mut lists: Vec<Vec<usize>> = bg.adjacency.clone();
    let mut mate = vec![None; lists.len()];
    // best (value, proposer) per component in the current stage
    let mut best: Vec<Option<(u64, usize)>> = vec![None; bg.components.len()];
    let mut stages_used = 0;
    for stage in 0..stages {
        let mut any = false;
        for (x, list) in lists.iter().enumerate() {
            if mate[x].is_some() || list.is_empty() {
                continue;
            }
            any = true;
            let (_, c) = list
                .iter()
                .map(|&c| (proposal_value(seed, stage, x, c as u64, value_bits), c))
                .max()
                .unwrap();
            let v = proposal_value(seed, stage, x, c as u64, value_bits);
            if best[c].is_none_or(|b| (v, x) > b) {
                best[c] = Some((v, x));
            }
        }
        if !any {
            break;
        }
        stages_used = stage + 1;
        let accepted: Vec<(usize, usize)> = best
            .iter()
            .enumerate()
            .filter_map(|(c, b)| b.map(|(_, x)| (c, x)))
            .collect();
        for &(c, x) in &accepted {
            mate[x] = Some(c);
        }
        let taken: Vec<bool> = {
            let mut t = vec![false; bg.components.len()];
            for &(c, _) in &accepted {
                t[c] = true;
            }
            t
        };
        for (x, list) in lists.iter_mut().enumerate() {
            if mate[x].is_none() {
                list.retain(|&c| !taken[c]);
            }
        }
        best.iter_mut().for_each(|b| *b = None);
    }
    Matching { mate, stages_used }
}

/// Every component is matched at most once and only along bridging edges.
pub fn is_matching(bg: &BridgingGraph, m: &Matching) -> bool {
    let mut used = vec![false; bg.components.len()];
    for (x, mate) in m.mate.iter().enumerate() {
        if let Some(c) = *mate {
            if used[c] || !bg.adjacency[x].contains(&c) {
                return false;
            }
            used[c] = true;
        }
    }
    true
}

/// No bridging edge has both endpoints unmatched.
pub fn is_maximal(bg: &BridgingGraph, m: &Matching) -> bool {
    let mut used = vec![false; bg.components.len()];
    for c in m.mate.iter().flatten() {
        used[*c] = true;
    }
    bg.adjacency
        .iter()
        .enumerate()
        .all(|(x, adj)| m.mate[x].is_some() || adj.iter().all(|&c| used[c]))
}

#[cfg(test)]
mod tests {
    use super::super::bridging::BridgeComponent;
    use super::*;

    fn bg(components: usize, adjacency: Vec<Vec<usize>>) -> BridgingGraph {
        BridgingGraph {
            layer: 1,
            components: (0..components)
                .map(|root| BridgeComponent {
                    root,
                    class: 1,
                    active: true,
                })
                .collect(),
            adjacency,
        }
    }

    #[test]
    fn one_by_one() {
        let g = bg(1, vec![vec![0]]);
        let m = luby_matching(&g, 3, 1, 64);
        assert_eq!(m.mate, vec![Some(0)]);
        assert_eq!(m.stages_used, 1);
    }

    #[test]
    fn star_matches_one() {
        let g = bg(1, vec![vec![0]; 5]);
        let m = luby_matching(&g, 9, 10, 64);
        assert_eq!(m.size(), 1);
        assert!(is_matching(&g, &m) && is_maximal(&g, &m));
    }
}
