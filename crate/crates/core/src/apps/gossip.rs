use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::packing::{Tree, TreePacking};
use crate::rng::{fnv1a, hash_draw};
use crate::sim::{ceil_log2, run, NodeCtx, NodeProgram, Outbox, SimConfig, Transcript};

/// Message `i` starts at node `i mod n`.
pub fn spread_origins(n: usize, messages: usize) -> Vec<usize> {
    (0..messages).map(|i| i % n.max(1)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GossipPlan {
    pub origins: Vec<usize>,
    /// Tree carrying each message.
    pub tree_of: Vec<usize>,
}

impl GossipPlan {
    /// Every message goes to a uniformly random tree.
    pub fn random(origins: Vec<usize>, trees: usize, seed: u64) -> Self {
        let tag = fnv1a("gossip-tree");
        let tree_of = (0..origins.len())
            .map(|i| (hash_draw(seed, tag, i as u64, 0) % trees as u64) as usize)
            .collect();
        GossipPlan { origins, tree_of }
    }

    /// Message `i` goes to tree `i mod trees`.
    pub fn round_robin(origins: Vec<usize>, trees: usize) -> Self {
        let tree_of = (0..origins.len()).map(|i| i % trees).collect();
        GossipPlan { origins, tree_of }
    }

    pub fn per_tree(&self, trees: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); trees];
        for (m, &t) in self.tree_of.iter().enumerate() {
            out[t].push(m);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GossipOutcome {
    pub rounds: usize,
    pub complete: bool,
    /// (node, message) pairs never delivered.
    pub missing: usize,
    pub transcript: Transcript,
}

#[derive(Clone, Copy)]
enum Kind {
    Handoff,
    Tree,
}

struct Gossip<'a> {
    origins: &'a [usize],
    tree_of: &'a [usize],
    injector: &'a [usize],
    /// Per node: `(tree, tree neighbours)` sorted by tree.
    local: &'a [Vec<(usize, Vec<usize>)>],
    bits: usize,
}

struct GossipState {
    known: Vec<bool>,
    queued: Vec<bool>,
    /// Queue 0 holds handoffs; queue `j + 1` the messages of the node's j-th tree.
    queues: Vec<VecDeque<usize>>,
    next: usize,
}

impl Gossip<'_> {
    fn enqueue(&self, st: &mut GossipState, x: usize, msg: usize) {
        if st.queued[msg] {
            return;
        }
        let tree = self.tree_of[msg];
        if let Ok(j) = self.local[x].binary_search_by_key(&tree, |(t, _)| *t) {
            st.queued[msg] = true;
            st.queues[j + 1].push_back(msg);
        }
    }
}

impl NodeProgram for Gossip<'_> {
    type State = GossipState;
    type Msg = (usize, Kind);

    fn init(&self, ctx: &NodeCtx) -> GossipState {
        let x = ctx.id;
        let mut st = GossipState {
            known: vec![false; self.origins.len()],
            queued: vec![false; self.origins.len()],
            queues: vec![VecDeque::new(); self.local[x].len() + 1],
            next: 0,
        };
        for (m, &o) in self.origins.iter().enumerate() {
            if o != x {
                continue;
            }
            st.known[m] = true;
            if self.injector[m] == x {
                self.enqueue(&mut st, x, m);
            } else {
                st.queues[0].push_back(m);
            }
        }
        st
    }

    fn step(
        &self,
        st: &mut GossipState,
        ctx: &NodeCtx,
        _round: usize,
        inbox: &[(usize, &(usize, Kind))],
        _: &mut crate::rng::StreamRng,
    ) -> Outbox<(usize, Kind)> {
        let x = ctx.id;
        for &(from, &(msg, kind)) in inbox {
            st.known[msg] = true;
            match kind {
                Kind::Handoff if self.injector[msg] == x => self.enqueue(st, x, msg),
                Kind::Tree => {
                    let tree = self.tree_of[msg];
                    if let Ok(j) = self.local[x].binary_search_by_key(&tree, |(t, _)| *t) {
                        let nbrs = &self.local[x][j].1;
                        // leaves only listen
                        if nbrs.len() >= 2 && nbrs.contains(&from) {
                            self.enqueue(st, x, msg);
                        }
                    }
                }
                Kind::Handoff => {}
            }
        }
        let q = st.queues.len();
        for i in 0..q {
            let j = (st.next + i) % q;
            if let Some(msg) = st.queues[j].pop_front() {
                st.next = (j + 1) % q;
                let kind = if j == 0 { Kind::Handoff } else { Kind::Tree };
                return Outbox::Broadcast(vec![(msg, kind)]);
            }
        }
        Outbox::Silent
    }

    fn halted(&self, st: &GossipState) -> bool {
        st.queues.iter().all(|q| q.is_empty())
    }

    fn bits(&self, _: &(usize, Kind)) -> usize {
        self.bits
    }
}

fn tree_adjacency(n: usize, trees: &[Tree]) -> Vec<Vec<(usize, Vec<usize>)>> {
    let mut local: Vec<Vec<(usize, Vec<usize>)>> = vec![Vec::new(); n];
    for (t, tree) in trees.iter().enumerate() {
        for v in tree.vertex_set() {
            local[v].push((t, Vec::new()));
        }
        for &[a, b] in &tree.edges {
            local[a].last_mut().unwrap().1.push(b);
            local[b].last_mut().unwrap().1.push(a);
        }
    }
    local
}

/// Disseminates every message of `plan` to every node along its tree, one
/// broadcast per node per round; a node in several trees serves its queues
/// round-robin by tree id, with its own handoffs first in the cycle.
pub fn gossip(
    g: &Graph,
    packing: &TreePacking,
    plan: &GossipPlan,
    cfg: &SimConfig,
) -> Result<GossipOutcome> {
    let n = g.n();
    if packing.trees.is_empty() {
        return Err(Error::Validation("gossip needs at least one tree".into()));
    }
    let local = tree_adjacency(n, &packing.trees);
    let mut injector = Vec::with_capacity(plan.origins.len());
    for (m, &o) in plan.origins.iter().enumerate() {
        let t = plan.tree_of[m];
        let inside = |v: usize| local[v].binary_search_by_key(&t, |(tt, _)| *tt).is_ok();
        let entry = if inside(o) {
            Some(o)
        } else {
            g.neighbors(o).iter().copied().find(|&v| inside(v))
        };
        injector.push(entry.ok_or_else(|| {
            Error::Validation(format!(
                "tree {t} does not dominate origin {o} of message {m}"
            ))
        })?);
    }
    let prog = Gossip {
        origins: &plan.origins,
        tree_of: &plan.tree_of,
        injector: &injector,
        local: &local,
        bits: ceil_log2(plan.origins.len().max(2)) + 1,
    };
    let (states, transcript) = run(g, &prog, cfg)?;
    let missing = states
        .iter()
        .map(|s| s.known.iter().filter(|&&k| !k).count())
        .sum();
    Ok(GossipOutcome {
        rounds: transcript.rounds_used,
        complete: missing == 0,
        missing,
        transcript,
    })
}

/// Rounds needed when the messages are sent one after another over `tree`,
/// each waiting for the previous one to finish.
pub fn sequential_baseline(
    g: &Graph,
    tree: &Tree,
    origins: &[usize],
    cfg: &SimConfig,
) -> Result<usize> {
    let single = TreePacking {
        trees: vec![tree.clone()],
    };
    let mut total = 0;
    for &o in origins {
        let plan = GossipPlan {
            origins: vec![o],
            tree_of: vec![0],
        };
        total += gossip(g, &single, &plan, cfg)?.rounds;
    }
    Ok(total)
}
