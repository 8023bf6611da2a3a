use super::{ceil_log2, run, NodeCtx, NodeProgram, Outbox, SimConfig, Transcript};
use crate::error::Result;
use crate::graph::Graph;
use crate::rng::StreamRng;

/// Every node broadcasts its id once and records what it hears.
pub struct EchoId {
    pub n: usize,
}

#[derive(Clone, Debug, Default)]
pub struct EchoState {
    pub sent: bool,
    pub heard: Vec<usize>,
}

impl NodeProgram for EchoId {
    type State = EchoState;
    type Msg = usize;

    fn init(&self, _: &NodeCtx) -> EchoState {
        EchoState::default()
    }

    fn step(
        &self,
        st: &mut EchoState,
        ctx: &NodeCtx,
        _round: usize,
        inbox: &[(usize, &usize)],
        _: &mut StreamRng,
    ) -> Outbox<usize> {
        st.heard.extend(inbox.iter().map(|(_, &id)| id));
        st.heard.sort_unstable();
        if st.sent {
            return Outbox::Silent;
        }
        st.sent = true;
        Outbox::Broadcast(vec![ctx.id])
    }

    fn halted(&self, st: &EchoState) -> bool {
        st.sent
    }

    fn bits(&self, _: &usize) -> usize {
        ceil_log2(self.n)
    }
}

/// Single-token flooding; a node forwards only while some neighbour has not sent it the token.
pub struct Flood {
    pub source: usize,
}

#[derive(Clone, Debug, Default)]
pub struct FloodState {
    pub has: bool,
    pub received_round: Option<usize>,
    done: bool,
}

impl NodeProgram for Flood {
    type State = FloodState;
    type Msg = ();

    fn init(&self, ctx: &NodeCtx) -> FloodState {
        FloodState {
            has: ctx.id == self.source,
            received_round: None,
            done: false,
        }
    }

    fn step(
        &self,
        st: &mut FloodState,
        ctx: &NodeCtx,
        round: usize,
        inbox: &[(usize, &())],
        _: &mut StreamRng,
    ) -> Outbox<()> {
        if st.done {
            return Outbox::Silent;
        }
        if !st.has && inbox.is_empty() {
            return Outbox::Silent;
        }
        st.done = true;
        if !st.has {
            st.has = true;
            st.received_round = Some(round - 1);
        }
        if inbox.len() < ctx.neighbors.len() {
            Outbox::Broadcast(vec![()])
        } else {
            Outbox::Silent
        }
    }

    fn halted(&self, st: &FloodState) -> bool {
        st.done || !st.has
    }

    fn bits(&self, _: &()) -> usize {
        1
    }
}

struct Bfs {
    root: usize,
    n: usize,
}

#[derive(Clone, Debug, Default)]
struct BfsState {
    parent: Option<usize>,
    depth: Option<usize>,
    announced: bool,
}

impl NodeProgram for Bfs {
    type State = BfsState;
    type Msg = usize;

    fn init(&self, ctx: &NodeCtx) -> BfsState {
        let root = ctx.id == self.root;
        BfsState {
            parent: None,
            depth: root.then_some(0),
            announced: false,
        }
    }

    fn step(
        &self,
        st: &mut BfsState,
        _: &NodeCtx,
        _round: usize,
        inbox: &[(usize, &usize)],
        _: &mut StreamRng,
    ) -> Outbox<usize> {
        if st.depth.is_none() {
            // the first wave to arrive carries the minimum depth; prefer the smallest sender
            if let Some(&(p, &d)) = inbox.iter().min_by_key(|(s, d)| (**d, *s)) {
                st.parent = Some(p);
                st.depth = Some(d + 1);
            }
        }
        match st.depth {
            Some(d) if !st.announced => {
                st.announced = true;
                Outbox::Broadcast(vec![d])
            }
            _ => Outbox::Silent,
        }
    }

    fn halted(&self, st: &BfsState) -> bool {
        st.announced || st.depth.is_none()
    }

    fn bits(&self, _: &usize) -> usize {
        ceil_log2(self.n)
    }
}

/// Distributed BFS from `root`: parent pointers and depths.
pub fn build_bfs_tree(
    g: &Graph,
    root: usize,
    cfg: &SimConfig,
) -> Result<(Vec<Option<usize>>, Vec<Option<usize>>, Transcript)> {
    let (states, tr) = run(g, &Bfs { root, n: g.n() }, &cfg.with_slots(1))?;
    let parents = states.iter().map(|s| s.parent).collect();
    let depths = states.iter().map(|s| s.depth).collect();
    Ok((parents, depths, tr))
}
