//! Synchronous round-based message passing with bit accounting.

mod engine;
mod primitives;
mod programs;
mod slot_flood;

pub use engine::run;
pub use primitives::{
    broadcast_within_component, component_charge, identify_components, log_star, Extremum,
};
pub use programs::{build_bfs_tree, EchoId, Flood};
pub use slot_flood::{exchange, slot_flood, SlotValue};

use serde::{Deserialize, Serialize};

use crate::rng::StreamRng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    #[default]
    VCongest,
    ECongest,
}

/// `max(1, ⌈log₂ x⌉)`: bits needed to write one of `x` values.
pub fn ceil_log2(x: usize) -> usize {
    if x <= 2 {
        1
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub model: Model,
    /// Per-message budget in bits.
    pub bits: usize,
    pub seed: u64,
    /// Cap on (meta-)rounds.
    pub round_cap: usize,
    /// Real rounds simulated by one step; a node may send this many messages per step.
    pub slots: usize,
    /// Turn bit-budget violations into errors.
    pub strict: bool,
}

pub const DEFAULT_BITS_FACTOR: usize = 4;

impl SimConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        SimConfig {
            model: Model::VCongest,
            bits: DEFAULT_BITS_FACTOR * ceil_log2(n),
            seed,
            round_cap: 1_000_000,
            slots: 1,
            strict: false,
        }
    }

    pub fn with_slots(&self, slots: usize) -> Self {
        SimConfig {
            slots,
            ..self.clone()
        }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        SimConfig {
            seed,
            ..self.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub round: usize,
    pub node: usize,
    pub kind: String,
    pub bits: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrimitiveCharge {
    pub name: String,
    pub charged: usize,
    /// Rounds the stand-in flooding actually took (not part of `rounds_used`).
    pub actual_rounds: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Transcript {
    /// Real rounds: last active step times `slots`, summed over phases.
    pub rounds_used: usize,
    pub charged_rounds: usize,
    pub max_bits_per_round: Vec<usize>,
    pub violations: Vec<Violation>,
    pub primitive_charges: Vec<PrimitiveCharge>,
    pub messages: u64,
    pub seed: u64,
}

impl Transcript {
    pub fn charge(&mut self, name: &str, charged: usize, actual_rounds: usize) {
        self.primitive_charges.push(PrimitiveCharge {
            name: name.to_string(),
            charged,
            actual_rounds,
        });
        self.charged_rounds += charged;
    }

    /// Appends a later phase.
    pub fn absorb(&mut self, other: Transcript) {
        self.rounds_used += other.rounds_used;
        self.charged_rounds += other.charged_rounds;
        self.max_bits_per_round.extend(other.max_bits_per_round);
        self.violations.extend(other.violations);
        self.primitive_charges.extend(other.primitive_charges);
        self.messages += other.messages;
    }

    pub fn max_bits(&self) -> usize {
        self.max_bits_per_round.iter().copied().max().unwrap_or(0)
    }

    pub fn charge_total(&self, name: &str) -> usize {
        self.primitive_charges
            .iter()
            .filter(|c| c.name == name)
            .map(|c| c.charged)
            .sum()
    }
}

pub enum Outbox<M> {
    Silent,
    /// Up to `slots` messages, each heard by every neighbour.
    Broadcast(Vec<M>),
    /// Per-neighbour messages; only legal in E-CONGEST.
    Directed(Vec<(usize, M)>),
}

pub struct NodeCtx<'a> {
    pub id: usize,
    pub n: usize,
    pub neighbors: &'a [usize],
}

pub trait NodeProgram {
    type State;
    type Msg: Clone;

    fn init(&self, ctx: &NodeCtx) -> Self::State;

    /// One step; `inbox` holds `(sender, message)` pairs from the previous step.
    fn step(
        &self,
        state: &mut Self::State,
        ctx: &NodeCtx,
        round: usize,
        inbox: &[(usize, &Self::Msg)],
        rng: &mut StreamRng,
    ) -> Outbox<Self::Msg>;

    /// A halted node is only woken up by incoming messages.
    fn halted(&self, state: &Self::State) -> bool;

    fn bits(&self, msg: &Self::Msg) -> usize;
}
