//! Fractional dominating-tree and spanning-tree packings, exact connectivity
//! oracles, and a synchronous CONGEST simulator to run them on.

pub mod apps;
pub mod cds;
pub mod cli;
pub mod error;
pub mod graph;
pub mod oracles;
pub mod packing;
pub mod rng;
pub mod sim;
pub mod st;
pub mod tester;

pub use error::{Error, Result};
pub use graph::{EdgeId, Graph};
pub use packing::{Tree, TreePacking};
