//! Maximal outerplanar graphs (MOPs): construction, metrics, the
//! central-cut-spine, a rainbow edge colouring with at most `3 * rad(G)`
//! colours, and exact brute-force oracles that check all of it.

pub mod coloring;
pub mod dot;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod metrics;
pub mod mop;
pub mod spine;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{EdgeColoring, EdgeId, Graph};
pub use mop::{CanonicalMop, MopGraph};
