//! Generation, surgery, and statistics for knight's tours and tourneys.
//!
//! A *tourney* is a vertex-disjoint cycle cover of the knight's graph; a
//! closed knight's tour is a tourney with a single cycle. This crate
//! builds tourneys several ways (Warnsdorff random walks, an edge-neuron
//! network, deterministic block tilings, concentric braids, diamond
//! four-covers), merges their cycles into closed tours by switching
//! *rails* along a spanning forest of the rail graph, shatters tours
//! back into tourneys, and obfuscates tours so that move statistics no
//! longer betray the generator. Canonical text, SVG, and CSV output live
//! in [`text`], [`svg`], and [`report`].
//!
//! Batch helpers in [`batch`] fan independent seeded trials out over
//! rayon when the default `parallel` feature is enabled and fall back to
//! a sequential loop without it.

pub mod batch;
pub mod board;
pub mod cover;
mod error;
pub mod generators;
pub mod rail;
pub mod report;
pub mod rng;
pub mod stats;
pub mod surgery;
pub mod svg;
pub mod text;

#[cfg(test)]
pub(crate) mod testutil;

pub use board::{Board, Move};
pub use cover::CycleCover;
pub use error::{Error, Result};
pub use generators::{Algorithm, GeneratorConfig};
pub use rail::{find_rails, is_rail_present, rail_cells, rails_containing_edge, switch_rail, Rail};
pub use rng::Rng;
pub use surgery::{
    build_rail_graph, join, join_to_tour, obfuscate, shatter, spanning_forest, JoinStats,
    JoinToTour, RailGraph, ShatterStats, DEFAULT_JOIN_ROUNDS, DEFAULT_OBFUSCATE_ATTEMPTS,
    DEFAULT_SHATTER_ITERS,
};
