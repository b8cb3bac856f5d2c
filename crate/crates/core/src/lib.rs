//! Rainbow cycles in flip graphs.
//!
//! A flip graph has combinatorial objects as vertices and local changes
//! ("flips") as arcs. Every arc carries the labels of what enters the object.
//! An r-rainbow cycle is a cycle through distinct objects on which every
//! label enters exactly r times.
//!
//! Five families are covered: triangulations of a convex polygon, plane
//! spanning trees on a point set, non-crossing perfect matchings,
//! permutations under transpositions and k-subsets under element exchange.
//! Each family provides explicit constructions, a flip rule consumed by the
//! shared verifier [`verify_rainbow`], and an oracle for the exhaustive
//! search engine in [`search`].

pub mod cycle;
pub mod error;
pub mod geometry;
pub mod label;
pub mod matchings;
pub mod permutations;
pub mod record;
pub mod search;
pub mod spanning_trees;
pub mod subsets;
pub mod triangulations;

pub use cycle::{verify_rainbow, FlipFamily, LabeledFlipCycle, RainbowReport, Violation};
pub use error::{Error, Result};
pub use label::{cyclic_dist, sigma, Label};
pub use record::{CycleRecord, Family, Params, RecordFamily, StateRecord};
pub use search::{
    connected_components, exhaustive_rainbow_search, Anchor, FlipGraphOracle, SearchConfig, SearchOutcome,
    SearchVerdict,
};
