//! Explicit extremal two-colorings for Ramsey lower bounds on fans, wheels
//! and kipases, exact detectors for the forbidden patterns, and
//! certificates tying the two together.

pub mod bitset;
pub mod certify;
pub mod coloring;
pub mod constructions;
pub mod detect;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod pattern;
pub mod witnesses;

pub use bitset::VertexSet;
pub use coloring::{Color, TwoColoring};
pub use error::{Error, Result};
pub use graph::Graph;
pub use pattern::PatternSpec;
