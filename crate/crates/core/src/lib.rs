//! Cycle-length spectra of small graphs and exhaustive checking of extremal
//! edge bounds that force cycles of prescribed lengths.
//!
//! Graphs hold at most 64 vertices as bitset adjacency rows. The spectrum of a
//! graph is the set of its cycle lengths, each with a witness cycle. On top of
//! that sit block decompositions, the extremal constructions, a verdict engine
//! for each bound, and a command-line front end.

pub mod blocks;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod iso;
pub mod named;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use spectrum::{cycle_spectrum, CycleSpectrum};
