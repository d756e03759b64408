//! Harmonious total colourings of complete graphs and complete multigraphs.
//!
//! A total colouring is harmonious when it is proper and every unordered
//! pair `{c(v), c(e)}` with `v ∈ e` appears at most once. This crate builds
//! optimal such colourings of `λK_n`, verifies arbitrary colourings, computes
//! the counting lower bound and certifies small values by exhaustive search.

pub mod bounds;
pub mod colouring;
pub mod constructors;
pub mod edge_factor;
pub mod error;
pub mod graph;
pub mod io;
pub mod solver;
pub mod verify;

pub use bounds::{counting_lower_bound, expected_ht, BoundReport};
pub use colouring::{restrict, ColourId, Embedding, Palette, TotalColouring};
pub use constructors::{colour_any, construct_complete, construct_multigraph};
pub use error::{Error, Result};
pub use graph::{complete_graph, complete_multigraph, levi_graph, EdgeId, Multigraph, VertexId};
pub use solver::{search, Certificate, Outcome, SearchConfig};
pub use verify::{verify, verify_via_levi, Mode, VerificationReport, Violation};
