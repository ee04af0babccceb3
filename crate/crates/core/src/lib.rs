//! Conflict-free colourings of vertex t-subsets in hypergraphs.
//!
//! The crate covers the abstract machinery (hypergraphs, validity checkers
//! for every colouring notion, exact small-instance solvers), concrete
//! geometric range spaces (intervals, axis-parallel rectangles, discs), the
//! colouring algorithms that turn vertex colourings into t-subset
//! colourings, and the lower-bound families used to certify them.

pub mod cli;
pub mod colouring;
pub mod colours;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod hypergraph;
pub mod validate;
pub mod verify;

pub use colours::{SubsetColouring, Token, VertexColouring};
pub use error::{Error, Result};
pub use hypergraph::{Graph, Hypergraph};
pub use validate::{validate, validate_subset_cf, Notion, Verdict};
