//! Exact graph algorithms and structural checks for small-graph corpus
//! verification: clique and chromatic solvers, the ⌈(ω+Δ+1)/2⌉ bound, forbidden
//! induced configurations, odd holes, buoys, expansions, and odd-hole
//! transversals.
//!
//! The companion CLI crate wires these into a corpus runner; everything here
//! is a pure function over immutable [`Graph`]s and safe to call from
//! concurrent workers.

mod bits;
pub mod budget;
pub mod buoys;
pub mod canon;
pub mod clique;
pub mod codec;
pub mod coloring;
pub mod enumerate;
pub mod exec;
pub mod expansion;
pub mod graph;
pub mod holes;
pub mod invariants;
pub mod patterns;
pub mod transversal;

pub use budget::{Budget, BudgetExceeded};
pub use graph::{Graph, GraphError, VertexSet, DEFAULT_VERTEX_CAP};

/// Default bound on enumerated hole length: min(n, 9). For P5- or P6-free
/// inputs every hole has length 5, so this is exhaustive there; elsewhere it
/// is a configurable analysis horizon.
pub fn default_max_hole_len(n: usize) -> usize {
    n.min(9)
}
