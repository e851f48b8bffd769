//! Simple graphs, named cage catalog, girth/regularity checks, exact
//! independence polynomials and occupancy fractions.

mod graph;
mod hardcore;
mod named;

pub use graph::{Graph, GraphError};
pub use hardcore::moore_order;
pub use named::{named, NamedGraph, NamedGraphId};

/// Guard for the exponential independent-set computations.
pub const MAX_VERTICES: usize = 40;
