//! Grid-obstacle representations of graphs.
//!
//! Builds 2D and 3D grid-obstacle representations (blocking and
//! non-blocking), checks them against monotone lattice-path semantics, and
//! constructs the staircase-guarding polygon for a planar bipartite graph
//! together with an exact guard solver.

pub mod domination;
pub mod error;
pub mod generate;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod guarding;
pub mod layout;
pub mod monotone;
pub mod obstacle;
pub mod planarity;
pub mod svg;
pub mod visibility;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph};
pub use planarity::{check_planarity, PlanarEmbedding};
