//! Closed leaper tours on rectangular boards of any dimension.

pub mod a1;
pub mod ab23;
pub mod ab25;
pub mod board;
pub mod cache;
pub mod construct;
mod dsu;
pub mod error;
pub mod feasibility;
pub mod format;
pub mod links;
pub mod merge;
pub mod multidim;
pub mod render;
pub mod solver;
pub mod tour;

pub use board::{BoardSpec, Coord, Edge, Geometry, MoveSpec, Symmetry, VertexId};
pub use construct::construct;
pub use error::{Error, Result};
pub use feasibility::{feasibility_check, Feasibility, Obstruction};
pub use links::{contains_link, LinkKind, LinkMatch};
pub use merge::{compound, find_bridge, merge_all, Bridge, Cover, CycleSet, EdgeSet};
pub use tour::{verify_tour, Tour, VerifyReport};
