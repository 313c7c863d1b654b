//! Tours of the `(a, 1)` leaper on square boards, `a` even.

mod base;
mod grow;
mod guide;
mod levels;
mod rim;

pub use base::{base_case_trace, base_case_tour, BaseTrace, LevelVisit};
pub use grow::{a1_decompose, a1_tour, a1_tour_unchecked, extend_by_rim, replicate_square};
pub use guide::{build_guide, Guide, GuideEdge, GuideEdgeKind, GuideGraph};
pub use levels::{level_partition, BlockId, LevelId, LevelPartition, Position, Shade, BLOCKS};
pub use rim::{colour_label, in_middle, rim_colour_cycles};

use crate::board::{Coord, Edge};
use crate::tour::Tour;

/// The `a^2` edges `{(i,j), (i+a, j^1)}` between the two bottom-left blocks.
pub fn structured_edges(a: u32) -> Vec<Edge> {
    let a = a as i64;
    (0..a).flat_map(|i| (0..a).map(move |j| Edge::xy((i, j), (i + a, j ^ 1)))).collect()
}

/// Whether the tour contains every structured edge.
pub fn is_structured(t: &Tour, a: u32) -> bool {
    structured_edges(a).iter().all(|e| {
        let (p, q): (&Coord, &Coord) = e.ends();
        t.has_edge(p, q)
    })
}
