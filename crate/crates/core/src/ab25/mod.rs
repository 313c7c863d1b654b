//! Tours of the `(2, 5)` leaper assembled from rectangular blocks.
//!
//! Every block carries link H `{(4,2),(2,7)}`, link V `{(2,4),(7,2)}` and,
//! in each corner, an image of `{(0,2),(5,0)}`. Blocks are joined left to
//! right through link H and strips bottom to top through link V, so the
//! assembled board keeps both links in its bottom-left block and the
//! corner edges in its four corners.

mod assemble;
mod brick;

use std::time::Duration;

pub use assemble::{assemble_rect, assemble_rect_with, assemble_strip, decompose, join_strip, stack_strips};
pub use brick::{brick_cover, regenerate_brick, strip_tour};

use crate::board::{BoardSpec, Edge, MoveSpec, Symmetry};
use crate::error::{Error, Result};
use crate::format::{from_text, to_text};
use crate::solver::{ham_cycle_search, SearchConfig};
use crate::tour::{verify_tour, Tour};

pub fn mv25() -> MoveSpec {
    MoveSpec::new(2, 5).unwrap()
}

pub fn link_h() -> Edge {
    Edge::xy((4, 2), (2, 7))
}

pub fn link_v() -> Edge {
    Edge::xy((2, 4), (7, 2))
}

/// The two orientations of the corner edge in each corner of a `w x h`
/// board: bottom-left, bottom-right, top-left, top-right.
pub fn corner_edges(w: u32, h: u32) -> [[Edge; 2]; 4] {
    let (w, h) = (w as i64, h as i64);
    let img = |flip_x: bool, flip_y: bool, p: (i64, i64), q: (i64, i64)| {
        let f = |(x, y): (i64, i64)| (if flip_x { w - 1 - x } else { x }, if flip_y { h - 1 - y } else { y });
        Edge::xy(f(p), f(q))
    };
    [(false, false), (true, false), (false, true), (true, true)].map(|(fx, fy)| {
        [img(fx, fy, (0, 2), (5, 0)), img(fx, fy, (2, 0), (0, 5))]
    })
}

/// Link H, link V and the first orientation of every corner edge.
pub fn block_requirements(w: u32, h: u32) -> Vec<Edge> {
    let mut out = vec![link_h(), link_v()];
    out.extend(corner_edges(w, h).iter().map(|c| c[0].clone()));
    out
}

fn has(t: &Tour, e: &Edge) -> bool {
    let (p, q) = e.ends();
    t.board().contains(&p.0) && t.board().contains(&q.0) && t.has_edge(p, q)
}

/// Canonical links H and V.
pub fn has_links_hv(t: &Tour) -> bool {
    has(t, &link_h()) && has(t, &link_v())
}

/// An image of `{(0,2),(5,0)}` in each corner.
pub fn has_corner_edges(t: &Tour) -> bool {
    let d = t.board().dims();
    corner_edges(d[0], d[1]).iter().all(|c| c.iter().any(|e| has(t, e)))
}

/// A verified `(2, 5)` tour with links H, V and all four corner edges.
pub fn is_linked_block(t: &Tour) -> bool {
    t.mv() == mv25() && verify_tour(t).is_valid_tour() && has_links_hv(t) && has_corner_edges(t)
}

/// Transpose of a 2-D tour; it swaps links H and V.
pub fn transpose(t: &Tour) -> Tour {
    t.transformed(Symmetry { transpose: true, flip_x: false, flip_y: false })
}

/// The stored linked `(2, 5)` tour of `[14]^2`.
pub fn base_14() -> Result<Tour> {
    let t = from_text(&crate::cache::load(crate::cache::BASE25_14, include_str!("../../data/base25_14.txt"))?)?;
    if t.board().dims() != [14, 14] || !is_linked_block(&t) {
        return Err(Error::Construction("stored 14x14 base is not a linked block".into()));
    }
    Ok(t)
}

/// Recomputes the 14x14 base with the solver.
pub fn regenerate_base_14() -> Result<Tour> {
    solver_block(14, 14, Duration::from_secs(120))
}

/// A linked block found by the solver.
pub fn solver_block(w: u32, h: u32, timeout: Duration) -> Result<Tour> {
    let board = BoardSpec::rect(w, h)?;
    let cfg = SearchConfig::default().with_required(block_requirements(w, h)).with_timeout(timeout);
    let t = ham_cycle_search(&board, mv25(), &cfg)?;
    if !is_linked_block(&t) {
        return Err(Error::Construction(format!("solver block {w}x{h} lacks a link")));
    }
    Ok(t)
}

/// Text form of the 14x14 base, as stored.
pub fn base_14_text(t: &Tour) -> String {
    to_text(t)
}

/// Sides available as block sides for square assembly.
pub const SIDES: [u32; 2] = [20, 154];

/// Linked `(2, 5)` block of `[w] x [h]` for `w, h` in [`SIDES`].
pub fn library_block(w: u32, h: u32) -> Result<Tour> {
    match (w, h) {
        (20, h) if h % 10 == 0 || h % 10 == 4 => strip_tour(h),
        (w, 20) => library_block(20, w).map(|t| transpose(&t)),
        (154, 154) => {
            let base = base_14()?;
            assemble_rect_with(154, 154, &[14], &mut |_, _| Ok(base.clone()))
        }
        _ => Err(Error::Unsupported(format!("no (2,5) block of {w}x{h}"))),
    }
}

/// A `(2, 5)` tour of `[n]^2` containing links alpha and beta, assembled
/// from blocks of sides 20 and 154.
pub fn tour_25(n: u32) -> Result<Tour> {
    if n % 2 == 1 {
        return Err(Error::Unsupported(format!("n = {n} is odd")));
    }
    if decompose(n, &SIDES).is_none() {
        return Err(Error::Unsupported(format!("n = {n} is not a sum of 20s and 154s")));
    }
    let t = assemble_rect(n, n)?;
    let board = t.board().clone();
    for kind in [crate::links::LinkKind::Alpha, crate::links::LinkKind::Beta] {
        if crate::links::contains_link(&t, kind)?.is_none() {
            return Err(Error::MissingLink(format!("{kind} in the (2,5) tour of {board}")));
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_base_matches_solver() {
        let t = base_14().unwrap();
        assert_eq!(t.len(), 196);
        assert_eq!(regenerate_base_14().unwrap().vertices(), t.vertices());
    }

    #[test]
    fn requirements_are_legal_and_disjoint() {
        for (w, h) in [(14, 14), (20, 10), (20, 154)] {
            let req = block_requirements(w, h);
            let mut seen = std::collections::HashSet::new();
            for e in &req {
                assert!(e.is_legal(mv25()));
                let (p, q) = e.ends();
                assert!(seen.insert(p.clone()) && seen.insert(q.clone()), "{e} shares a vertex");
            }
        }
    }

    #[test]
    fn transpose_swaps_links() {
        let t = base_14().unwrap();
        let tt = transpose(&t);
        assert!(is_linked_block(&tt));
    }

    #[test]
    fn odd_and_unreachable_sides() {
        assert!(tour_25(13).is_err());
        assert!(tour_25(30).is_err());
    }
}
