//! Designated corner edges ("links") used as one half of a concatenation
//! bridge.
//!
//! Links A, B, H and V are written with `a` the long leg and `b` the short
//! leg. Links alpha and beta are written with `a` the short leg: the short
//! leg is the modulus of the congruence classes when lifting to higher
//! dimensions.

use std::fmt;

use serde::Serialize;

use crate::board::{BoardSpec, Coord, Edge, MoveSpec, Symmetry};
use crate::error::{Error, Result};
use crate::tour::Tour;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LinkKind {
    A,
    B,
    Alpha,
    Beta,
    H,
    V,
}

impl LinkKind {
    pub const ALL: [LinkKind; 6] = [LinkKind::A, LinkKind::B, LinkKind::Alpha, LinkKind::Beta, LinkKind::H, LinkKind::V];

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(LinkKind::A),
            "b" => Ok(LinkKind::B),
            "alpha" => Ok(LinkKind::Alpha),
            "beta" => Ok(LinkKind::Beta),
            "h" => Ok(LinkKind::H),
            "v" => Ok(LinkKind::V),
            other => Err(Error::Precondition(format!("unknown link `{other}`"))),
        }
    }
}

impl fmt::Display for LinkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LinkKind::A => "A",
            LinkKind::B => "B",
            LinkKind::Alpha => "alpha",
            LinkKind::Beta => "beta",
            LinkKind::H => "H",
            LinkKind::V => "V",
        };
        f.write_str(s)
    }
}

/// Which image of a link was found in a tour.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkMatch {
    pub edge: Edge,
    pub symmetry: Symmetry,
}

/// The canonical edge of a link on a 2-D board.
pub fn link_edge(kind: LinkKind, board: &BoardSpec, mv: MoveSpec) -> Result<Edge> {
    if board.ndim() != 2 {
        return Err(Error::Precondition(format!("link {kind} is defined on 2-D boards only")));
    }
    let (long, short) = (mv.long() as i64, mv.short() as i64);
    let n = board.dims()[0] as i64;
    let edge = match kind {
        LinkKind::A => {
            let a = long;
            Edge::xy((a - 1, 1), (a - 2, a + 1))
        }
        LinkKind::B => Edge::xy((long, 0), (0, 1)),
        LinkKind::Alpha => {
            let (a, b) = (short, long);
            Edge::xy((0, b), (a, 0))
        }
        LinkKind::Beta => {
            let (a, b) = (short, long);
            Edge::xy((n - 1, a), (n - b - 1, 0))
        }
        LinkKind::H => {
            let (a, b) = (long, short);
            Edge::xy((a - 1, b), (a - b - 1, a + b))
        }
        LinkKind::V => {
            let (a, b) = (long, short);
            Edge::xy((b, a - 1), (a + b, a - b - 1))
        }
    };
    let (p, q) = edge.ends();
    if !board.contains(&p.0) || !board.contains(&q.0) {
        return Err(Error::Precondition(format!("link {kind} {edge} does not fit on board {board}")));
    }
    if !edge.is_legal(mv) {
        return Err(Error::Precondition(format!("link {kind} {edge} is not a ({mv}) move")));
    }
    Ok(edge)
}

/// Every accepted image of a link, canonical first.
///
/// H and V accept all symmetries of the rectangle. Alpha and beta accept,
/// on square boards, the reflection across the diagonal through their own
/// corner. A and B are exact.
pub fn link_images(kind: LinkKind, board: &BoardSpec, mv: MoveSpec) -> Result<Vec<LinkMatch>> {
    let edge = link_edge(kind, board, mv)?;
    let (w, h) = (board.dims()[0], board.dims()[1]);
    let syms: Vec<Symmetry> = match kind {
        LinkKind::A | LinkKind::B => vec![Symmetry::IDENTITY],
        LinkKind::H | LinkKind::V => Symmetry::all().filter(|s| s.image_dims(w, h) == (w, h)).collect(),
        LinkKind::Alpha if w == h => {
            vec![Symmetry::IDENTITY, Symmetry { transpose: true, flip_x: false, flip_y: false }]
        }
        LinkKind::Beta if w == h => {
            vec![Symmetry::IDENTITY, Symmetry { transpose: true, flip_x: true, flip_y: true }]
        }
        LinkKind::Alpha | LinkKind::Beta => vec![Symmetry::IDENTITY],
    };
    let mut out: Vec<LinkMatch> = Vec::new();
    for s in syms {
        let (p, q) = edge.ends();
        let (px, py) = s.apply(p.0[0], p.0[1], w, h);
        let (qx, qy) = s.apply(q.0[0], q.0[1], w, h);
        let image = Edge::xy((px, py), (qx, qy));
        if !out.iter().any(|m| m.edge == image) {
            out.push(LinkMatch { edge: image, symmetry: s });
        }
    }
    Ok(out)
}

/// Finds the first accepted image of `kind` among the steps of `t`.
pub fn contains_link(t: &Tour, kind: LinkKind) -> Result<Option<LinkMatch>> {
    let images = link_images(kind, t.board(), t.mv())?;
    let pos = t.positions();
    let len = t.len() as u32;
    let board = t.board();
    Ok(images.into_iter().find(|m| {
        let (p, q) = m.edge.ends();
        let (Some(u), Some(v)) = (board.index_of(&p.0), board.index_of(&q.0)) else {
            return false;
        };
        let (i, j) = (pos[u as usize], pos[v as usize]);
        if i == u32::MAX || j == u32::MAX || len < 2 {
            return false;
        }
        (i + 1) % len == j || (j + 1) % len == i
    }))
}

/// Whether the tour contains the canonical edge of `kind` exactly.
pub fn contains_exact_link(t: &Tour, kind: LinkKind) -> Result<bool> {
    let edge = link_edge(kind, t.board(), t.mv())?;
    let (p, q) = edge.ends();
    Ok(t.has_edge(p, q))
}

/// Coordinates of the two vertices of a link edge.
pub fn link_coords(kind: LinkKind, board: &BoardSpec, mv: MoveSpec) -> Result<(Coord, Coord)> {
    let e = link_edge(kind, board, mv)?;
    let (p, q) = e.ends();
    Ok((p.clone(), q.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concrete_links_are_legal() {
        let b = BoardSpec::square(30, 2).unwrap();
        for (a, bb) in [(2, 1), (4, 1), (2, 3), (2, 5)] {
            let mv = MoveSpec::new(a, bb).unwrap();
            for kind in LinkKind::ALL {
                if let Ok(e) = link_edge(kind, &b, mv) {
                    assert!(e.is_legal(mv), "{kind} for ({a},{bb})");
                }
            }
        }
    }

    #[test]
    fn link_values() {
        let b = BoardSpec::square(14, 2).unwrap();
        let k21 = MoveSpec::new(2, 1).unwrap();
        assert_eq!(link_edge(LinkKind::B, &b, k21).unwrap(), Edge::xy((2, 0), (0, 1)));
        assert_eq!(link_edge(LinkKind::A, &b, k21).unwrap(), Edge::xy((1, 1), (0, 3)));
        let k25 = MoveSpec::new(2, 5).unwrap();
        assert_eq!(link_edge(LinkKind::H, &b, k25).unwrap(), Edge::xy((4, 2), (2, 7)));
        assert_eq!(link_edge(LinkKind::V, &b, k25).unwrap(), Edge::xy((2, 4), (7, 2)));
        assert_eq!(link_edge(LinkKind::Alpha, &b, k25).unwrap(), Edge::xy((0, 5), (2, 0)));
        assert_eq!(link_edge(LinkKind::Beta, &b, k25).unwrap(), Edge::xy((13, 2), (8, 0)));
        let k23 = MoveSpec::new(2, 3).unwrap();
        assert_eq!(link_edge(LinkKind::Beta, &b, k23).unwrap(), Edge::xy((13, 2), (10, 0)));
    }

    #[test]
    fn h_and_v_coincide_on_squares() {
        let b = BoardSpec::square(14, 2).unwrap();
        let mv = MoveSpec::new(2, 5).unwrap();
        let h: Vec<Edge> = link_images(LinkKind::H, &b, mv).unwrap().into_iter().map(|m| m.edge).collect();
        let v = link_edge(LinkKind::V, &b, mv).unwrap();
        assert!(h.contains(&v));
        assert_eq!(h.len(), 8);
        let rect = BoardSpec::rect(20, 10).unwrap();
        assert_eq!(link_images(LinkKind::H, &rect, mv).unwrap().len(), 4);
    }

    #[test]
    fn undefined_link_reports_error() {
        let b = BoardSpec::square(4, 2).unwrap();
        let mv = MoveSpec::new(2, 5).unwrap();
        assert!(link_edge(LinkKind::Beta, &b, mv).is_err());
    }
}
