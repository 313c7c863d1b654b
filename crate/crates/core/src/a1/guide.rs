//! The level graph and its Hamiltonian cycle (the guide).

use serde::Serialize;

use super::levels::{LevelId, Position};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GuideEdgeKind {
    /// Related by a `(±1, ±a)` move.
    Vertical,
    /// Related by a `(±a, ±1)` move.
    Horizontal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GuideEdge {
    pub from: LevelId,
    pub to: LevelId,
    pub kind: GuideEdgeKind,
    /// Crosses between positions.
    pub special: bool,
}

/// Adjacency between the `a^2` levels. Neighbour lists are multisets: for
/// `a = 2` the two vertical (and two horizontal) neighbours coincide.
#[derive(Debug, Clone)]
pub struct GuideGraph {
    a: u32,
    adj: Vec<Vec<GuideEdge>>,
}

impl GuideGraph {
    pub fn new(a: u32) -> Result<Self> {
        if a < 2 || a % 2 == 1 {
            return Err(Error::Precondition(format!("a = {a} must be even and positive")));
        }
        let flip = |k: u32| if k % 2 == 0 { k + 1 } else { k - 1 };
        let mut adj = vec![Vec::new(); (a * a) as usize];
        for i in 0..a {
            for j in 0..a {
                let from = LevelId::new(i, j);
                let list = &mut adj[(i * a + j) as usize];
                let mut push = |to: LevelId, kind, special| list.push(GuideEdge { from, to, kind, special });
                if i >= 2 {
                    push(LevelId::new(i - 2, j), GuideEdgeKind::Vertical, false);
                }
                if i + 3 <= a {
                    push(LevelId::new(i + 2, j), GuideEdgeKind::Vertical, false);
                }
                if i < 2 {
                    push(LevelId::new(i + a - 2, flip(j)), GuideEdgeKind::Vertical, true);
                }
                if i + 2 >= a {
                    push(LevelId::new(i + 2 - a, flip(j)), GuideEdgeKind::Vertical, true);
                }
                if j >= 2 {
                    push(LevelId::new(i, j - 2), GuideEdgeKind::Horizontal, false);
                }
                if j + 3 <= a {
                    push(LevelId::new(i, j + 2), GuideEdgeKind::Horizontal, false);
                }
                if j < 2 {
                    push(LevelId::new(flip(i), j + a - 2), GuideEdgeKind::Horizontal, true);
                }
                if j + 2 >= a {
                    push(LevelId::new(flip(i), j + 2 - a), GuideEdgeKind::Horizontal, true);
                }
            }
        }
        Ok(GuideGraph { a, adj })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn edges_at(&self, l: LevelId) -> &[GuideEdge] {
        &self.adj[(l.i * self.a + l.j) as usize]
    }

    pub fn edge(&self, from: LevelId, to: LevelId) -> Option<GuideEdge> {
        self.edges_at(from).iter().copied().find(|e| e.to == to)
    }

    /// `(vertical, horizontal)` neighbour counts, with multiplicity.
    pub fn degree(&self, l: LevelId) -> (usize, usize) {
        let e = self.edges_at(l);
        let v = e.iter().filter(|e| e.kind == GuideEdgeKind::Vertical).count();
        (v, e.len() - v)
    }
}

/// A cyclic order of all levels, consecutive levels adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Guide {
    pub a: u32,
    pub order: Vec<LevelId>,
}

impl Guide {
    /// The guide's steps, including the closing one.
    pub fn steps<'a>(&'a self, g: &'a GuideGraph) -> impl Iterator<Item = Option<GuideEdge>> + 'a {
        let n = self.order.len();
        (0..n).map(move |k| g.edge(self.order[k], self.order[(k + 1) % n]))
    }

    pub fn is_hamiltonian(&self, g: &GuideGraph) -> bool {
        let mut seen = vec![false; (self.a * self.a) as usize];
        self.order.len() == seen.len()
            && self.order.iter().all(|l| l.i < self.a && l.j < self.a && !std::mem::replace(&mut seen[(l.i * self.a + l.j) as usize], true))
            && self.steps(g).all(|e| e.is_some())
    }

    pub fn special_moves(&self, g: &GuideGraph) -> usize {
        self.steps(g).filter(|e| e.is_some_and(|e| e.special)).count()
    }
}

/// Cells of an `h x h` grid from `(0, 0)` to `(0, h-1)`, as `(row, col)`.
fn corner_path(h: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity((h * h) as usize);
    let snake_cols = if h % 2 == 0 { h } else { h.saturating_sub(2) };
    for c in 0..snake_cols {
        if c % 2 == 0 {
            out.extend((0..h).map(|r| (r, c)));
        } else {
            out.extend((0..h).rev().map(|r| (r, c)));
        }
    }
    if h % 2 == 1 {
        if h == 1 {
            out.push((0, 0));
        } else {
            // zigzag up the last two columns
            for (k, r) in (0..h).rev().enumerate() {
                if k % 2 == 0 {
                    out.extend([(r, h - 2), (r, h - 1)]);
                } else {
                    out.extend([(r, h - 1), (r, h - 2)]);
                }
            }
        }
    }
    out
}

/// The guide: positions A, B, C, D in turn, each covered as a grid path,
/// linked by four special moves. It starts at `L(0,0)` and ends at
/// `L(a-2,1)`.
pub fn build_guide(a: u32) -> Result<Guide> {
    if a < 2 || a % 2 == 1 {
        return Err(Error::Precondition(format!("a = {a} must be even and positive")));
    }
    let h = a / 2;
    let path = corner_path(h);
    let mut order = Vec::with_capacity((a * a) as usize);
    // A and B run from column 0 to column h-1 along row 0
    for (r, c) in &path {
        order.push(LevelId::new(2 * r, 2 * c));
    }
    for (r, c) in &path {
        order.push(LevelId::new(2 * r + 1, 2 * c));
    }
    // C and D run from (h-1, h-1) to (h-1, 0): the mirrored path
    for (r, c) in &path {
        order.push(LevelId::new(2 * (h - 1 - r) + 1, 2 * (h - 1 - c) + 1));
    }
    for (r, c) in &path {
        order.push(LevelId::new(2 * (h - 1 - r), 2 * (h - 1 - c) + 1));
    }
    let guide = Guide { a, order };
    let g = GuideGraph::new(a)?;
    if !guide.is_hamiltonian(&g) || guide.special_moves(&g) != 4 {
        return Err(Error::Construction(format!("guide for a = {a} is not a Hamiltonian cycle")));
    }
    debug_assert_eq!(guide.order[0].position(), Position::A);
    Ok(guide)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::a1::levels::level_partition;
    use crate::board::{Geometry, MoveSpec};
    use crate::BoardSpec;
    use std::collections::BTreeSet;

    #[test]
    fn corner_paths_cover_grid() {
        for h in 1..8 {
            let p = corner_path(h);
            assert_eq!(p.len(), (h * h) as usize);
            assert_eq!(p.first(), Some(&(0, 0)));
            assert_eq!(p.last(), Some(&(0, h - 1)));
            let set: BTreeSet<_> = p.iter().collect();
            assert_eq!(set.len(), p.len());
            assert!(p.windows(2).all(|w| w[0].0.abs_diff(w[1].0) + w[0].1.abs_diff(w[1].1) == 1));
        }
    }

    #[test]
    fn guide_endpoints() {
        let g = build_guide(6).unwrap();
        assert_eq!(g.order[0], LevelId::new(0, 0));
        assert_eq!(*g.order.last().unwrap(), LevelId::new(4, 1));
        let k = g.order.iter().position(|&l| l == LevelId::new(0, 4)).unwrap();
        assert_eq!(g.order[k + 1], LevelId::new(1, 0));
    }

    /// Level adjacency read off the board itself agrees with the rules.
    #[test]
    fn rules_match_board_moves() {
        for a in [2u32, 4, 6] {
            let p = level_partition(a).unwrap();
            let n = p.side();
            let geo = Geometry::new(BoardSpec::square(n, 2).unwrap(), MoveSpec::new(a, 1).unwrap());
            let mut seen = BTreeSet::new();
            for v in 0..geo.volume() as u32 {
                let c = geo.board().coord_of(v);
                let (x, y) = (c.0[0] as u32, c.0[1] as u32);
                let l = p.locate(x, y).1;
                for w in geo.neighbors(v) {
                    let d = geo.board().coord_of(w);
                    let m = p.locate(d.0[0] as u32, d.0[1] as u32).1;
                    if m != l {
                        let vertical = d.0[1].abs_diff(c.0[1]) == a as u64;
                        seen.insert((l, m, vertical));
                    }
                }
            }
            let g = GuideGraph::new(a).unwrap();
            let mut rules = BTreeSet::new();
            for l in p.levels() {
                for e in g.edges_at(l) {
                    rules.insert((e.from, e.to, e.kind == GuideEdgeKind::Vertical));
                }
            }
            assert_eq!(seen, rules, "a = {a}");
        }
    }
}
