//! Joining `(2, 5)` blocks into strips and strips into rectangles.

use std::collections::HashMap;

use super::{has_links_hv, library_block, mv25, SIDES};
use crate::board::{BoardSpec, Geometry, VertexId};
use crate::error::{Error, Result};
use crate::merge::{Bridge, Cover};
use crate::tour::{verify_tour, Tour};

/// Writes `k` as a sum of `parts` with as few terms as possible; terms are
/// listed in the order of `parts`.
pub fn decompose(k: u32, parts: &[u32]) -> Option<Vec<u32>> {
    let k = k as usize;
    let mut best: Vec<Option<(u32, usize)>> = vec![None; k + 1];
    best[0] = Some((0, usize::MAX));
    for v in 1..=k {
        for (i, &p) in parts.iter().enumerate() {
            let p = p as usize;
            if p == 0 || p > v {
                continue;
            }
            if let Some((c, _)) = best[v - p] {
                if best[v].is_none_or(|(bc, _)| c + 1 < bc) {
                    best[v] = Some((c + 1, i));
                }
            }
        }
    }
    best[k]?;
    let mut counts = vec![0usize; parts.len()];
    let mut v = k;
    while v > 0 {
        let (_, i) = best[v].unwrap();
        counts[i] += 1;
        v -= parts[i] as usize;
    }
    Some(parts.iter().zip(&counts).flat_map(|(&p, &c)| std::iter::repeat_n(p, c)).collect())
}

struct Grid {
    geo: Geometry,
    cover: Cover,
}

impl Grid {
    fn new(w: u32, h: u32) -> Result<Self> {
        let geo = Geometry::new(BoardSpec::rect(w, h)?, mv25());
        Ok(Grid { cover: Cover::new(geo.clone()), geo })
    }

    fn at(&self, x: i64, y: i64) -> Result<VertexId> {
        self.geo.index_xy(x, y).ok_or_else(|| Error::Construction(format!("({x},{y}) is off the board")))
    }

    fn place(&mut self, t: &Tour, ox: i64, oy: i64) -> Result<()> {
        let cyc: Vec<VertexId> =
            t.coords().map(|c| self.at(c.0[0] + ox, c.0[1] + oy)).collect::<Result<_>>()?;
        self.cover.add_cycle(&cyc)
    }

    fn bridge(&mut self, pts: [(i64, i64); 4], what: &str) -> Result<()> {
        let v: Vec<VertexId> = pts.iter().map(|&(x, y)| self.at(x, y)).collect::<Result<_>>()?;
        self.cover
            .apply_bridge(&Bridge::new(v[0], v[1], v[2], v[3]))
            .map_err(|e| Error::Construction(format!("{what}: {e}")))
    }

    /// Joins the block ending at column `x` (exclusive) to the block
    /// starting there; both start at row `y`.
    fn join_h(&mut self, x: i64, y: i64) -> Result<()> {
        self.bridge([(x - 1, y), (x - 3, y + 5), (x + 4, y + 2), (x + 2, y + 7)], "link H join")
    }

    /// Joins the strip ending at row `y` (exclusive) to the strip above.
    fn join_v(&mut self, y: i64) -> Result<()> {
        self.bridge([(0, y - 1), (5, y - 3), (2, y + 4), (7, y + 2)], "link V join")
    }

    fn finish(self) -> Result<Tour> {
        let t = self.cover.into_tour()?;
        let report = verify_tour(&t);
        if !report.is_valid_tour() {
            return Err(Error::Construction(format!("assembly: {}", report.summary())));
        }
        Ok(t)
    }
}

fn check_block(t: &Tour, w: u32, h: u32) -> Result<()> {
    if t.mv() != mv25() || t.board().dims() != [w, h] {
        return Err(Error::Precondition(format!("expected a (2,5) tour of {w}x{h}, got {}", t.board())));
    }
    if w < 8 || h < 8 {
        return Err(Error::Precondition(format!("block {w}x{h} is too small to join")));
    }
    Ok(())
}

/// Blocks of equal height joined left to right through link H of every
/// block but the first.
pub fn join_strip(blocks: &[Tour]) -> Result<Tour> {
    let Some(first) = blocks.first() else {
        return Err(Error::Precondition("no blocks".into()));
    };
    let h = first.board().dims()[1];
    let w: u32 = blocks.iter().map(|b| b.board().dims()[0]).sum();
    let mut g = Grid::new(w, h)?;
    let mut x = 0i64;
    for (i, b) in blocks.iter().enumerate() {
        check_block(b, b.board().dims()[0], h)?;
        g.place(b, x, 0)?;
        if i > 0 {
            g.join_h(x, 0)?;
        }
        x += b.board().dims()[0] as i64;
    }
    g.finish()
}

/// Strips of equal width joined bottom to top through link V of every
/// strip but the lowest.
pub fn stack_strips(strips: &[Tour]) -> Result<Tour> {
    let Some(first) = strips.first() else {
        return Err(Error::Precondition("no strips".into()));
    };
    let w = first.board().dims()[0];
    let h: u32 = strips.iter().map(|s| s.board().dims()[1]).sum();
    let mut g = Grid::new(w, h)?;
    let mut y = 0i64;
    for (i, s) in strips.iter().enumerate() {
        check_block(s, w, s.board().dims()[1])?;
        g.place(s, 0, y)?;
        if i > 0 {
            g.join_v(y)?;
        }
        y += s.board().dims()[1] as i64;
    }
    g.finish()
}

/// A tour of `[k] x [n]` from tours of `[m1] x [n]` and `[m2] x [n]`; the
/// copies of `p1` come first, so the result inherits links H and V from
/// the leftmost block.
pub fn assemble_strip(n: u32, p1: &Tour, p2: &Tour, k: u32) -> Result<Tour> {
    let (m1, m2) = (p1.board().dims()[0], p2.board().dims()[0]);
    check_block(p1, m1, n)?;
    check_block(p2, m2, n)?;
    let parts = decompose(k, &[m1, m2])
        .ok_or_else(|| Error::Unsupported(format!("{k} is not a sum of {m1}s and {m2}s")))?;
    if !has_links_hv(if parts[0] == m1 { p1 } else { p2 }) {
        return Err(Error::MissingLink("H and V in the leftmost block".into()));
    }
    let blocks: Vec<Tour> = parts.iter().map(|&m| if m == m1 { p1.clone() } else { p2.clone() }).collect();
    join_strip(&blocks)
}

/// A tour of `[k] x [l]` tiled by blocks whose sides come from `sides`.
pub fn assemble_rect_with(
    k: u32,
    l: u32,
    sides: &[u32],
    block: &mut dyn FnMut(u32, u32) -> Result<Tour>,
) -> Result<Tour> {
    let widths = decompose(k, sides).ok_or_else(|| Error::Unsupported(format!("{k} is not a sum of {sides:?}")))?;
    let heights = decompose(l, sides).ok_or_else(|| Error::Unsupported(format!("{l} is not a sum of {sides:?}")))?;
    let mut memo: HashMap<(u32, u32), Tour> = HashMap::new();
    let mut g = Grid::new(k, l)?;
    let mut y = 0i64;
    for (j, &h) in heights.iter().enumerate() {
        let mut x = 0i64;
        for (i, &w) in widths.iter().enumerate() {
            if !memo.contains_key(&(w, h)) {
                let t = block(w, h)?;
                check_block(&t, w, h)?;
                memo.insert((w, h), t);
            }
            g.place(&memo[&(w, h)], x, y)?;
            if i > 0 {
                g.join_h(x, y)?;
            }
            x += w as i64;
        }
        if j > 0 {
            g.join_v(y)?;
        }
        y += h as i64;
    }
    g.finish()
}

/// A tour of `[k] x [l]` from blocks of sides 20 and 154.
pub fn assemble_rect(k: u32, l: u32) -> Result<Tour> {
    assemble_rect_with(k, l, &SIDES, &mut library_block)
}
