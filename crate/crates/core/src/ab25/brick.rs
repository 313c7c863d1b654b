//! The `[20] x [10]` brick and the strips `[20] x [10k]`, `[20] x [10k+4]`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::{block_requirements, is_linked_block, mv25};
use crate::board::{BoardSpec, Edge, Geometry};
use crate::error::{Error, Result};
use crate::merge::{merge_all, CycleSet, Cover, EdgeSet};
use crate::solver::two_factor_with;
use crate::tour::Tour;

pub const BRICK_W: u32 = 20;
pub const BRICK_H: u32 = 10;

/// The stored cycle cover of the brick.
pub fn brick_cover() -> Result<CycleSet> {
    let cs = CycleSet::from_json(&crate::cache::load(crate::cache::BRICK25, include_str!("../../data/brick25.json"))?)?;
    if cs.board().dims() != [BRICK_W, BRICK_H] || cs.mv() != mv25() || !cs.is_spanning() {
        return Err(Error::Construction("stored brick is not a spanning (2,5) cover of 20x10".into()));
    }
    Ok(cs)
}

/// Recomputes the brick cover: a 2-factor containing links H, V and the
/// four corner edges.
pub fn regenerate_brick() -> Result<CycleSet> {
    let board = BoardSpec::rect(BRICK_W, BRICK_H)?;
    two_factor_with(&board, mv25(), &block_requirements(BRICK_W, BRICK_H), &[])?
        .ok_or_else(|| Error::Construction("the brick has no cycle cover with the links".into()))
}

fn cache() -> &'static Mutex<HashMap<u32, Tour>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Tour>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// A linked `(2, 5)` tour of `[20] x [height]` for `height = 10k`, `k >= 2`,
/// or `height = 10k + 4`, `k >= 4`.
pub fn strip_tour(height: u32) -> Result<Tour> {
    if let Some(t) = cache().lock().unwrap().get(&height) {
        return Ok(t.clone());
    }
    let t = match (height % 10, height / 10) {
        (0, k) if k >= 2 => stacked(k)?,
        (4, k) if k >= 4 => with_remainder(k)?,
        _ => {
            return Err(Error::Unsupported(format!(
                "strip height {height} is neither 10k (k >= 2) nor 10k+4 (k >= 4)"
            )))
        }
    };
    if !is_linked_block(&t) {
        return Err(Error::Construction(format!("strip 20x{height} lost a link")));
    }
    cache().lock().unwrap().insert(height, t.clone());
    Ok(t)
}

fn protected(board: &BoardSpec, h: u32) -> EdgeSet {
    EdgeSet::from_edges(board, block_requirements(BRICK_W, h).iter())
}

/// `k` bricks stacked and merged.
fn stacked(k: u32) -> Result<Tour> {
    let brick = brick_cover()?;
    let h = BRICK_H * k;
    let board = BoardSpec::rect(BRICK_W, h)?;
    let geo = Geometry::new(board.clone(), mv25());
    let mut cover = Cover::new(geo.clone());
    for i in 0..k as i64 {
        for c in brick.cycles() {
            let cyc: Vec<_> = c
                .iter()
                .map(|&v| {
                    let p = brick.board().coord_of(v);
                    geo.index_xy(p.0[0], p.0[1] + i * BRICK_H as i64).unwrap()
                })
                .collect();
            cover.add_cycle(&cyc)?;
        }
    }
    cover.merge_all(&protected(&board, h))?;
    cover.into_tour()
}

/// A strip of `10(k-2)` rows above a 4-row remainder above a `20 x 20`
/// strip. Rows near the remainder are re-covered by a 2-factor that keeps
/// every other edge of the two strips, then all cycles are merged.
fn with_remainder(k: u32) -> Result<Tour> {
    let h = 10 * k + 4;
    let lower = strip_tour(20)?;
    let upper = strip_tour(10 * (k - 2))?;
    let board = BoardSpec::rect(BRICK_W, h)?;
    let keep = protected(&board, h);
    for margin in [4i64, 6, 8, 10] {
        let (lo, hi) = (20 - margin, 24 + margin);
        let outside = |e: &Edge| {
            let (p, q) = e.ends();
            [p.0[1], q.0[1]].iter().all(|&y| y < lo || y >= hi)
        };
        let mut required: Vec<Edge> = lower.edge_list().into_iter().filter(|e| outside(e)).collect();
        required.extend(
            upper
                .edge_list()
                .into_iter()
                .map(|e| {
                    let (p, q) = e.ends();
                    Edge::xy((p.0[0], p.0[1] + 24), (q.0[0], q.0[1] + 24))
                })
                .filter(|e| outside(e)),
        );
        let Some(cs) = two_factor_with(&board, mv25(), &required, &[])? else {
            continue;
        };
        if let Ok(t) = merge_all(&cs, &keep) {
            return Ok(t);
        }
    }
    Err(Error::Construction(format!("no splice closes the remainder of 20x{h}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tour::verify_tour;

    #[test]
    fn stored_brick() {
        let cs = brick_cover().unwrap();
        assert_eq!(cs.vertex_count(), 200);
        assert!(cs.is_valid());
        assert!(cs.cycles().iter().all(|c| c.len() >= 4 && c.len() % 2 == 0));
        assert_eq!(regenerate_brick().unwrap().cycles(), cs.cycles());
    }

    #[test]
    fn strips() {
        for (h, len) in [(20u32, 400usize), (30, 600), (44, 880)] {
            let t = strip_tour(h).unwrap();
            assert_eq!(t.len(), len);
            assert!(verify_tour(&t).is_valid_tour());
            assert!(is_linked_block(&t));
        }
        assert!(strip_tour(10).is_err());
        assert!(strip_tour(34).is_err());
        assert!(strip_tour(25).is_err());
    }
}
