//! The structured `(a, 1)` tour of `[6a+2]^2`.
//!
//! Levels are taken in guide order. Each level is covered by a grid
//! Hamiltonian path of its blocks that starts in the ring T1 and ends in
//! the centre T, in a block from which one move lifts to the next level.
//! The corner block `B(0,0)` is never an endpoint, so every level path
//! passes `B(1,0) - B(0,0) - B(0,1)`; the first of those steps is the
//! structured edge of that level and the second is its link A.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use super::guide::{build_guide, Guide};
use super::is_structured;
use super::levels::{level_partition, BlockId, LevelId, LevelPartition, BLOCKS};
use crate::board::{BoardSpec, Geometry, MoveSpec, VertexId};
use crate::error::{Error, Result};
use crate::solver::grid_ham_path_between;
use crate::tour::{verify_tour, Tour};

/// Entry and exit block of one level in the base tour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LevelVisit {
    pub level: LevelId,
    pub entry: BlockId,
    pub exit: BlockId,
}

#[derive(Debug, Clone, Serialize)]
pub struct BaseTrace {
    pub guide: Guide,
    pub visits: Vec<LevelVisit>,
}

const CLOSING_BLOCK: BlockId = BlockId { x: 3, y: 3 };

fn cache() -> &'static Mutex<HashMap<u32, (Tour, BaseTrace)>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, (Tour, BaseTrace)>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// A structured `(a, 1)` tour of `[6a+2]^2`, starting in `B(3,3)` on
/// `L(a-2, 1)`.
pub fn base_case_tour(a: u32) -> Result<Tour> {
    base_case_trace(a).map(|(t, _)| t)
}

/// The base tour together with the level visits that produced it.
pub fn base_case_trace(a: u32) -> Result<(Tour, BaseTrace)> {
    if let Some(hit) = cache().lock().unwrap().get(&a) {
        return Ok(hit.clone());
    }
    let built = build(a)?;
    cache().lock().unwrap().insert(a, built.clone());
    Ok(built)
}

struct Planner<'a> {
    p: LevelPartition,
    geo: &'a Geometry,
    order: &'a [LevelId],
    visits: Vec<LevelVisit>,
}

impl Planner<'_> {
    fn index(&self, l: LevelId, b: BlockId) -> Option<VertexId> {
        let (x, y) = self.p.vertex(l, b)?;
        self.geo.index_xy(x as i64, y as i64)
    }

    /// Blocks of `to` reachable by one move from `from` in block `b`.
    fn lifts(&self, from: LevelId, b: BlockId, to: LevelId) -> Vec<BlockId> {
        let Some(v) = self.index(from, b) else { return Vec::new() };
        let mut out: Vec<BlockId> = self
            .geo
            .neighbors(v)
            .into_iter()
            .filter_map(|w| {
                let c = self.geo.board().coord_of(w);
                let (blk, lvl) = self.p.locate(c.0[0] as u32, c.0[1] as u32);
                (lvl == to).then_some(blk)
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn plan(&mut self, k: usize, entry: BlockId) -> bool {
        let level = self.order[k];
        let (w, h) = self.p.grid_dims(level);
        let last = k + 1 == self.order.len();
        let exits: Vec<BlockId> = if last {
            vec![CLOSING_BLOCK]
        } else {
            (2..=3).flat_map(|x| (2..=3).map(move |y| BlockId::new(x, y))).collect()
        };
        for exit in exits {
            if grid_ham_path_between(w, h, (entry.x, entry.y), (exit.x, exit.y)).is_none() {
                continue;
            }
            self.visits.push(LevelVisit { level, entry, exit });
            if last {
                return true;
            }
            let next = self.order[k + 1];
            for landing in self.lifts(level, exit, next) {
                if landing.in_t1() && self.plan(k + 1, landing) {
                    return true;
                }
            }
            self.visits.pop();
        }
        false
    }
}

fn build(a: u32) -> Result<(Tour, BaseTrace)> {
    let p = level_partition(a)?;
    let guide = build_guide(a)?;
    let n = p.side();
    let board = BoardSpec::square(n, 2)?;
    let mv = MoveSpec::new(a, 1)?;
    let geo = Geometry::new(board.clone(), mv);
    let mut planner = Planner { p, geo: &geo, order: &guide.order, visits: Vec::new() };
    let last = *guide.order.last().unwrap();
    let firsts: Vec<BlockId> =
        planner.lifts(last, CLOSING_BLOCK, guide.order[0]).into_iter().filter(|b| b.in_t1()).collect();
    if !firsts.into_iter().any(|e| planner.plan(0, e)) {
        return Err(Error::Construction(format!("no level plan for a = {a}")));
    }
    let visits = planner.visits;
    let index = |l: LevelId, b: BlockId| p.vertex(l, b).and_then(|(x, y)| geo.index_xy(x as i64, y as i64));
    let mut vertices = Vec::with_capacity(board.volume());
    for v in &visits {
        let (w, h) = p.grid_dims(v.level);
        debug_assert!(w <= BLOCKS && h <= BLOCKS);
        let path = grid_ham_path_between(w, h, (v.entry.x, v.entry.y), (v.exit.x, v.exit.y))
            .ok_or_else(|| Error::Construction(format!("level {} lost its path", v.level)))?;
        for (bx, by) in path {
            let idx = index(v.level, BlockId::new(bx, by))
                .ok_or_else(|| Error::Construction(format!("block ({bx},{by}) misses level {}", v.level)))?;
            vertices.push(idx);
        }
    }
    // start on the closing square in B(3,3)
    vertices.rotate_right(1);
    let tour = Tour::new(board, mv, vertices);
    let report = verify_tour(&tour);
    if !report.is_valid_tour() {
        return Err(Error::Construction(format!("base tour for a = {a} is invalid: {}", report.summary())));
    }
    if !is_structured(&tour, a) {
        return Err(Error::Construction(format!("base tour for a = {a} is not structured")));
    }
    let trace = BaseTrace { guide, visits };
    Ok((tour, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::links::{contains_exact_link, LinkKind};

    #[test]
    fn small_bases() {
        for (a, len) in [(2u32, 196usize), (4, 676)] {
            let (t, trace) = base_case_trace(a).unwrap();
            assert_eq!(t.len(), len);
            assert!(verify_tour(&t).is_valid_tour());
            assert!(is_structured(&t, a));
            assert!(contains_exact_link(&t, LinkKind::A).unwrap());
            assert!(contains_exact_link(&t, LinkKind::B).unwrap());
            assert!(trace.visits.iter().all(|v| v.entry.in_t1() && v.exit.in_t()));
            let start = t.coord(0);
            let p = level_partition(a).unwrap();
            let (b, l) = p.locate(start.0[0] as u32, start.0[1] as u32);
            assert_eq!((b, l), (CLOSING_BLOCK, LevelId::new(a - 2, 1)));
        }
    }
}
