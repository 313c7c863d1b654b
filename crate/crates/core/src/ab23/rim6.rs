//! Colour cycles of the width-6 rim for the `(2, 3)` leaper.
//!
//! Bands are tiled by 2x6 blocks; inside a band each square `(x, y)` of
//! the bottom band is joined to `(x +- 2, (y + 3) mod 6)`. The bottom-left
//! corner is the stored template and the other three parts of the rim are
//! its quarter turns.

use super::corner::{stored_corner, CornerTemplate, COLOURS};
use crate::board::{BoardSpec, MoveSpec, VertexId};
use crate::error::{Error, Result};
use crate::merge::CycleSet;

pub const RIM: i64 = 6;

pub fn in_middle6(x: i64, y: i64, n: i64) -> bool {
    (RIM..n - RIM).contains(&x) && (RIM..n - RIM).contains(&y)
}

/// The rim cycles of `[n]^2` built from `corner`, one per colour when the
/// corner passes the lap condition for `n`; otherwise colours share cycles.
/// Each cycle starts at its first-block square; cycles are ordered by the
/// smallest colour they carry.
pub fn rim6_cycles_with(corner: &CornerTemplate, n: u32) -> Result<CycleSet> {
    if n % 2 == 1 || n < 22 {
        return Err(Error::Precondition(format!("width-6 rim needs even n >= 22 (n = {n})")));
    }
    let ni = n as i64;
    let board = BoardSpec::square(n, 2)?;
    let idx = |(x, y): (i64, i64)| board.index_of(&[x, y]).unwrap();
    let turn = |(x, y): (i64, i64)| (ni - 1 - y, x);
    let mut quarter: Vec<((i64, i64), (i64, i64))> = corner.edges().collect();
    for x in 6..ni - 8 {
        for y in 0..6 {
            quarter.push(((x, y), (x + 2, (y + 3) % 6)));
        }
    }
    let mut nbr: Vec<Vec<VertexId>> = vec![Vec::new(); board.volume()];
    for _ in 0..4 {
        for (p, q) in quarter.iter_mut() {
            let (u, v) = (idx(*p), idx(*q));
            nbr[u as usize].push(v);
            nbr[v as usize].push(u);
            *p = turn(*p);
            *q = turn(*q);
        }
    }
    for x in 0..ni {
        for y in 0..ni {
            let deg = nbr[idx((x, y)) as usize].len();
            let want = if in_middle6(x, y, ni) { 0 } else { 2 };
            if deg != want {
                return Err(Error::Construction(format!("rim square ({x},{y}) has degree {deg}")));
            }
        }
    }
    let mut done = vec![false; board.volume()];
    let mut cycles = Vec::new();
    for c in 0..COLOURS {
        let start = idx((6 + c as i64 / 6, c as i64 % 6));
        if done[start as usize] {
            continue;
        }
        let mut cyc = vec![start];
        done[start as usize] = true;
        let (mut prev, mut cur) = (start, nbr[start as usize][0].max(nbr[start as usize][1]));
        while cur != start {
            if done[cur as usize] {
                return Err(Error::Construction("rim edges do not form cycles".into()));
            }
            done[cur as usize] = true;
            cyc.push(cur);
            let nb = &nbr[cur as usize];
            let next = if nb[0] != prev { nb[0] } else { nb[1] };
            prev = cur;
            cur = next;
        }
        cycles.push(cyc);
    }
    let rim = (ni * ni - (ni - 2 * RIM) * (ni - 2 * RIM)) as usize;
    if cycles.iter().map(Vec::len).sum::<usize>() != rim {
        return Err(Error::Construction("rim cycles miss squares away from the first block".into()));
    }
    CycleSet::new(board, MoveSpec::new(2, 3)?, cycles)
}

/// [`rim6_cycles_with`] for the stored corner; exactly twelve cycles.
pub fn rim6_cycles(n: u32) -> Result<CycleSet> {
    let cs = rim6_cycles_with(&stored_corner()?, n)?;
    if cs.len() != COLOURS {
        return Err(Error::Construction(format!("rim of [{n}]^2 splits into {} cycles", cs.len())));
    }
    Ok(cs)
}

#[cfg(test)]
mod tests {
    use super::super::corner::{corner_check, search_corner};
    use super::*;

    #[test]
    fn twelve_cycles_partition_the_rim() {
        for n in [22u32, 24, 26, 28, 34] {
            let cs = rim6_cycles(n).unwrap();
            assert!(cs.is_valid());
            assert_eq!(cs.vertex_count(), (n * n - (n - 12) * (n - 12)) as usize);
            let b = cs.board().clone();
            for (c, cyc) in cs.cycles().iter().enumerate() {
                let firsts: Vec<_> = cyc
                    .iter()
                    .map(|&v| b.coord_of(v))
                    .filter(|p| (6..8).contains(&p.0[0]) && p.0[1] < 6)
                    .collect();
                assert_eq!(firsts.len(), 1, "colour {} crosses the first block once", c + 1);
                assert_eq!(6 * (firsts[0].0[0] - 6) + firsts[0].0[1], c as i64);
            }
        }
        assert_eq!(rim6_cycles(22).unwrap().vertex_count(), 384);
    }

    #[test]
    fn lap_condition_decides_cycle_count() {
        let mut corners = Vec::new();
        search_corner(u64::MAX, &mut |t| {
            corners.push(t.clone());
            false
        });
        assert!(corners.len() > 1);
        for t in &corners {
            for n in (22..=32).step_by(2) {
                let cs = rim6_cycles_with(t, n).unwrap();
                assert_eq!(cs.len() == COLOURS, corner_check(&t.permutation(), n), "n = {n}");
            }
        }
    }

    #[test]
    fn too_small() {
        assert!(rim6_cycles(20).is_err());
        assert!(rim6_cycles(23).is_err());
    }
}
