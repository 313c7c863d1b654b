//! Colour cycles of the rim.
//!
//! Restricted to the rim of width `a`, the `(a, 1)` leaper moves along the
//! bands with `(±a, y^1)` and `(x^1, ±a)` steps. Every rim square then has
//! exactly two such neighbours, and the rim splits into `a^2` cycles
//! `C(i, j)`, one through each `(i, j)` with `i, j < a`.

use crate::board::{BoardSpec, Geometry, MoveSpec};
use crate::error::{Error, Result};
use crate::merge::CycleSet;

pub fn in_middle(x: i64, y: i64, a: i64, n: i64) -> bool {
    (a..n - a).contains(&x) && (a..n - a).contains(&y)
}

fn rim_neighbors(x: i64, y: i64, a: i64, n: i64) -> Vec<(i64, i64)> {
    [(x - a, y ^ 1), (x + a, y ^ 1), (x ^ 1, y - a), (x ^ 1, y + a)]
        .into_iter()
        .filter(|&(u, v)| (0..n).contains(&u) && (0..n).contains(&v) && !in_middle(u, v, a, n))
        .collect()
}

/// Cycle label of colour `(i, j)`.
pub fn colour_label(i: u32, j: u32, a: u32) -> usize {
    (i * a + j) as usize
}

/// The `a^2` colour cycles of the width-`a` rim of `[n]^2`, labelled by
/// [`colour_label`], each starting at its own `(i, j)`.
pub fn rim_colour_cycles(a: u32, n: u32) -> Result<CycleSet> {
    if a < 2 || a % 2 == 1 || n % 2 == 1 || n < 2 * a + 2 {
        return Err(Error::Precondition(format!("rim needs even a >= 2 and even n >= 2a+2 (a = {a}, n = {n})")));
    }
    let board = BoardSpec::square(n, 2)?;
    let mv = MoveSpec::new(a, 1)?;
    let geo = Geometry::new(board.clone(), mv);
    let (ai, ni) = (a as i64, n as i64);
    let idx = |x: i64, y: i64| geo.index_xy(x, y).unwrap();
    let mut label = vec![usize::MAX; board.volume()];
    let mut cycles = vec![Vec::new(); (a * a) as usize];
    for i in 0..a {
        for j in 0..a {
            let l = colour_label(i, j, a);
            let start = (i as i64, j as i64);
            let first = rim_neighbors(start.0, start.1, ai, ni);
            if first.len() != 2 {
                return Err(Error::Construction(format!("rim square {start:?} has {} colour neighbours", first.len())));
            }
            let mut cyc = vec![idx(start.0, start.1)];
            let (mut prev, mut cur) = (start, first[0].min(first[1]));
            while cur != start {
                let v = idx(cur.0, cur.1);
                if label[v as usize] != usize::MAX {
                    return Err(Error::Construction(format!("colours {l} and {} meet", label[v as usize])));
                }
                label[v as usize] = l;
                cyc.push(v);
                let nb = rim_neighbors(cur.0, cur.1, ai, ni);
                if nb.len() != 2 {
                    return Err(Error::Construction(format!("rim square {cur:?} has {} colour neighbours", nb.len())));
                }
                let next = if nb[0] != prev { nb[0] } else { nb[1] };
                prev = cur;
                cur = next;
            }
            if label[cyc[0] as usize] != usize::MAX {
                return Err(Error::Construction(format!("colour ({i},{j}) repeats a cycle")));
            }
            label[cyc[0] as usize] = l;
            cycles[l] = cyc;
        }
    }
    let rim = (n * n - (n - 2 * a) * (n - 2 * a)) as usize;
    let covered: usize = cycles.iter().map(Vec::len).sum();
    if covered != rim {
        return Err(Error::Construction(format!("colour cycles cover {covered} of {rim} rim squares")));
    }
    let cs = CycleSet::new(board, mv, cycles)?;
    debug_assert!(cs.is_valid());
    Ok(cs)
}
