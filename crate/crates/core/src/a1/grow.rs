//! Growing structured `(a, 1)` tours: rim extension, replication of a
//! board in a `k x k` array, and their combination for any large even side.

use super::base::base_case_tour;
use super::rim::{colour_label, rim_colour_cycles};
use super::{is_structured, structured_edges};
use crate::board::{BoardSpec, Geometry, MoveSpec, Symmetry, VertexId};
use crate::error::{Error, Result};
use crate::links::{link_edge, LinkKind};
use crate::merge::{Bridge, Cover, EdgeSet};
use crate::tour::{verify_tour, Tour};

fn check_a1(t: &Tour, a: u32) -> Result<u32> {
    let dims = t.board().dims();
    if dims.len() != 2 || dims[0] != dims[1] {
        return Err(Error::Precondition("expected a square 2-D board".into()));
    }
    if t.mv() != MoveSpec::new(a, 1)? {
        return Err(Error::Precondition(format!("expected an ({a},1) tour, got ({})", t.mv())));
    }
    Ok(dims[0])
}

fn finish(cover: Cover, a: u32, what: &str) -> Result<Tour> {
    let t = cover.into_tour()?;
    let report = verify_tour(&t);
    if !report.is_valid_tour() {
        return Err(Error::Construction(format!("{what}: {}", report.summary())));
    }
    if !is_structured(&t, a) {
        return Err(Error::Construction(format!("{what}: result lost a structured edge")));
    }
    Ok(t)
}

/// Surrounds a structured tour of `[n]^2` with the width-`a` rim, giving a
/// structured tour of `[n+2a]^2`.
pub fn extend_by_rim(t: &Tour, a: u32) -> Result<Tour> {
    let n = check_a1(t, a)?;
    if n < 2 * a + 2 || n % 2 == 1 {
        return Err(Error::Precondition(format!("inner board {n} too small for a = {a}")));
    }
    if !is_structured(t, a) {
        return Err(Error::Precondition("input tour is not structured".into()));
    }
    let big = n + 2 * a;
    let rim = rim_colour_cycles(a, big)?;
    let board = BoardSpec::square(big, 2)?;
    let geo = Geometry::new(board.clone(), t.mv());
    let mut cover = Cover::new(geo.clone());
    for c in rim.cycles() {
        cover.add_cycle(c)?;
    }
    let ai = a as i64;
    let inner: Vec<VertexId> = t
        .coords()
        .map(|c| geo.index_xy(c.0[0] + ai, c.0[1] + ai).unwrap())
        .collect();
    cover.add_cycle(&inner)?;
    let idx = |x: i64, y: i64| geo.index_xy(x, y).unwrap();
    for i in 0..ai {
        for j in 0..ai {
            debug_assert!(colour_label(i as u32, j as u32, a) < rim.len());
            let br = Bridge::new(
                idx(i + ai + 1, j),
                idx(i + 2 * ai + 1, j ^ 1),
                idx(i + ai, j + ai),
                idx(i + 2 * ai, (j ^ 1) + ai),
            );
            cover.apply_bridge(&br)?;
        }
    }
    finish(cover, a, "rim extension")
}

/// Tiles `k x k` copies of a structured, A-linked tour of `[n]^2` and
/// concatenates them along a boustrophedon path of the copies.
pub fn replicate_square(base: &Tour, a: u32, k: u32) -> Result<Tour> {
    let n = check_a1(base, a)?;
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    if k == 1 {
        return Ok(base.clone());
    }
    let big = n.checked_mul(k).ok_or_else(|| Error::InvalidBoard("board too large".into()))?;
    let board = BoardSpec::square(big, 2)?;
    let geo = Geometry::new(board.clone(), base.mv());
    let link = link_edge(LinkKind::A, base.board(), base.mv())?;
    let protected = EdgeSet::from_edges(&board, structured_edges(a).iter());
    let mut cover = Cover::new(geo.clone());
    let order: Vec<(u32, u32)> = (0..k)
        .flat_map(|row| {
            let cols: Vec<u32> = if row % 2 == 0 { (0..k).collect() } else { (0..k).rev().collect() };
            cols.into_iter().map(move |col| (col, row))
        })
        .collect();
    let place = |sym: Symmetry, (bx, by): (u32, u32)| -> Vec<VertexId> {
        let (ox, oy) = ((bx * n) as i64, (by * n) as i64);
        base.coords()
            .map(|c| {
                let (x, y) = sym.apply(c.0[0], c.0[1], n, n);
                geo.index_xy(x + ox, y + oy).unwrap()
            })
            .collect()
    };
    cover.add_cycle(&place(Symmetry::IDENTITY, order[0]))?;
    for &cell in &order[1..] {
        let (ox, oy) = ((cell.0 * n) as i64, (cell.1 * n) as i64);
        let mut done = false;
        for sym in Symmetry::all() {
            let (p, q) = link.ends();
            let map = |c: &crate::Coord| {
                let (x, y) = sym.apply(c.0[0], c.0[1], n, n);
                geo.index_xy(x + ox, y + oy).unwrap()
            };
            if let Some(br) = cover.bridge_to_external(map(p), map(q), &protected) {
                cover.add_cycle(&place(sym, cell))?;
                cover.apply_bridge(&br)?;
                done = true;
                break;
            }
        }
        if !done {
            let cyc = place(Symmetry::IDENTITY, cell);
            cover.add_cycle(&cyc)?;
            let anchor = geo.index_xy(0, 0).unwrap();
            if cover.bridge_between(cyc[0], anchor, &protected).is_none() {
                return Err(Error::Unmergeable(cover.component_labels()));
            }
        }
    }
    finish(cover, a, "replication")
}

/// `(k, m)` with `n = k(6a+2) + 2am`, `k` in `1..=a` minimal, `m >= 0`.
pub fn a1_decompose(a: u32, n: u32) -> Option<(u32, u32)> {
    let unit = 6 * a + 2;
    (1..=a).find_map(|k| {
        let rest = n.checked_sub(k * unit)?;
        (rest % (2 * a) == 0).then_some((k, rest / (2 * a)))
    })
}

/// Structured `(a, 1)` tour of `[n]^2` for even `n >= a(6a+2)`; it
/// contains link B.
pub fn a1_tour(a: u32, n: u32) -> Result<Tour> {
    if a < 2 || a % 2 == 1 {
        return Err(Error::Precondition(format!("a = {a} must be even and positive")));
    }
    if n % 2 == 1 {
        return Err(Error::Precondition(format!("n = {n} must be even")));
    }
    let threshold = a * (6 * a + 2);
    if n < threshold {
        return Err(Error::Precondition(format!("n = {n} is below a(6a+2) = {threshold}")));
    }
    a1_tour_unchecked(a, n)
}

/// As [`a1_tour`] for any `n` that decomposes, including some below the
/// threshold (for example `6a+2` itself).
pub fn a1_tour_unchecked(a: u32, n: u32) -> Result<Tour> {
    let (k, m) = a1_decompose(a, n)
        .ok_or_else(|| Error::Unsupported(format!("n = {n} is not k(6a+2) + 2am for a = {a}")))?;
    let base = base_case_tour(a)?;
    let mut t = replicate_square(&base, a, k)?;
    for _ in 0..m {
        t = extend_by_rim(&t, a)?;
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::links::contains_exact_link;

    #[test]
    fn decomposition() {
        assert_eq!(a1_decompose(2, 28), Some((2, 0)));
        assert_eq!(a1_decompose(2, 30), Some((1, 4)));
        assert_eq!(a1_decompose(4, 104), Some((4, 0)));
        assert_eq!(a1_decompose(2, 12), None);
        for n in (28..200).step_by(2) {
            let (k, m) = a1_decompose(2, n).unwrap();
            assert_eq!(k * 14 + 4 * m, n);
        }
    }

    #[test]
    fn rim_step_and_replication() {
        let base = base_case_tour(2).unwrap();
        let t = extend_by_rim(&base, 2).unwrap();
        assert_eq!(t.len(), 324);
        let r = replicate_square(&base, 2, 2).unwrap();
        assert_eq!(r.len(), 784);
        assert!(contains_exact_link(&r, LinkKind::B).unwrap());
    }

    #[test]
    fn threshold_enforced() {
        assert!(a1_tour(2, 26).is_err());
        assert!(a1_tour(2, 29).is_err());
        assert!(a1_tour(3, 100).is_err());
    }
}
