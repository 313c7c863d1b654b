//! Tours of the `(2, 3)` leaper on square boards.
//!
//! Bases come from the solver with links alpha and beta required; larger
//! boards grow by a width-6 rim, `n -> n + 12`.

pub mod corner;
mod rim6;

use std::time::Duration;

pub use corner::{corner_check, regenerate_corner, stored_corner, CornerPermutation, CornerTemplate};
pub use rim6::{rim6_cycles, rim6_cycles_with};

use crate::board::{BoardSpec, Geometry, MoveSpec, VertexId};
use crate::error::{Error, Result};
use crate::links::{contains_exact_link, link_edge, LinkKind};
use crate::merge::{Bridge, Cover, EdgeSet};
use crate::solver::{ham_cycle_search, SearchConfig};
use crate::tour::{verify_tour, Tour};

fn mv23() -> MoveSpec {
    MoveSpec::new(2, 3).unwrap()
}

/// Bridges quoted for the rim step, tried before the general merge.
const QUOTED: [[(i64, i64); 4]; 3] = [
    [(8, 3), (11, 5), (6, 6), (9, 8)],
    [(9, 3), (12, 5), (7, 6), (10, 8)],
    [(8, 3), (6, 6), (11, 1), (9, 4)],
];

fn link_set(board: &BoardSpec) -> Result<EdgeSet> {
    let links = [LinkKind::Alpha, LinkKind::Beta].map(|k| link_edge(k, board, mv23()));
    let links: Vec<_> = links.into_iter().collect::<Result<_>>()?;
    Ok(EdgeSet::from_edges(board, links.iter()))
}

/// Surrounds a `(2, 3)` tour of `[n]^2` by the width-6 rim, giving a tour
/// of `[n+12]^2` that contains links alpha and beta.
pub fn extend_23(t: &Tour) -> Result<Tour> {
    let dims = t.board().dims();
    if dims.len() != 2 || dims[0] != dims[1] || t.mv() != mv23() {
        return Err(Error::Precondition("expected a (2,3) tour of a square board".into()));
    }
    if !verify_tour(t).is_valid_tour() {
        return Err(Error::Precondition("input is not a valid tour".into()));
    }
    let big = dims[0] + 12;
    let rim = rim6_cycles(big)?;
    let board = BoardSpec::square(big, 2)?;
    let geo = Geometry::new(board.clone(), mv23());
    let mut cover = Cover::new(geo.clone());
    for c in rim.cycles() {
        cover.add_cycle(c)?;
    }
    let middle: Vec<VertexId> = t.coords().map(|c| geo.index_xy(c.0[0] + 6, c.0[1] + 6).unwrap()).collect();
    cover.add_cycle(&middle)?;
    let idx = |p: (i64, i64)| geo.index_xy(p.0, p.1).unwrap();
    for q in QUOTED {
        let br = Bridge::new(idx(q[0]), idx(q[1]), idx(q[2]), idx(q[3]));
        cover.apply_first(&[br]);
    }
    let protected = link_set(&board)?;
    cover.merge_all(&protected)?;
    let out = cover.into_tour()?;
    check_linked(&out, "rim step")?;
    Ok(out)
}

fn check_linked(t: &Tour, what: &str) -> Result<()> {
    let report = verify_tour(t);
    if !report.is_valid_tour() {
        return Err(Error::Construction(format!("{what}: {}", report.summary())));
    }
    for k in [LinkKind::Alpha, LinkKind::Beta] {
        if !contains_exact_link(t, k)? {
            return Err(Error::MissingLink(format!("{k} after {what}")));
        }
    }
    Ok(())
}

/// A linked `(2, 3)` tour of `[n]^2` found by the solver.
pub fn base_23(n: u32, timeout: Duration) -> Result<Tour> {
    let board = BoardSpec::square(n, 2)?;
    let req: Vec<_> = [LinkKind::Alpha, LinkKind::Beta]
        .into_iter()
        .map(|k| link_edge(k, &board, mv23()))
        .collect::<Result<_>>()?;
    let t = ham_cycle_search(&board, mv23(), &SearchConfig::default().with_required(req).with_timeout(timeout))?;
    check_linked(&t, "solver base")?;
    Ok(t)
}

/// Side of the base board used for `n`: 10 for `n = 10 mod 12`, otherwise
/// the smallest side at least 14 in the class of `n` modulo 12.
pub fn base_side_23(n: u32) -> Option<u32> {
    if n % 2 == 1 || n < 10 || n == 12 {
        return None;
    }
    let r = n % 12;
    let base = match r {
        10 => 10,
        0 => 24,
        _ => r + 12,
    };
    (base <= n).then_some(base)
}

/// A linked `(2, 3)` tour of `[n]^2`: a solver base for the class of `n`
/// modulo 12 followed by rim steps.
pub fn tour_23(n: u32) -> Result<Tour> {
    tour_23_with(n, SearchConfig::default().timeout)
}

pub fn tour_23_with(n: u32, timeout: Duration) -> Result<Tour> {
    let base = base_side_23(n).ok_or_else(|| {
        Error::Unsupported(format!("no (2,3) tour of [{n}]^2 is built (n must be even, at least 10 and not 12)"))
    })?;
    let mut t = base_23(base, timeout)?;
    while t.board().dims()[0] < n {
        t = extend_23(&t)?;
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_sides() {
        assert_eq!(base_side_23(10), Some(10));
        assert_eq!(base_side_23(46), Some(10));
        assert_eq!(base_side_23(14), Some(14));
        assert_eq!(base_side_23(36), Some(24));
        assert_eq!(base_side_23(12), None);
        assert_eq!(base_side_23(11), None);
        assert_eq!(base_side_23(8), None);
    }

    #[test]
    fn chain_to_46() {
        let mut t = tour_23(10).unwrap();
        for n in [22u32, 34, 46] {
            t = extend_23(&t).unwrap();
            assert_eq!(t.len(), (n * n) as usize);
            check_linked(&t, "chain").unwrap();
        }
    }
}
