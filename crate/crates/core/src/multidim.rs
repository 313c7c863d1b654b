//! Tours of `[n]^d` assembled from a 2-D tour placed on every floor.
//!
//! A floor is the plane `{(x, y, p)}` for a fixed `p` in `[n]^(d-2)`. The
//! vertex index of `(x, y, p)` is the 2-D index of `(x, y)` times the
//! number of floors plus the row-major index of `p`.

use crate::a1::a1_tour;
use crate::board::{BoardSpec, Coord, Geometry, MoveSpec, VertexId};
use crate::error::{Error, Result};
use crate::links::{contains_link, LinkKind};
use crate::merge::{Bridge, Cover};
use crate::tour::{verify_tour, Tour};

/// Boustrophedon Hamiltonian path of the grid graph with the given sides;
/// the first axis varies fastest.
pub fn grid_ham_path(dims: &[u32]) -> Vec<Vec<u32>> {
    let Some((&first, rest)) = dims.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for (k, tail) in grid_ham_path(rest).into_iter().enumerate() {
        let run: Box<dyn Iterator<Item = u32>> =
            if k % 2 == 0 { Box::new(0..first) } else { Box::new((0..first).rev()) };
        for x in run {
            let mut v = Vec::with_capacity(dims.len());
            v.push(x);
            v.extend_from_slice(&tail);
            out.push(v);
        }
    }
    out
}

/// Position of a floor in the extra dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FloorLabel {
    pub p: Vec<u32>,
}

impl FloorLabel {
    pub fn new(p: Vec<u32>) -> Self {
        FloorLabel { p }
    }

    /// Representative of the class of `p` modulo `a` in `{0..a-1}^(d-2)`.
    pub fn residue(&self, a: u32) -> FloorLabel {
        FloorLabel { p: self.p.iter().map(|&x| x % a).collect() }
    }

    fn index(&self, n: u32) -> usize {
        self.p.iter().fold(0usize, |acc, &x| acc * n as usize + x as usize)
    }
}

struct Floors {
    n: u32,
    floors: usize,
    geo: Geometry,
}

impl Floors {
    fn new(n: u32, d: usize, mv: MoveSpec) -> Result<Self> {
        let board = BoardSpec::square(n, d)?;
        let floors = (n as usize).pow(d as u32 - 2);
        if board.volume() > u32::MAX as usize {
            return Err(Error::InvalidBoard(format!("[{n}]^{d} is too large")));
        }
        Ok(Floors { n, floors, geo: Geometry::new(board, mv) })
    }

    fn vertex(&self, x: i64, y: i64, f: &FloorLabel) -> VertexId {
        ((x as usize * self.n as usize + y as usize) * self.floors + f.index(self.n)) as VertexId
    }

    fn place(&self, cover: &mut Cover, base: &Tour, f: &FloorLabel) -> Result<()> {
        let off = f.index(self.n);
        let cyc: Vec<VertexId> =
            base.vertices().iter().map(|&v| (v as usize * self.floors + off) as VertexId).collect();
        cover.add_cycle(&cyc)
    }

    /// Joins floors `f` and `g` by removing the 2-D edge `e` on `f` and `h`
    /// on `g`; cross edges pair the ends in order.
    fn join(&self, cover: &mut Cover, f: &FloorLabel, e: Pair, g: &FloorLabel, h: Pair) -> Result<()> {
        let br = Bridge::new(
            self.vertex(e.0 .0, e.0 .1, f),
            self.vertex(e.1 .0, e.1 .1, f),
            self.vertex(h.0 .0, h.0 .1, g),
            self.vertex(h.1 .0, h.1 .1, g),
        );
        cover.apply_bridge(&br).map_err(|err| {
            Error::Construction(format!("floor bridge {:?} -> {:?} refused: {err}", f.p, g.p))
        })
    }
}

type Pair = ((i64, i64), (i64, i64));

fn check_square_2d(t: &Tour) -> Result<u32> {
    let dims = t.board().dims();
    if dims.len() != 2 || dims[0] != dims[1] {
        return Err(Error::Precondition("expected a tour of a square 2-D board".into()));
    }
    if !verify_tour(t).is_valid_tour() {
        return Err(Error::Precondition("base is not a valid tour".into()));
    }
    Ok(dims[0])
}

fn finish(cover: Cover, what: &str) -> Result<Tour> {
    let t = cover.into_tour()?;
    let report = verify_tour(&t);
    if !report.is_valid_tour() {
        return Err(Error::Construction(format!("{what}: {}", report.summary())));
    }
    Ok(t)
}

/// `(a, 1)` tour of `[n]^d` from the structured tour of `[n]^2`, joining
/// floors along [`grid_ham_path`] with link B.
pub fn extend_a1_to_d(a: u32, n: u32, d: usize) -> Result<Tour> {
    let base = a1_tour(a, n)?;
    extend_a1_tour_to_d(&base, d)
}

/// As [`extend_a1_to_d`] for a given 2-D `(a, 1)` tour containing link B.
pub fn extend_a1_tour_to_d(base: &Tour, d: usize) -> Result<Tour> {
    let n = check_square_2d(base)?;
    if d < 2 {
        return Err(Error::Precondition(format!("dimension {d} < 2")));
    }
    if d == 2 {
        return Ok(base.clone());
    }
    let mv = base.mv();
    if mv.short() != 1 {
        return Err(Error::Precondition(format!("expected an (a,1) tour, got ({mv})")));
    }
    let a = mv.long() as i64;
    let (Some(b_link), Some(corner)) =
        (pair_if_present(base, ((a, 0), (0, 1))), pair_if_present(base, ((0, 0), (a, 1))))
    else {
        return Err(Error::Precondition("base tour lacks link B".into()));
    };
    let fl = Floors::new(n, d, mv)?;
    let mut cover = Cover::new(fl.geo.clone());
    let path: Vec<FloorLabel> = grid_ham_path(&vec![n; d - 2]).into_iter().map(FloorLabel::new).collect();
    fl.place(&mut cover, base, &path[0])?;
    for w in path.windows(2) {
        fl.place(&mut cover, base, &w[1])?;
        fl.join(&mut cover, &w[0], b_link, &w[1], corner)?;
    }
    finish(cover, "floor concatenation")
}

fn pair_if_present(t: &Tour, e: Pair) -> Option<Pair> {
    t.has_edge(&Coord::xy(e.0 .0, e.0 .1), &Coord::xy(e.1 .0, e.1 .1)).then_some(e)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The link image present in `t` and the matching image of the corner
/// edge, ordered so that both cross edges move `leg` within the plane.
fn oriented_link(t: &Tour, kind: LinkKind, corner: Pair, leg: u32) -> Result<(Pair, Pair)> {
    let m = contains_link(t, kind)?.ok_or_else(|| Error::Precondition(format!("base tour lacks link {kind}")))?;
    let n = t.board().dims()[0];
    let map = |p: (i64, i64)| m.symmetry.apply(p.0, p.1, n, n);
    let (p, q) = m.edge.ends();
    let link = ((p.0[0], p.0[1]), (q.0[0], q.0[1]));
    let c = (map(corner.0), map(corner.1));
    if pair_if_present(t, c).is_none() {
        return Err(Error::Construction(format!("corner edge {c:?} missing from base tour")));
    }
    let legal = |u: (i64, i64), v: (i64, i64)| {
        let (dx, dy) = ((u.0 - v.0).unsigned_abs(), (u.1 - v.1).unsigned_abs());
        (dx == 0 && dy == leg as u64) || (dy == 0 && dx == leg as u64)
    };
    let link = if legal(c.0, link.0) && legal(c.1, link.1) { link } else { (link.1, link.0) };
    if !(legal(c.0, link.0) && legal(c.1, link.1)) {
        return Err(Error::Construction(format!("link {kind} and corner edge do not pair")));
    }
    Ok((link, c))
}

/// `(a, b)` tour of `[n]^d` from a linked tour of `[n]^2`.
///
/// Floors in one class modulo the short leg are chained with link alpha;
/// the class cycles are then chained with link beta.
pub fn extend_ab_to_d(base: &Tour, d: usize) -> Result<Tour> {
    let n = check_square_2d(base)?;
    let mv = base.mv();
    let (a, b) = (mv.short(), mv.long());
    if gcd(a, b) != 1 || (a + b) % 2 == 0 {
        return Err(Error::Precondition(format!("({mv}) needs coprime legs of opposite parity")));
    }
    if a == 1 {
        return Err(Error::Precondition("short leg 1 is handled by the (a,1) construction".into()));
    }
    if n < a + b {
        return Err(Error::Precondition(format!("n = {n} < a + b = {}", a + b)));
    }
    if d < 2 {
        return Err(Error::Precondition(format!("dimension {d} < 2")));
    }
    let (ai, bi, ni) = (a as i64, b as i64, n as i64);
    let (alpha, alpha_corner) = oriented_link(base, LinkKind::Alpha, ((0, 0), (ai, bi)), b)?;
    let (beta, beta_corner) = oriented_link(base, LinkKind::Beta, ((ni - 1, 0), (ni - 1 - bi, ai)), a)?;
    let ends = [alpha.0, alpha.1, alpha_corner.0, alpha_corner.1];
    if [beta.0, beta.1, beta_corner.0, beta_corner.1].iter().any(|p| ends.contains(p)) {
        return Err(Error::Construction("links alpha and beta share a vertex".into()));
    }
    if d == 2 {
        return Ok(base.clone());
    }
    let e = d - 2;
    let fl = Floors::new(n, d, mv)?;
    let mut cover = Cover::new(fl.geo.clone());

    // phase 1: one cycle per class, chained along a-steps
    let classes: Vec<Vec<u32>> = grid_ham_path(&vec![a; e]);
    for r in &classes {
        let sides: Vec<u32> = r.iter().map(|&ri| (n - ri).div_ceil(a)).collect();
        let path: Vec<FloorLabel> = grid_ham_path(&sides)
            .into_iter()
            .map(|q| FloorLabel::new(q.iter().zip(r).map(|(&qi, &ri)| ri + a * qi).collect()))
            .collect();
        fl.place(&mut cover, base, &path[0])?;
        for w in path.windows(2) {
            fl.place(&mut cover, base, &w[1])?;
            fl.join(&mut cover, &w[0], alpha_corner, &w[1], alpha)?;
        }
    }
    if cover.component_count() != classes.len() || cover.covered() != fl.geo.volume() {
        return Err(Error::Construction("class cycles do not partition the board".into()));
    }

    // phase 2: chain the classes along b-steps through {0, b, .., b(a-1)}
    let reps: Vec<Vec<i64>> =
        classes.iter().map(|q| q.iter().map(|&qi| (b * qi) as i64).collect()).collect();
    for w in reps.windows(2) {
        let (p, q) = (&w[0], &w[1]);
        let mut src: Vec<i64> = p.iter().map(|&x| x.rem_euclid(ai)).collect();
        for k in 0..e {
            let step = q[k] - p[k];
            if step < 0 && src[k] + step < 0 {
                src[k] += ai * (-step - src[k] + ai - 1).div_euclid(ai);
            }
        }
        let dst: Vec<i64> = src.iter().zip(p.iter().zip(q)).map(|(&s, (&x, &y))| s + y - x).collect();
        if src.iter().chain(&dst).any(|&c| c < 0 || c >= ni) {
            return Err(Error::Construction(format!("floor step {p:?} -> {q:?} leaves the board")));
        }
        let f = FloorLabel::new(src.iter().map(|&c| c as u32).collect());
        let g = FloorLabel::new(dst.iter().map(|&c| c as u32).collect());
        if !cover.has_edge(fl.vertex(beta.0 .0, beta.0 .1, &g), fl.vertex(beta.1 .0, beta.1 .1, &g)) {
            return Err(Error::Construction(format!("link beta on floor {:?} was used up", g.p)));
        }
        fl.join(&mut cover, &f, beta_corner, &g, beta)?;
    }
    finish(cover, "class concatenation")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_unit_path(path: &[Vec<u32>], dims: &[u32]) -> bool {
        let total: usize = dims.iter().map(|&x| x as usize).product();
        let mut seen = std::collections::HashSet::new();
        path.len() == total
            && path.iter().all(|v| v.iter().zip(dims).all(|(&x, &n)| x < n) && seen.insert(v.clone()))
            && path.windows(2).all(|w| {
                w[0].iter().zip(&w[1]).map(|(&x, &y)| (x as i64 - y as i64).unsigned_abs()).sum::<u64>() == 1
            })
    }

    #[test]
    fn grid_paths() {
        assert_eq!(grid_ham_path(&[3]), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(grid_ham_path(&[2, 2]), vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]]);
        assert_eq!(grid_ham_path(&[]), vec![Vec::<u32>::new()]);
        for dims in [vec![3, 3, 2], vec![1, 4], vec![2, 3, 4, 2], vec![5]] {
            assert!(is_unit_path(&grid_ham_path(&dims), &dims), "{dims:?}");
        }
    }

    #[test]
    fn residues() {
        let f = FloorLabel::new(vec![5, 2, 7]);
        assert_eq!(f.residue(2).p, vec![1, 0, 1]);
        assert_eq!(f.residue(3).p, vec![2, 2, 1]);
    }

    #[test]
    fn a1_in_three_dimensions() {
        let t = extend_a1_to_d(2, 28, 3).unwrap();
        assert_eq!(t.len(), 21952);
        assert!(verify_tour(&t).is_valid_tour());
        let flat = extend_a1_to_d(2, 28, 2).unwrap();
        assert_eq!(flat.vertices(), a1_tour(2, 28).unwrap().vertices());
    }

    fn linked_23(n: u32) -> Tour {
        use crate::links::link_edge;
        use crate::solver::{ham_cycle_search, SearchConfig};
        let b = BoardSpec::square(n, 2).unwrap();
        let mv = MoveSpec::new(2, 3).unwrap();
        let req = [LinkKind::Alpha, LinkKind::Beta].map(|k| link_edge(k, &b, mv).unwrap());
        ham_cycle_search(&b, mv, &SearchConfig::default().with_required(req)).unwrap()
    }

    #[test]
    fn ab_lift() {
        let t = linked_23(10);
        for (d, len) in [(2, 100), (3, 1000), (4, 10000)] {
            let out = extend_ab_to_d(&t, d).unwrap();
            assert_eq!(out.len(), len);
            assert!(verify_tour(&out).is_valid_tour());
        }
        let sym = crate::board::Symmetry { transpose: true, flip_x: false, flip_y: false };
        let out = extend_ab_to_d(&t.transformed(sym), 3).unwrap();
        assert_eq!(out.len(), 1000);
    }

    #[test]
    fn ab_lift_rejects_bad_input() {
        let t = linked_23(10);
        let mirrored = t.transformed(crate::board::Symmetry { transpose: false, flip_x: true, flip_y: false });
        if contains_link(&mirrored, LinkKind::Alpha).unwrap().is_none() {
            assert!(extend_ab_to_d(&mirrored, 3).is_err());
        }
        assert!(extend_ab_to_d(&a1_tour(2, 28).unwrap(), 3).is_err());
        assert!(extend_a1_tour_to_d(&t, 3).is_err());
    }
}
