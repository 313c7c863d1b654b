//! Board and move model.
//!
//! Coordinates follow the Cartesian first quadrant: axis 0 grows to the
//! right, axis 1 grows upward and `(0, 0)` is the bottom-left square.
//! Vertices are addressed by a linear index whose ordering coincides with
//! lexicographic ordering of the coordinates (axis 0 most significant).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Linear vertex index on a board.
pub type VertexId = u32;

/// An `(a, b)` leaper, stored with `long >= short`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MoveSpec {
    long: u32,
    short: u32,
}

impl MoveSpec {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidMove(format!("({a},{b}): legs must be positive")));
        }
        Ok(MoveSpec { long: a.max(b), short: a.min(b) })
    }

    /// The longer leg (`a` in `(a, 1)` and in links A, B, H, V).
    pub fn long(&self) -> u32 {
        self.long
    }

    /// The shorter leg.
    pub fn short(&self) -> u32 {
        self.short
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut parts = s.split(',').map(str::trim);
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::InvalidMove(format!("expected `a,b`, got `{s}`")));
        };
        let a = a.parse().map_err(|_| Error::InvalidMove(format!("bad leg `{a}`")))?;
        let b = b.parse().map_err(|_| Error::InvalidMove(format!("bad leg `{b}`")))?;
        MoveSpec::new(a, b)
    }

    /// Every displacement vector of this leaper in `d` dimensions, sorted
    /// lexicographically and without duplicates.
    pub fn displacements(&self, d: usize) -> Vec<Vec<i64>> {
        let (a, b) = (self.long as i64, self.short as i64);
        let mut out = Vec::with_capacity(4 * d * d.saturating_sub(1));
        for i in 0..d {
            for j in 0..d {
                if i == j {
                    continue;
                }
                for sa in [-1, 1] {
                    for sb in [-1, 1] {
                        let mut v = vec![0; d];
                        v[i] = sa * a;
                        v[j] = sb * b;
                        out.push(v);
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Whether `delta` is a single move of this leaper.
    pub fn is_displacement(&self, delta: &[i64]) -> bool {
        let mut nonzero = delta.iter().filter(|&&c| c != 0).map(|c| c.unsigned_abs());
        match (nonzero.next(), nonzero.next(), nonzero.next()) {
            (Some(p), Some(q), None) => {
                let (hi, lo) = (p.max(q), p.min(q));
                hi == self.long as u64 && lo == self.short as u64
            }
            _ => false,
        }
    }
}

impl fmt::Display for MoveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.long, self.short)
    }
}

/// Side lengths of a box-shaped board with at least two axes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoardSpec {
    dims: Vec<u32>,
}

impl BoardSpec {
    pub fn new(dims: Vec<u32>) -> Result<Self> {
        if dims.len() < 2 {
            return Err(Error::InvalidBoard(format!("need at least 2 axes, got {}", dims.len())));
        }
        if dims.len() > 16 {
            return Err(Error::InvalidBoard(format!("at most 16 axes are supported, got {}", dims.len())));
        }
        if dims.iter().any(|&n| n == 0) {
            return Err(Error::InvalidBoard("side lengths must be positive".into()));
        }
        let volume = dims.iter().try_fold(1u64, |acc, &n| acc.checked_mul(n as u64));
        match volume {
            Some(v) if v <= u32::MAX as u64 => Ok(BoardSpec { dims }),
            _ => Err(Error::InvalidBoard("board has too many squares".into())),
        }
    }

    pub fn square(n: u32, d: usize) -> Result<Self> {
        BoardSpec::new(vec![n; d])
    }

    pub fn rect(width: u32, height: u32) -> Result<Self> {
        BoardSpec::new(vec![width, height])
    }

    /// Parses `n1xn2[x...]`.
    pub fn parse(s: &str) -> Result<Self> {
        let dims = s
            .split(['x', 'X'])
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::InvalidBoard(format!("bad side `{p}` in `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        BoardSpec::new(dims)
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn ndim(&self) -> usize {
        self.dims.len()
    }

    pub fn volume(&self) -> usize {
        self.dims.iter().map(|&n| n as usize).product()
    }

    pub fn is_cube(&self) -> bool {
        self.dims.iter().all(|&n| n == self.dims[0])
    }

    pub fn contains(&self, c: &[i64]) -> bool {
        c.len() == self.dims.len() && c.iter().zip(&self.dims).all(|(&x, &n)| x >= 0 && x < n as i64)
    }

    /// Linear index of an in-bounds coordinate.
    pub fn index_of(&self, c: &[i64]) -> Option<VertexId> {
        if !self.contains(c) {
            return None;
        }
        let mut idx = 0u64;
        for (&x, &n) in c.iter().zip(&self.dims) {
            idx = idx * n as u64 + x as u64;
        }
        Some(idx as VertexId)
    }

    pub fn coord_of(&self, v: VertexId) -> Coord {
        let mut c = vec![0i64; self.dims.len()];
        self.write_coord(v, &mut c);
        Coord(c)
    }

    pub(crate) fn write_coord(&self, v: VertexId, out: &mut [i64]) {
        let mut rest = v as u64;
        for (slot, &n) in out.iter_mut().zip(&self.dims).rev() {
            *slot = (rest % n as u64) as i64;
            rest /= n as u64;
        }
    }
}

impl fmt::Display for BoardSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// A point of a board. Components are signed so that offsets can be
/// computed freely; a coordinate that belongs to a board is non-negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coord(pub Vec<i64>);

impl Coord {
    pub fn xy(x: i64, y: i64) -> Self {
        Coord(vec![x, y])
    }

    pub fn offset(&self, delta: &[i64]) -> Coord {
        Coord(self.0.iter().zip(delta).map(|(a, b)| a + b).collect())
    }
}

impl From<&[i64]> for Coord {
    fn from(c: &[i64]) -> Self {
        Coord(c.to_vec())
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An unordered pair of coordinates, stored with the smaller one first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge(Coord, Coord);

impl Edge {
    pub fn new(p: Coord, q: Coord) -> Self {
        if p <= q {
            Edge(p, q)
        } else {
            Edge(q, p)
        }
    }

    pub fn xy(p: (i64, i64), q: (i64, i64)) -> Self {
        Edge::new(Coord::xy(p.0, p.1), Coord::xy(q.0, q.1))
    }

    pub fn ends(&self) -> (&Coord, &Coord) {
        (&self.0, &self.1)
    }

    pub fn is_legal(&self, mv: MoveSpec) -> bool {
        let delta: Vec<i64> = self.1 .0.iter().zip(&self.0 .0).map(|(a, b)| a - b).collect();
        self.0 .0.len() == self.1 .0.len() && mv.is_displacement(&delta)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.0, self.1)
    }
}

/// In-bounds neighbours of `c`, sorted lexicographically.
pub fn legal_moves(c: &Coord, board: &BoardSpec, mv: MoveSpec) -> Result<Vec<Coord>> {
    if !board.contains(&c.0) {
        return Err(Error::OutOfBounds(c.to_string()));
    }
    let mut out: Vec<Coord> = mv
        .displacements(board.ndim())
        .iter()
        .map(|d| c.offset(d))
        .filter(|p| board.contains(&p.0))
        .collect();
    out.sort();
    Ok(out)
}

/// Precomputed move graph geometry for fast index-level neighbour queries.
#[derive(Debug, Clone)]
pub struct Geometry {
    board: BoardSpec,
    mv: MoveSpec,
    deltas: Vec<Vec<i64>>,
}

impl Geometry {
    pub fn new(board: BoardSpec, mv: MoveSpec) -> Self {
        let deltas = mv.displacements(board.ndim());
        Geometry { board, mv, deltas }
    }

    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    pub fn mv(&self) -> MoveSpec {
        self.mv
    }

    pub fn volume(&self) -> usize {
        self.board.volume()
    }

    /// Appends the neighbours of `v` to `out` in increasing index order.
    pub fn neighbors_into(&self, v: VertexId, out: &mut Vec<VertexId>) {
        let d = self.board.ndim();
        let mut c = [0i64; 16];
        let mut p = [0i64; 16];
        self.board.write_coord(v, &mut c[..d]);
        for delta in &self.deltas {
            for k in 0..d {
                p[k] = c[k] + delta[k];
            }
            if let Some(w) = self.board.index_of(&p[..d]) {
                out.push(w);
            }
        }
    }

    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.deltas.len());
        self.neighbors_into(v, &mut out);
        out
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        let d = self.board.ndim();
        let mut cu = [0i64; 16];
        let mut cv = [0i64; 16];
        self.board.write_coord(u, &mut cu[..d]);
        self.board.write_coord(v, &mut cv[..d]);
        let mut delta = [0i64; 16];
        for k in 0..d {
            delta[k] = cv[k] - cu[k];
        }
        self.mv.is_displacement(&delta[..d])
    }

    /// Full adjacency lists, one per vertex.
    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        (0..self.volume() as VertexId).map(|v| self.neighbors(v)).collect()
    }

    pub fn index_xy(&self, x: i64, y: i64) -> Option<VertexId> {
        self.board.index_of(&[x, y])
    }
}

/// One of the eight symmetries of a rectangle, applied as: optional
/// transpose, then optional mirror of x, then optional mirror of y.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symmetry {
    pub transpose: bool,
    pub flip_x: bool,
    pub flip_y: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry { transpose: false, flip_x: false, flip_y: false };

    pub fn all() -> impl Iterator<Item = Symmetry> {
        (0..8u8).map(|k| Symmetry { transpose: k & 4 != 0, flip_x: k & 1 != 0, flip_y: k & 2 != 0 })
    }

    /// Dimensions of the image of a `w x h` rectangle.
    pub fn image_dims(&self, w: u32, h: u32) -> (u32, u32) {
        if self.transpose {
            (h, w)
        } else {
            (w, h)
        }
    }

    pub fn apply(&self, x: i64, y: i64, w: u32, h: u32) -> (i64, i64) {
        let (mut x, mut y) = if self.transpose { (y, x) } else { (x, y) };
        let (w, h) = self.image_dims(w, h);
        if self.flip_x {
            x = w as i64 - 1 - x;
        }
        if self.flip_y {
            y = h as i64 - 1 - y;
        }
        (x, y)
    }

    /// Inverse map: the source point that `apply` sends to `(x, y)`.
    pub fn invert(&self, x: i64, y: i64, w: u32, h: u32) -> (i64, i64) {
        let (iw, ih) = self.image_dims(w, h);
        let x = if self.flip_x { iw as i64 - 1 - x } else { x };
        let y = if self.flip_y { ih as i64 - 1 - y } else { y };
        if self.transpose {
            (y, x)
        } else {
            (x, y)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coords(v: &[(i64, i64)]) -> Vec<Coord> {
        v.iter().map(|&(x, y)| Coord::xy(x, y)).collect()
    }

    #[test]
    fn corner_of_standard_knight() {
        let b = BoardSpec::square(14, 2).unwrap();
        let mv = MoveSpec::new(2, 1).unwrap();
        assert_eq!(legal_moves(&Coord::xy(0, 0), &b, mv).unwrap(), coords(&[(1, 2), (2, 1)]));
    }

    #[test]
    fn interior_has_eight() {
        let b = BoardSpec::square(14, 2).unwrap();
        let mv = MoveSpec::new(4, 1).unwrap();
        assert_eq!(legal_moves(&Coord::xy(6, 6), &b, mv).unwrap().len(), 8);
    }

    #[test]
    fn three_dimensional_corner() {
        let b = BoardSpec::square(4, 3).unwrap();
        let mv = MoveSpec::new(2, 1).unwrap();
        let got = legal_moves(&Coord(vec![0, 0, 0]), &b, mv).unwrap();
        // brute force over the whole cube
        let mut want = Vec::new();
        for x in 0..4 {
            for y in 0..4 {
                for z in 0..4 {
                    if mv.is_displacement(&[x, y, z]) {
                        want.push(Coord(vec![x, y, z]));
                    }
                }
            }
        }
        assert_eq!(got, want);
        assert_eq!(
            got,
            vec![
                Coord(vec![0, 1, 2]),
                Coord(vec![0, 2, 1]),
                Coord(vec![1, 0, 2]),
                Coord(vec![1, 2, 0]),
                Coord(vec![2, 0, 1]),
                Coord(vec![2, 1, 0]),
            ]
        );
    }

    #[test]
    fn out_of_bounds_rejected() {
        let b = BoardSpec::square(8, 2).unwrap();
        let mv = MoveSpec::new(2, 1).unwrap();
        assert!(matches!(legal_moves(&Coord::xy(8, 0), &b, mv), Err(Error::OutOfBounds(_))));
    }

    #[test]
    fn move_normalization_and_parse() {
        assert_eq!(MoveSpec::new(1, 2).unwrap(), MoveSpec::new(2, 1).unwrap());
        assert_eq!(MoveSpec::parse("2,5").unwrap().long(), 5);
        assert!(MoveSpec::new(0, 1).is_err());
        assert_eq!(BoardSpec::parse("28x28x28").unwrap().volume(), 21952);
        assert!(BoardSpec::parse("7").is_err());
    }

    #[test]
    fn index_round_trip_is_lexicographic() {
        let b = BoardSpec::new(vec![3, 4, 5]).unwrap();
        let mut prev: Option<Coord> = None;
        for v in 0..b.volume() as VertexId {
            let c = b.coord_of(v);
            assert_eq!(b.index_of(&c.0), Some(v));
            if let Some(p) = prev {
                assert!(p < c);
            }
            prev = Some(c);
        }
    }

    #[test]
    fn symmetries_are_bijections() {
        for s in Symmetry::all() {
            let (w, h) = (5, 3);
            let (iw, ih) = s.image_dims(w, h);
            let mut seen = std::collections::HashSet::new();
            for x in 0..w as i64 {
                for y in 0..h as i64 {
                    let (u, v) = s.apply(x, y, w, h);
                    assert!(u >= 0 && v >= 0 && u < iw as i64 && v < ih as i64);
                    assert_eq!(s.invert(u, v, w, h), (x, y));
                    seen.insert((u, v));
                }
            }
            assert_eq!(seen.len(), 15);
        }
    }
}
