//! Tours (closed leaper walks) and the verifier that certifies them.

use serde::Serialize;

use crate::board::{BoardSpec, Coord, Edge, Geometry, MoveSpec, Symmetry, VertexId};
use crate::error::{Error, Result};
use crate::links::{self, LinkKind, LinkMatch};

/// A cyclic sequence of board vertices; the closing step from the last
/// vertex back to the first is implied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tour {
    board: BoardSpec,
    mv: MoveSpec,
    vertices: Vec<VertexId>,
}

impl Tour {
    /// Wraps a vertex sequence without checking it; call [`verify_tour`]
    /// to certify the result.
    pub fn new(board: BoardSpec, mv: MoveSpec, vertices: Vec<VertexId>) -> Self {
        Tour { board, mv, vertices }
    }

    pub fn from_coords(board: BoardSpec, mv: MoveSpec, coords: &[Coord]) -> Result<Self> {
        let vertices = coords
            .iter()
            .map(|c| board.index_of(&c.0).ok_or_else(|| Error::OutOfBounds(c.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Tour { board, mv, vertices })
    }

    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    pub fn mv(&self) -> MoveSpec {
        self.mv
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn coord(&self, i: usize) -> Coord {
        self.board.coord_of(self.vertices[i])
    }

    pub fn coords(&self) -> impl Iterator<Item = Coord> + '_ {
        self.vertices.iter().map(|&v| self.board.coord_of(v))
    }

    /// Consecutive vertex pairs, including the closing step.
    pub fn steps(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Whether `{p, q}` occurs as a step of the tour.
    pub fn has_edge(&self, p: &Coord, q: &Coord) -> bool {
        let (Some(u), Some(v)) = (self.board.index_of(&p.0), self.board.index_of(&q.0)) else {
            return false;
        };
        self.len() > 1 && self.steps().any(|(x, y)| (x == u && y == v) || (x == v && y == u))
    }

    /// Position of every vertex in the sequence (`u32::MAX` when absent).
    pub fn positions(&self) -> Vec<u32> {
        let mut pos = vec![u32::MAX; self.board.volume()];
        for (i, &v) in self.vertices.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        pos
    }

    /// Image of a 2-D tour under a rectangle symmetry.
    pub fn transformed(&self, sym: Symmetry) -> Tour {
        assert_eq!(self.board.ndim(), 2, "symmetries act on 2-D tours only");
        let (w, h) = (self.board.dims()[0], self.board.dims()[1]);
        let (iw, ih) = sym.image_dims(w, h);
        let image = BoardSpec::rect(iw, ih).expect("image of a valid board");
        let vertices = self
            .vertices
            .iter()
            .map(|&v| {
                let c = self.board.coord_of(v);
                let (x, y) = sym.apply(c.0[0], c.0[1], w, h);
                image.index_of(&[x, y]).expect("symmetry keeps points on the board")
            })
            .collect();
        Tour { board: image, mv: self.mv, vertices }
    }

    /// The tour's steps as coordinate edges.
    pub fn edge_list(&self) -> Vec<Edge> {
        self.steps().map(|(u, v)| Edge::new(self.board.coord_of(u), self.board.coord_of(v))).collect()
    }
}

/// Outcome of [`verify_tour`]. Failures are recorded, never raised.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub length: usize,
    pub board_volume: usize,
    pub out_of_bounds: Option<usize>,
    pub first_duplicate: Option<(usize, Coord)>,
    /// Index `i` of the first step `i -> i+1` that is not a legal move.
    pub first_illegal_step: Option<(usize, Coord, Coord)>,
    pub hamiltonian: bool,
    pub links: Vec<(LinkKind, Option<LinkMatch>)>,
}

impl VerifyReport {
    /// A closed walk without repeated vertices whose steps are all legal.
    pub fn is_valid_cycle(&self) -> bool {
        self.length >= 3 && self.out_of_bounds.is_none() && self.first_duplicate.is_none() && self.first_illegal_step.is_none()
    }

    pub fn is_valid_tour(&self) -> bool {
        self.is_valid_cycle() && self.hamiltonian
    }

    pub fn has_link(&self, kind: LinkKind) -> bool {
        self.links.iter().any(|(k, m)| *k == kind && m.is_some())
    }

    pub fn summary(&self) -> String {
        if self.is_valid_tour() {
            return format!("valid Hamiltonian tour, {} vertices", self.length);
        }
        if let Some(i) = self.out_of_bounds {
            return format!("invalid: vertex {i} lies outside the board");
        }
        if let Some((i, c)) = &self.first_duplicate {
            return format!("invalid: vertex {c} repeated at position {i}");
        }
        if let Some((i, p, q)) = &self.first_illegal_step {
            return format!("invalid: step {i} from {p} to {q} is not a legal move");
        }
        if self.length < 3 {
            return format!("invalid: only {} vertices", self.length);
        }
        format!("valid cycle of {} vertices, not Hamiltonian ({} squares)", self.length, self.board_volume)
    }
}

/// Checks distinctness, step legality, Hamiltonicity and link presence in
/// time linear in the tour length.
pub fn verify_tour(t: &Tour) -> VerifyReport {
    let board = t.board();
    let volume = board.volume();
    let mut report = VerifyReport {
        length: t.len(),
        board_volume: volume,
        out_of_bounds: None,
        first_duplicate: None,
        first_illegal_step: None,
        hamiltonian: false,
        links: Vec::new(),
    };
    if let Some(i) = t.vertices().iter().position(|&v| v as usize >= volume) {
        report.out_of_bounds = Some(i);
        return report;
    }
    let mut seen = vec![false; volume];
    for (i, &v) in t.vertices().iter().enumerate() {
        if std::mem::replace(&mut seen[v as usize], true) {
            report.first_duplicate = Some((i, board.coord_of(v)));
            break;
        }
    }
    let geo = Geometry::new(board.clone(), t.mv());
    if t.len() >= 2 {
        for (i, (u, v)) in t.steps().enumerate() {
            if !geo.adjacent(u, v) {
                report.first_illegal_step = Some((i, board.coord_of(u), board.coord_of(v)));
                break;
            }
        }
    }
    report.hamiltonian = report.first_duplicate.is_none() && t.len() == volume;
    if board.ndim() == 2 && report.is_valid_cycle() {
        for kind in LinkKind::ALL {
            if let Ok(found) = links::contains_link(t, kind) {
                report.links.push((kind, found));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knight() -> MoveSpec {
        MoveSpec::new(2, 1).unwrap()
    }

    #[test]
    fn duplicate_vertex_reported() {
        let b = BoardSpec::square(5, 2).unwrap();
        let t = Tour::from_coords(b, knight(), &[Coord::xy(0, 0), Coord::xy(2, 1), Coord::xy(0, 0), Coord::xy(1, 2)])
            .unwrap();
        let r = verify_tour(&t);
        assert!(!r.is_valid_cycle());
        assert_eq!(r.first_duplicate, Some((2, Coord::xy(0, 0))));
    }

    #[test]
    fn illegal_step_reported() {
        let b = BoardSpec::square(5, 2).unwrap();
        let t = Tour::from_coords(b, knight(), &[Coord::xy(0, 0), Coord::xy(2, 1), Coord::xy(2, 2), Coord::xy(0, 1)])
            .unwrap();
        let r = verify_tour(&t);
        assert_eq!(r.first_illegal_step.map(|s| s.0), Some(1));
    }

    #[test]
    fn small_closed_cycle_is_valid_not_hamiltonian() {
        // four-cycle of the knight on a 4x4 board
        let b = BoardSpec::square(4, 2).unwrap();
        let t = Tour::from_coords(
            b,
            knight(),
            &[Coord::xy(0, 0), Coord::xy(1, 2), Coord::xy(3, 3), Coord::xy(2, 1)],
        )
        .unwrap();
        let r = verify_tour(&t);
        assert!(r.is_valid_cycle());
        assert!(!r.hamiltonian);
    }

    #[test]
    fn transform_preserves_validity() {
        let b = BoardSpec::square(4, 2).unwrap();
        let t = Tour::from_coords(
            b,
            knight(),
            &[Coord::xy(0, 0), Coord::xy(1, 2), Coord::xy(3, 3), Coord::xy(2, 1)],
        )
        .unwrap();
        for s in Symmetry::all() {
            assert!(verify_tour(&t.transformed(s)).is_valid_cycle());
        }
    }
}
