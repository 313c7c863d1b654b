//! Cycle concatenation.
//!
//! Two vertex-disjoint cycles `C1 ∋ A1B1` and `C2 ∋ A2B2` with `A1 ~ A2`
//! and `B1 ~ B2` combine into the single cycle
//! `A1 -(C1)-> B1 - B2 -(C2)-> A2 - A1`; the pair of deleted edges is the
//! bridge. [`Cover`] keeps a vertex-disjoint cycle family as a 2-regular
//! graph so that applying a bridge is a constant-time edge swap.

use std::collections::HashSet;

use crate::board::{BoardSpec, Coord, Edge, Geometry, MoveSpec, VertexId};
use crate::dsu::UnionFind;
use crate::error::{Error, Result};
use crate::tour::Tour;

const NONE: u32 = u32::MAX;

/// A set of undirected edges on vertex indices.
#[derive(Debug, Clone, Default)]
pub struct EdgeSet(HashSet<(VertexId, VertexId)>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet::default()
    }

    pub fn insert(&mut self, u: VertexId, v: VertexId) {
        self.0.insert((u.min(v), u.max(v)));
    }

    pub fn contains(&self, u: VertexId, v: VertexId) -> bool {
        self.0.contains(&(u.min(v), u.max(v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.0.iter().copied()
    }

    /// Converts coordinate edges, skipping those off the board.
    pub fn from_edges<'a>(board: &BoardSpec, edges: impl IntoIterator<Item = &'a Edge>) -> Self {
        let mut set = EdgeSet::new();
        for e in edges {
            let (p, q) = e.ends();
            if let (Some(u), Some(v)) = (board.index_of(&p.0), board.index_of(&q.0)) {
                set.insert(u, v);
            }
        }
        set
    }
}

/// Deletes `{a1,b1}` from one cycle and `{a2,b2}` from another, adding
/// the cross edges `{a1,a2}` and `{b1,b2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bridge {
    pub a1: VertexId,
    pub b1: VertexId,
    pub a2: VertexId,
    pub b2: VertexId,
}

impl Bridge {
    pub fn new(a1: VertexId, b1: VertexId, a2: VertexId, b2: VertexId) -> Self {
        Bridge { a1, b1, a2, b2 }
    }

    /// Builds a bridge from coordinates, failing when one is off the board.
    pub fn from_coords(board: &BoardSpec, a1: &Coord, b1: &Coord, a2: &Coord, b2: &Coord) -> Option<Self> {
        Some(Bridge {
            a1: board.index_of(&a1.0)?,
            b1: board.index_of(&b1.0)?,
            a2: board.index_of(&a2.0)?,
            b2: board.index_of(&b2.0)?,
        })
    }

    pub fn removed(&self, board: &BoardSpec) -> (Edge, Edge) {
        (
            Edge::new(board.coord_of(self.a1), board.coord_of(self.b1)),
            Edge::new(board.coord_of(self.a2), board.coord_of(self.b2)),
        )
    }

    pub fn cross(&self, board: &BoardSpec) -> (Edge, Edge) {
        (
            Edge::new(board.coord_of(self.a1), board.coord_of(self.a2)),
            Edge::new(board.coord_of(self.b1), board.coord_of(self.b2)),
        )
    }

    pub fn cross_is_legal(&self, geo: &Geometry) -> bool {
        geo.adjacent(self.a1, self.a2) && geo.adjacent(self.b1, self.b2)
    }
}

/// Concatenates two disjoint cycles given as vertex sequences.
pub fn compound(geo: &Geometry, c1: &[VertexId], c2: &[VertexId], br: &Bridge) -> Result<Vec<VertexId>> {
    let s1 = open_at(c1, br.a1, br.b1)?;
    let s2 = open_at(c2, br.b2, br.a2)?;
    if !br.cross_is_legal(geo) {
        return Err(Error::Precondition("bridge cross edges are not legal moves".into()));
    }
    let mut out = s1;
    out.extend(s2);
    Ok(out)
}

/// The cycle read as a path from `from` to `to`, which must be adjacent in it.
fn open_at(c: &[VertexId], from: VertexId, to: VertexId) -> Result<Vec<VertexId>> {
    let n = c.len();
    let i = c.iter().position(|&v| v == from);
    let missing = || Error::BridgeMissing(format!("{from}-{to}"));
    let i = i.ok_or_else(missing)?;
    if n >= 3 && c[(i + 1) % n] == to {
        Ok((0..n).map(|k| c[(i + n - k) % n]).collect())
    } else if n >= 3 && c[(i + n - 1) % n] == to {
        Ok((0..n).map(|k| c[(i + k) % n]).collect())
    } else {
        Err(missing())
    }
}

/// A labelled family of vertex-disjoint cycles on one board.
#[derive(Debug, Clone)]
pub struct CycleSet {
    board: BoardSpec,
    mv: MoveSpec,
    cycles: Vec<Vec<VertexId>>,
    label: Vec<u32>,
    pos: Vec<u32>,
}

impl CycleSet {
    pub fn new(board: BoardSpec, mv: MoveSpec, cycles: Vec<Vec<VertexId>>) -> Result<Self> {
        let volume = board.volume();
        let mut label = vec![NONE; volume];
        let mut pos = vec![NONE; volume];
        for (l, c) in cycles.iter().enumerate() {
            for (i, &v) in c.iter().enumerate() {
                if v as usize >= volume {
                    return Err(Error::OutOfBounds(format!("vertex index {v}")));
                }
                if label[v as usize] != NONE {
                    return Err(Error::Precondition(format!("vertex {} lies on two cycles", board.coord_of(v))));
                }
                label[v as usize] = l as u32;
                pos[v as usize] = i as u32;
            }
        }
        Ok(CycleSet { board, mv, cycles, label, pos })
    }

    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    pub fn mv(&self) -> MoveSpec {
        self.mv
    }

    pub fn cycles(&self) -> &[Vec<VertexId>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    /// `(label, position)` of a vertex.
    pub fn lookup(&self, v: VertexId) -> Option<(usize, usize)> {
        let l = *self.label.get(v as usize)?;
        (l != NONE).then(|| (l as usize, self.pos[v as usize] as usize))
    }

    /// The cycle through a vertex given by coordinates.
    pub fn label_of(&self, c: &Coord) -> Option<usize> {
        self.board.index_of(&c.0).and_then(|v| self.lookup(v)).map(|(l, _)| l)
    }

    /// Whether every cycle is a closed legal walk of length at least 3.
    pub fn is_valid(&self) -> bool {
        let geo = Geometry::new(self.board.clone(), self.mv);
        self.cycles.iter().all(|c| {
            c.len() >= 3 && (0..c.len()).all(|i| geo.adjacent(c[i], c[(i + 1) % c.len()]))
        })
    }

    /// Whether every board vertex lies on some cycle.
    pub fn is_spanning(&self) -> bool {
        self.label.iter().all(|&l| l != NONE)
    }

    pub fn to_json(&self) -> Result<String> {
        let cycles: Vec<Vec<Vec<i64>>> =
            self.cycles.iter().map(|c| c.iter().map(|&v| self.board.coord_of(v).0).collect()).collect();
        let doc = serde_json::json!({
            "move": [self.mv.long(), self.mv.short()],
            "dims": self.board.dims(),
            "cycles": cycles,
        });
        Ok(serde_json::to_string(&doc)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct Doc {
            #[serde(rename = "move")]
            mv: [u32; 2],
            dims: Vec<u32>,
            cycles: Vec<Vec<Vec<i64>>>,
        }
        let doc: Doc = serde_json::from_str(s)?;
        let board = BoardSpec::new(doc.dims)?;
        let mv = MoveSpec::new(doc.mv[0], doc.mv[1])?;
        let cycles = doc
            .cycles
            .iter()
            .map(|c| {
                c.iter()
                    .map(|p| board.index_of(p).ok_or_else(|| Error::OutOfBounds(format!("{p:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        CycleSet::new(board, mv, cycles)
    }
}

/// Lexicographically least bridge between cycles `l1` and `l2` whose
/// deleted edges avoid `protected`.
///
/// Edges of `l1` are scanned in `(min endpoint, max endpoint)` order; for
/// each, both orientations and the neighbours on `l2` in increasing order.
pub fn find_bridge(cs: &CycleSet, l1: usize, l2: usize, protected: &EdgeSet) -> Option<Bridge> {
    if l1 == l2 || l1 >= cs.len() || l2 >= cs.len() {
        return None;
    }
    let geo = Geometry::new(cs.board.clone(), cs.mv);
    let c1 = &cs.cycles[l1];
    let c2 = &cs.cycles[l2];
    let mut edges: Vec<(VertexId, VertexId)> =
        (0..c1.len()).map(|i| (c1[i], c1[(i + 1) % c1.len()])).map(|(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    let mut nbrs = Vec::new();
    for (u, v) in edges {
        if protected.contains(u, v) {
            continue;
        }
        for (a1, b1) in [(u, v), (v, u)] {
            nbrs.clear();
            geo.neighbors_into(a1, &mut nbrs);
            for &a2 in &nbrs {
                let Some((l, i)) = cs.lookup(a2) else { continue };
                if l != l2 {
                    continue;
                }
                let mut around = [c2[(i + 1) % c2.len()], c2[(i + c2.len() - 1) % c2.len()]];
                around.sort_unstable();
                for b2 in around {
                    if !protected.contains(a2, b2) && geo.adjacent(b1, b2) {
                        return Some(Bridge { a1, b1, a2, b2 });
                    }
                }
            }
        }
    }
    None
}

/// Merges every cycle of the set into one tour, never deleting a
/// protected edge.
pub fn merge_all(cs: &CycleSet, protected: &EdgeSet) -> Result<Tour> {
    let mut cover = Cover::new(Geometry::new(cs.board.clone(), cs.mv));
    for c in &cs.cycles {
        cover.add_cycle(c)?;
    }
    cover.merge_all(protected)?;
    cover.into_tour()
}

/// A vertex-disjoint family of cycles stored as a 2-regular graph.
#[derive(Debug, Clone)]
pub struct Cover {
    geo: Geometry,
    nbr: Vec<[u32; 2]>,
    uf: UnionFind,
    starts: Vec<VertexId>,
    components: usize,
    covered: usize,
}

impl Cover {
    pub fn new(geo: Geometry) -> Self {
        let n = geo.volume();
        Cover { geo, nbr: vec![[NONE; 2]; n], uf: UnionFind::new(n), starts: Vec::new(), components: 0, covered: 0 }
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geo
    }

    pub fn board(&self) -> &BoardSpec {
        self.geo.board()
    }

    /// Number of cycles currently stored.
    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn covered(&self) -> usize {
        self.covered
    }

    pub fn is_covered(&self, v: VertexId) -> bool {
        self.nbr[v as usize][0] != NONE
    }

    /// Adds a cycle; its vertices must be uncovered and its steps legal.
    pub fn add_cycle(&mut self, c: &[VertexId]) -> Result<()> {
        let n = c.len();
        if n < 3 {
            return Err(Error::Precondition(format!("cycle of length {n}")));
        }
        for &v in c {
            if v as usize >= self.nbr.len() {
                return Err(Error::OutOfBounds(format!("vertex index {v}")));
            }
            if self.is_covered(v) {
                return Err(Error::Precondition(format!("vertex {} already covered", self.board().coord_of(v))));
            }
        }
        for i in 0..n {
            let (u, v) = (c[i], c[(i + 1) % n]);
            if !self.geo.adjacent(u, v) {
                return Err(Error::Precondition(format!(
                    "step {} -> {} is not a legal move",
                    self.board().coord_of(u),
                    self.board().coord_of(v)
                )));
            }
        }
        for i in 0..n {
            let v = c[i];
            self.nbr[v as usize] = [c[(i + n - 1) % n], c[(i + 1) % n]];
            self.uf.union(c[0], v);
        }
        self.starts.push(c[0]);
        self.components += 1;
        self.covered += n;
        Ok(())
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let n = self.nbr[u as usize];
        n[0] == v || n[1] == v
    }

    pub fn cycle_neighbors(&self, v: VertexId) -> [VertexId; 2] {
        self.nbr[v as usize]
    }

    pub fn same_cycle(&mut self, u: VertexId, v: VertexId) -> bool {
        self.uf.find(u) == self.uf.find(v)
    }

    /// Checks that `br` is applicable: both edges present, in different
    /// cycles, and the cross edges legal.
    pub fn check_bridge(&mut self, br: &Bridge) -> Result<()> {
        let board = self.board().clone();
        let (e1, e2) = br.removed(&board);
        if !self.has_edge(br.a1, br.b1) {
            return Err(Error::BridgeMissing(e1.to_string()));
        }
        if !self.has_edge(br.a2, br.b2) {
            return Err(Error::BridgeMissing(e2.to_string()));
        }
        if self.same_cycle(br.a1, br.a2) {
            return Err(Error::Precondition(format!("bridge {e1} / {e2} lies within one cycle")));
        }
        if !br.cross_is_legal(&self.geo) {
            return Err(Error::Precondition(format!("bridge {e1} / {e2} has illegal cross edges")));
        }
        Ok(())
    }

    /// Applies a bridge after checking it.
    pub fn apply_bridge(&mut self, br: &Bridge) -> Result<()> {
        self.check_bridge(br)?;
        self.swap_edges(br);
        Ok(())
    }

    fn swap_edges(&mut self, br: &Bridge) {
        self.replace(br.a1, br.b1, br.a2);
        self.replace(br.b1, br.a1, br.b2);
        self.replace(br.a2, br.b2, br.a1);
        self.replace(br.b2, br.a2, br.b1);
        self.uf.union(br.a1, br.a2);
        self.components -= 1;
    }

    fn replace(&mut self, v: VertexId, old: VertexId, new: VertexId) {
        let slot = &mut self.nbr[v as usize];
        if slot[0] == old {
            slot[0] = new;
        } else {
            debug_assert_eq!(slot[1], old);
            slot[1] = new;
        }
    }

    /// Tries each bridge in order and applies the first that is valid.
    pub fn apply_first(&mut self, candidates: &[Bridge]) -> Option<Bridge> {
        for br in candidates {
            if self.check_bridge(br).is_ok() {
                self.swap_edges(br);
                return Some(*br);
            }
        }
        None
    }

    /// Applies the first bridge found between the cycles through `u` and
    /// `v`, scanning the edges of `u`'s cycle in increasing order.
    pub fn bridge_between(&mut self, u: VertexId, v: VertexId, protected: &EdgeSet) -> Option<Bridge> {
        let target = self.uf.find(v);
        let source = self.uf.find(u);
        if target == source {
            return None;
        }
        let mut cyc = self.walk(u);
        cyc.sort_unstable();
        let mut nbrs = Vec::new();
        for x in cyc {
            for y in self.nbr[x as usize] {
                if y < x {
                    continue;
                }
                if let Some(br) = self.scan_edge(x, y, Some(target), protected, &mut nbrs) {
                    self.swap_edges(&br);
                    return Some(br);
                }
            }
        }
        None
    }

    /// A bridge between the cover and a cycle not yet added, using that
    /// cycle's edge `{p, q}`. Covered vertices are scanned in increasing
    /// order around `p`, then around `q`.
    pub fn bridge_to_external(&self, p: VertexId, q: VertexId, protected: &EdgeSet) -> Option<Bridge> {
        let mut nbrs = Vec::new();
        for (a2, b2) in [(p, q), (q, p)] {
            nbrs.clear();
            self.geo.neighbors_into(a2, &mut nbrs);
            for &a1 in &nbrs {
                if !self.is_covered(a1) {
                    continue;
                }
                let mut around = self.nbr[a1 as usize];
                around.sort_unstable();
                for b1 in around {
                    if b1 != b2 && !protected.contains(a1, b1) && self.geo.adjacent(b1, b2) {
                        return Some(Bridge { a1, b1, a2, b2 });
                    }
                }
            }
        }
        None
    }

    fn scan_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        target: Option<u32>,
        protected: &EdgeSet,
        nbrs: &mut Vec<VertexId>,
    ) -> Option<Bridge> {
        if protected.contains(u, v) {
            return None;
        }
        let root = self.uf.find(u);
        for (a1, b1) in [(u, v), (v, u)] {
            nbrs.clear();
            self.geo.neighbors_into(a1, nbrs);
            for k in 0..nbrs.len() {
                let a2 = nbrs[k];
                if !self.is_covered(a2) {
                    continue;
                }
                let r2 = self.uf.find(a2);
                if r2 == root || target.is_some_and(|t| t != r2) {
                    continue;
                }
                let mut around = self.nbr[a2 as usize];
                around.sort_unstable();
                for b2 in around {
                    if !protected.contains(a2, b2) && self.geo.adjacent(b1, b2) {
                        return Some(Bridge { a1, b1, a2, b2 });
                    }
                }
            }
        }
        None
    }

    /// Repeatedly scans edges in `(min, max)` order, applying every
    /// bridge found, until a single cycle remains.
    pub fn merge_all(&mut self, protected: &EdgeSet) -> Result<()> {
        let mut nbrs = Vec::new();
        while self.components > 1 {
            let before = self.components;
            for u in 0..self.nbr.len() as VertexId {
                if self.components == 1 {
                    break;
                }
                if !self.is_covered(u) {
                    continue;
                }
                // the edges at u change after a swap, so rescan u until stable
                loop {
                    let mut applied = false;
                    for v in self.nbr[u as usize] {
                        if v < u {
                            continue;
                        }
                        if let Some(br) = self.scan_edge(u, v, None, protected, &mut nbrs) {
                            self.swap_edges(&br);
                            applied = true;
                            break;
                        }
                    }
                    if !applied || self.components == 1 {
                        break;
                    }
                }
            }
            if self.components == before {
                return Err(Error::Unmergeable(self.component_labels()));
            }
        }
        Ok(())
    }

    /// Smallest original cycle label in each remaining component.
    pub fn component_labels(&mut self) -> Vec<usize> {
        let mut seen = std::collections::BTreeMap::new();
        for (label, &s) in self.starts.clone().iter().enumerate() {
            let r = self.uf.find(s);
            seen.entry(r).or_insert(label);
        }
        let mut labels: Vec<usize> = seen.into_values().collect();
        labels.sort_unstable();
        labels
    }

    /// The cycle through `start`, beginning there and stepping first to
    /// its smaller cycle neighbour.
    pub fn walk(&self, start: VertexId) -> Vec<VertexId> {
        let mut out = vec![start];
        let [p, q] = self.nbr[start as usize];
        if p == NONE {
            return Vec::new();
        }
        let mut prev = start;
        let mut cur = p.min(q);
        while cur != start {
            out.push(cur);
            let [x, y] = self.nbr[cur as usize];
            let next = if x != prev { x } else { y };
            prev = cur;
            cur = next;
        }
        out
    }

    /// All cycles, each starting at its smallest vertex, ordered by it.
    pub fn cycles(&self) -> Vec<Vec<VertexId>> {
        let mut done = vec![false; self.nbr.len()];
        let mut out = Vec::new();
        for v in 0..self.nbr.len() as VertexId {
            if done[v as usize] || !self.is_covered(v) {
                continue;
            }
            let c = self.walk(v);
            for &w in &c {
                done[w as usize] = true;
            }
            out.push(c);
        }
        out
    }

    pub fn to_cycle_set(&self) -> Result<CycleSet> {
        CycleSet::new(self.board().clone(), self.geo.mv(), self.cycles())
    }

    /// The single remaining cycle as a tour starting at its smallest vertex.
    pub fn into_tour(self) -> Result<Tour> {
        if self.components != 1 {
            return Err(Error::Construction(format!("{} cycles remain", self.components)));
        }
        let start = (0..self.nbr.len() as VertexId)
            .find(|&v| self.is_covered(v))
            .ok_or_else(|| Error::Construction("empty cover".into()))?;
        let vertices = self.walk(start);
        Ok(Tour::new(self.board().clone(), self.geo.mv(), vertices))
    }
}
