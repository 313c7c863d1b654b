//! Backtracking search for a Hamiltonian cycle of the leaper graph.
//!
//! Every edge is undecided, in or out. Each vertex needs exactly two edges
//! in: a vertex whose undecided edges are just enough is completed, a
//! vertex already holding two loses the rest, and an edge that would close
//! a cycle short of all vertices is removed. Branching picks the vertex
//! with the fewest undecided edges (Warnsdorff's rule in edge form, ties by
//! vertex index) and tries its edges toward the most constrained
//! neighbour first.

use std::time::{Duration, Instant};

use crate::board::{BoardSpec, Edge, Geometry, MoveSpec, VertexId};
use crate::error::{Error, Result};
use crate::tour::{verify_tour, Tour};

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub required_edges: Vec<Edge>,
    pub timeout: Duration,
    pub node_limit: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { required_edges: Vec::new(), timeout: Duration::from_secs(120), node_limit: 500_000_000 }
    }
}

impl SearchConfig {
    pub fn with_required(mut self, edges: impl IntoIterator<Item = Edge>) -> Self {
        self.required_edges.extend(edges);
        self
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = timeout;
        self
    }

    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = limit;
        self
    }
}

/// Searches for a Hamiltonian cycle through every required edge.
///
/// Returns `Error::Exhausted` when the search space was covered without
/// success and `Error::Timeout` when a limit cut it short.
pub fn ham_cycle_search(board: &BoardSpec, mv: MoveSpec, cfg: &SearchConfig) -> Result<Tour> {
    let geo = Geometry::new(board.clone(), mv);
    let n = geo.volume();
    if n < 3 {
        return Err(Error::Exhausted);
    }
    let adj = geo.adjacency();
    let mut ends = Vec::new();
    let mut inc: Vec<Vec<(u32, VertexId)>> = vec![Vec::new(); n];
    for (u, nb) in adj.iter().enumerate() {
        for &v in nb {
            if (u as VertexId) < v {
                let id = ends.len() as u32;
                ends.push((u as VertexId, v));
                inc[u].push((id, v));
                inc[v as usize].push((id, u as VertexId));
            }
        }
    }
    let mut required = Vec::new();
    for e in &cfg.required_edges {
        let (p, q) = e.ends();
        let (Some(u), Some(v)) = (board.index_of(&p.0), board.index_of(&q.0)) else {
            return Err(Error::Precondition(format!("required edge {e} is off the board")));
        };
        let Some(&(id, _)) = inc[u as usize].iter().find(|&&(_, w)| w == v) else {
            return Err(Error::Precondition(format!("required edge {e} is not a legal move")));
        };
        required.push(id);
    }

    let mut s = State {
        n,
        ends,
        inc,
        state: Vec::new(),
        ins: vec![0; n],
        open: Vec::new(),
        end_of: (0..n as VertexId).collect(),
        chosen: 0,
        trail: Vec::new(),
        queue: Vec::new(),
        nodes: 0,
        node_limit: cfg.node_limit,
        deadline: Instant::now() + cfg.timeout,
        aborted: false,
        seen: vec![0; n],
        stamp: 0,
        stack: Vec::with_capacity(n),
    };
    s.state = vec![UNDECIDED; s.ends.len()];
    s.open = s.inc.iter().map(|l| l.len() as u32).collect();
    s.queue.extend(0..n as VertexId);
    let ok = required.iter().all(|&id| s.state[id as usize] == IN || s.set_in(id)) && s.propagate();
    if ok && s.solve() {
        let t = Tour::new(board.clone(), mv, s.extract());
        let report = verify_tour(&t);
        if !report.is_valid_tour() {
            return Err(Error::Construction(format!("search produced an invalid tour: {}", report.summary())));
        }
        return Ok(t);
    }
    if s.aborted {
        Err(Error::Timeout { nodes: s.nodes })
    } else {
        Err(Error::Exhausted)
    }
}

const UNDECIDED: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

enum Undo {
    Edge(u32),
    EndOf(VertexId, VertexId),
}

struct State {
    n: usize,
    ends: Vec<(VertexId, VertexId)>,
    inc: Vec<Vec<(u32, VertexId)>>,
    state: Vec<u8>,
    /// Edges in at each vertex.
    ins: Vec<u32>,
    /// Undecided edges at each vertex.
    open: Vec<u32>,
    /// For a path-fragment endpoint, the other endpoint.
    end_of: Vec<VertexId>,
    chosen: usize,
    trail: Vec<Undo>,
    queue: Vec<VertexId>,
    nodes: u64,
    node_limit: u64,
    deadline: Instant,
    aborted: bool,
    seen: Vec<u32>,
    stamp: u32,
    stack: Vec<VertexId>,
}

impl State {
    fn set_end(&mut self, v: VertexId, to: VertexId) {
        self.trail.push(Undo::EndOf(v, self.end_of[v as usize]));
        self.end_of[v as usize] = to;
    }

    fn set_in(&mut self, id: u32) -> bool {
        let (u, v) = self.ends[id as usize];
        if self.state[id as usize] != UNDECIDED || self.ins[u as usize] >= 2 || self.ins[v as usize] >= 2 {
            return false;
        }
        let (a, b) = (self.end_of[u as usize], self.end_of[v as usize]);
        let closes = a == v;
        if closes && self.chosen + 1 != self.n {
            return false;
        }
        self.state[id as usize] = IN;
        self.trail.push(Undo::Edge(id));
        self.ins[u as usize] += 1;
        self.ins[v as usize] += 1;
        self.open[u as usize] -= 1;
        self.open[v as usize] -= 1;
        self.chosen += 1;
        self.queue.push(u);
        self.queue.push(v);
        if !closes {
            self.set_end(a, b);
            self.set_end(b, a);
            // the edge joining the new fragment's ends would close it early
            if self.chosen + 1 < self.n {
                if let Some(&(cid, _)) = self.inc[a as usize].iter().find(|&&(_, w)| w == b) {
                    if self.state[cid as usize] == UNDECIDED {
                        self.set_out(cid);
                    }
                }
            }
        }
        true
    }

    fn set_out(&mut self, id: u32) {
        let (u, v) = self.ends[id as usize];
        self.state[id as usize] = OUT;
        self.trail.push(Undo::Edge(id));
        self.open[u as usize] -= 1;
        self.open[v as usize] -= 1;
        self.queue.push(u);
        self.queue.push(v);
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Undo::Edge(id) => {
                    let (u, v) = self.ends[id as usize];
                    if self.state[id as usize] == IN {
                        self.ins[u as usize] -= 1;
                        self.ins[v as usize] -= 1;
                        self.chosen -= 1;
                    }
                    self.open[u as usize] += 1;
                    self.open[v as usize] += 1;
                    self.state[id as usize] = UNDECIDED;
                }
                Undo::EndOf(v, old) => self.end_of[v as usize] = old,
            }
        }
    }

    fn propagate(&mut self) -> bool {
        while let Some(v) = self.queue.pop() {
            let (ins, open) = (self.ins[v as usize], self.open[v as usize]);
            if ins + open < 2 {
                self.queue.clear();
                return false;
            }
            if open == 0 {
                continue;
            }
            if ins == 2 || ins + open == 2 {
                let take = ins < 2;
                for k in 0..self.inc[v as usize].len() {
                    let (id, _) = self.inc[v as usize][k];
                    if self.state[id as usize] != UNDECIDED {
                        continue;
                    }
                    if take {
                        if !self.set_in(id) {
                            self.queue.clear();
                            return false;
                        }
                    } else {
                        self.set_out(id);
                    }
                }
            }
        }
        true
    }

    /// All vertices lie in one component of the in-or-undecided graph.
    fn connected(&mut self) -> bool {
        self.stamp += 1;
        let stamp = self.stamp;
        self.stack.clear();
        self.stack.push(0);
        self.seen[0] = stamp;
        let mut reached = 0;
        while let Some(v) = self.stack.pop() {
            reached += 1;
            for &(id, w) in &self.inc[v as usize] {
                if self.state[id as usize] != OUT && self.seen[w as usize] != stamp {
                    self.seen[w as usize] = stamp;
                    self.stack.push(w);
                }
            }
        }
        reached == self.n
    }

    fn solve(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes & 1023 == 0 && (self.nodes >= self.node_limit || Instant::now() >= self.deadline) {
            self.aborted = true;
            return false;
        }
        if self.chosen == self.n {
            return true;
        }
        if !self.connected() {
            return false;
        }
        let mut best: Option<(u32, u32, VertexId)> = None;
        for v in 0..self.n as VertexId {
            let open = self.open[v as usize];
            if open == 0 {
                continue;
            }
            let need = 2 - self.ins[v as usize];
            let key = (open - need, 2 - need, v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let Some((_, _, v)) = best else { return false };
        let (_, id) = self.inc[v as usize]
            .iter()
            .filter(|&&(id, _)| self.state[id as usize] == UNDECIDED)
            .map(|&(id, w)| (self.open[w as usize], id))
            .min()
            .unwrap();
        let mark = self.trail.len();
        if self.set_in(id) && self.propagate() && self.solve() {
            return true;
        }
        self.undo(mark);
        if self.aborted {
            return false;
        }
        self.set_out(id);
        if self.propagate() && self.solve() {
            return true;
        }
        self.undo(mark);
        false
    }

    fn extract(&self) -> Vec<VertexId> {
        let mut nbr = vec![Vec::with_capacity(2); self.n];
        for (id, &(u, v)) in self.ends.iter().enumerate() {
            if self.state[id] == IN {
                nbr[u as usize].push(v);
                nbr[v as usize].push(u);
            }
        }
        let mut out = vec![0];
        let mut prev = 0;
        let mut cur = nbr[0][0].min(nbr[0][1]);
        while cur != 0 {
            out.push(cur);
            let next = if nbr[cur as usize][0] != prev { nbr[cur as usize][0] } else { nbr[cur as usize][1] };
            prev = cur;
            cur = next;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knight() -> MoveSpec {
        MoveSpec::new(2, 1).unwrap()
    }

    #[test]
    fn finds_knight_tour_on_6x6() {
        let b = BoardSpec::square(6, 2).unwrap();
        let t = ham_cycle_search(&b, knight(), &SearchConfig::default()).unwrap();
        assert!(verify_tour(&t).is_valid_tour());
    }

    #[test]
    fn knight_4x4_is_exhausted() {
        let b = BoardSpec::square(4, 2).unwrap();
        assert!(matches!(ham_cycle_search(&b, knight(), &SearchConfig::default()), Err(Error::Exhausted)));
    }

    #[test]
    fn knight_5x6_and_3x10() {
        // small rectangles with and without tours
        let none = BoardSpec::rect(4, 5).unwrap();
        assert!(matches!(ham_cycle_search(&none, knight(), &SearchConfig::default()), Err(Error::Exhausted)));
        let some = BoardSpec::rect(3, 10).unwrap();
        assert!(ham_cycle_search(&some, knight(), &SearchConfig::default()).is_ok());
    }

    #[test]
    fn required_edge_is_used() {
        let b = BoardSpec::square(6, 2).unwrap();
        let e = Edge::xy((2, 2), (4, 3));
        let cfg = SearchConfig::default().with_required([e.clone()]);
        let t = ham_cycle_search(&b, knight(), &cfg).unwrap();
        let (p, q) = e.ends();
        assert!(t.has_edge(p, q));
    }

    /// Plain depth-first enumeration of Hamiltonian cycles through vertex 0.
    fn brute_has_cycle(geo: &Geometry) -> bool {
        fn go(adj: &[Vec<VertexId>], cur: VertexId, seen: &mut Vec<bool>, left: usize) -> bool {
            if left == 0 {
                return adj[cur as usize].contains(&0);
            }
            for &w in &adj[cur as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    if go(adj, w, seen, left - 1) {
                        return true;
                    }
                    seen[w as usize] = false;
                }
            }
            false
        }
        let adj = geo.adjacency();
        let mut seen = vec![false; adj.len()];
        seen[0] = true;
        go(&adj, 0, &mut seen, adj.len() - 1)
    }

    #[test]
    fn agrees_with_enumeration_on_small_rectangles() {
        for (a, b) in [(2, 1), (3, 2), (4, 1)] {
            let mv = MoveSpec::new(a, b).unwrap();
            for w in 3..=6u32 {
                for h in w..=(30 / w).min(8) {
                    if w * h % 2 == 1 {
                        continue;
                    }
                    let board = BoardSpec::rect(w, h).unwrap();
                    let geo = Geometry::new(board.clone(), mv);
                    let expect = brute_has_cycle(&geo);
                    let got = ham_cycle_search(&board, mv, &SearchConfig::default());
                    assert_eq!(got.is_ok(), expect, "({a},{b}) on {w}x{h}");
                    assert!(got.is_ok() || matches!(got, Err(Error::Exhausted)));
                }
            }
        }
    }

    #[test]
    fn tiny_limits_time_out() {
        let b = BoardSpec::square(30, 2).unwrap();
        let cfg = SearchConfig::default().with_node_limit(1);
        let r = ham_cycle_search(&b, MoveSpec::new(2, 5).unwrap(), &cfg);
        assert!(matches!(r, Err(Error::Timeout { .. }) | Ok(_)));
    }
}
