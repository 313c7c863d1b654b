//! Spanning cycle covers of bipartite leaper graphs.
//!
//! When `a + b` is odd the leaper graph is bipartite by coordinate-sum
//! parity, so a 2-factor is a subgraph in which every vertex has degree
//! two. That is a simple b-matching with `b = 2`, solved here as a maximum
//! flow: source to each even vertex (capacity 2), every edge even to odd
//! (capacity 1), each odd vertex to sink (capacity 2).

use std::collections::VecDeque;

use crate::board::{BoardSpec, Edge, Geometry, MoveSpec, VertexId};
use crate::error::{Error, Result};
use crate::merge::CycleSet;

/// A spanning cycle cover, or `None` when the graph has none.
pub fn two_factor(board: &BoardSpec, mv: MoveSpec) -> Result<Option<CycleSet>> {
    two_factor_with(board, mv, &[], &[])
}

/// A spanning cycle cover containing every `required` edge and none of
/// the `forbidden` ones.
pub fn two_factor_with(
    board: &BoardSpec,
    mv: MoveSpec,
    required: &[Edge],
    forbidden: &[Edge],
) -> Result<Option<CycleSet>> {
    if (mv.long() + mv.short()) % 2 == 0 {
        return Err(Error::Unsupported("cycle covers need a bipartite leaper graph".into()));
    }
    let geo = Geometry::new(board.clone(), mv);
    let n = geo.volume();
    let parity = |v: VertexId| board.coord_of(v).0.iter().sum::<i64>().rem_euclid(2) == 0;
    let to_pair = |e: &Edge| -> Result<(VertexId, VertexId)> {
        let (p, q) = e.ends();
        match (board.index_of(&p.0), board.index_of(&q.0)) {
            (Some(u), Some(v)) if e.is_legal(mv) => Ok((u.min(v), u.max(v))),
            _ => Err(Error::Precondition(format!("edge {e} is not a legal move on {board}"))),
        }
    };
    let req: Vec<(VertexId, VertexId)> = required.iter().map(to_pair).collect::<Result<_>>()?;
    let forb: Vec<(VertexId, VertexId)> = forbidden.iter().map(to_pair).collect::<Result<_>>()?;

    let mut need = vec![2i32; n];
    let mut chosen: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for &(u, v) in &req {
        if chosen[u as usize].contains(&v) {
            continue;
        }
        need[u as usize] -= 1;
        need[v as usize] -= 1;
        chosen[u as usize].push(v);
        chosen[v as usize].push(u);
    }
    if need.iter().any(|&k| k < 0) {
        return Ok(None);
    }

    // nodes: 0 = source, 1 = sink, 2.. = vertices
    let mut flow = Dinic::new(n + 2);
    let mut edge_ids = Vec::new();
    let mut even_total = 0;
    let mut odd_total = 0;
    for v in 0..n as VertexId {
        if parity(v) {
            flow.add(0, v as usize + 2, need[v as usize]);
            even_total += need[v as usize];
            for w in geo.neighbors(v) {
                let key = (v.min(w), v.max(w));
                if req.contains(&key) || forb.contains(&key) {
                    continue;
                }
                edge_ids.push((flow.add(v as usize + 2, w as usize + 2, 1), v, w));
            }
        } else {
            flow.add(v as usize + 2, 1, need[v as usize]);
            odd_total += need[v as usize];
        }
    }
    if even_total != odd_total || flow.max_flow(0, 1) != even_total {
        return Ok(None);
    }
    for (id, v, w) in edge_ids {
        if flow.flow_on(id) == 1 {
            chosen[v as usize].push(w);
            chosen[w as usize].push(v);
        }
    }
    let cycles = trace_cycles(&chosen);
    CycleSet::new(board.clone(), mv, cycles).map(Some)
}

/// Splits a 2-regular graph into cycles, each starting at its smallest
/// vertex and heading to the smaller neighbour.
fn trace_cycles(nbr: &[Vec<VertexId>]) -> Vec<Vec<VertexId>> {
    let mut done = vec![false; nbr.len()];
    let mut out = Vec::new();
    for s in 0..nbr.len() {
        if done[s] {
            continue;
        }
        let mut c = vec![s as VertexId];
        done[s] = true;
        let mut prev = s as VertexId;
        let mut cur = nbr[s][0].min(nbr[s][1]);
        while cur as usize != s {
            done[cur as usize] = true;
            c.push(cur);
            let [x, y] = [nbr[cur as usize][0], nbr[cur as usize][1]];
            let next = if x != prev { x } else { y };
            prev = cur;
            cur = next;
        }
        out.push(c);
    }
    out
}

struct Dinic {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<i32>,
    next: Vec<usize>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

const END: usize = usize::MAX;

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic { head: vec![END; n], to: Vec::new(), cap: Vec::new(), next: Vec::new(), level: vec![0; n], iter: vec![0; n] }
    }

    fn add(&mut self, u: usize, v: usize, c: i32) -> usize {
        let id = self.to.len();
        for (a, b, cap) in [(u, v, c), (v, u, 0)] {
            self.to.push(b);
            self.cap.push(cap);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
        id
    }

    fn flow_on(&self, id: usize) -> i32 {
        self.cap[id ^ 1]
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let mut e = self.head[u];
            while e != END {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    q.push_back(v);
                }
                e = self.next[e];
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, f: i32) -> i32 {
        if u == t {
            return f;
        }
        while self.iter[u] != END {
            let e = self.iter[u];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, f.min(self.cap[e]));
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            self.iter[u] = self.next[e];
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i32 {
        let mut total = 0;
        while self.bfs(s, t) {
            self.iter.clone_from(&self.head);
            loop {
                let f = self.dfs(s, t, i32::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_cover(cs: &CycleSet) {
        assert!(cs.is_valid());
        assert!(cs.is_spanning());
        assert!(cs.cycles().iter().all(|c| c.len() % 2 == 0 && c.len() >= 4));
    }

    #[test]
    fn knight_4x4_cover() {
        let b = BoardSpec::square(4, 2).unwrap();
        let cs = two_factor(&b, MoveSpec::new(2, 1).unwrap()).unwrap().unwrap();
        check_cover(&cs);
        assert_eq!(cs.vertex_count(), 16);
    }

    #[test]
    fn brick_sized_cover() {
        let b = BoardSpec::rect(20, 10).unwrap();
        let cs = two_factor(&b, MoveSpec::new(2, 5).unwrap()).unwrap().unwrap();
        check_cover(&cs);
        assert_eq!(cs.vertex_count(), 200);
    }

    #[test]
    fn odd_board_has_no_cover() {
        let b = BoardSpec::square(15, 2).unwrap();
        assert!(two_factor(&b, MoveSpec::new(2, 1).unwrap()).unwrap().is_none());
    }

    #[test]
    fn required_edges_are_kept() {
        let b = BoardSpec::rect(20, 10).unwrap();
        let mv = MoveSpec::new(2, 5).unwrap();
        let req = [Edge::xy((4, 2), (2, 7)), Edge::xy((2, 4), (7, 2))];
        let cs = two_factor_with(&b, mv, &req, &[]).unwrap().unwrap();
        check_cover(&cs);
        for e in &req {
            let (p, q) = e.ends();
            let (u, v) = (b.index_of(&p.0).unwrap(), b.index_of(&q.0).unwrap());
            let c = &cs.cycles()[cs.lookup(u).unwrap().0];
            let i = c.iter().position(|&x| x == u).unwrap();
            assert!(c[(i + 1) % c.len()] == v || c[(i + c.len() - 1) % c.len()] == v);
        }
    }
}
