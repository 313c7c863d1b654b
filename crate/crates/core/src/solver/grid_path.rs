//! Hamiltonian paths between fixed endpoints in small rectangular grid
//! graphs (unit steps), with a process-wide cache keyed up to symmetry.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::board::Symmetry;
use crate::error::Result;

/// A grid cell `(x, y)` with `x < w` and `y < h`.
pub type Cell = (u32, u32);

type Key = (u32, u32, Cell, Cell);

fn cache() -> &'static Mutex<HashMap<Key, Option<Vec<Cell>>>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Option<Vec<Cell>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// A Hamiltonian path of the `w x h` grid from `start` to `end`, if one
/// exists. Intended for grids of side at most 8.
pub fn grid_ham_path_between(w: u32, h: u32, start: Cell, end: Cell) -> Option<Vec<Cell>> {
    if w == 0 || h == 0 || start.0 >= w || start.1 >= h || end.0 >= w || end.1 >= h {
        return None;
    }
    let (key, sym, reversed) = canonical(w, h, start, end);
    let hit = cache().lock().unwrap().get(&key).cloned();
    let canon = match hit {
        Some(p) => p,
        None => {
            let p = search(key.0, key.1, key.2, key.3);
            cache().lock().unwrap().insert(key, p.clone());
            p
        }
    };
    let mut path: Vec<Cell> = canon?
        .into_iter()
        .map(|(x, y)| {
            let (x, y) = sym.invert(x as i64, y as i64, w, h);
            (x as u32, y as u32)
        })
        .collect();
    if reversed {
        path.reverse();
    }
    Some(path)
}

/// The lexicographically least image of the request under the grid's
/// symmetries and path reversal, with the map that produced it.
fn canonical(w: u32, h: u32, start: Cell, end: Cell) -> (Key, Symmetry, bool) {
    let mut best: Option<(Key, Symmetry, bool)> = None;
    for sym in Symmetry::all() {
        let (iw, ih) = sym.image_dims(w, h);
        let map = |c: Cell| {
            let (x, y) = sym.apply(c.0 as i64, c.1 as i64, w, h);
            (x as u32, y as u32)
        };
        let (s, e) = (map(start), map(end));
        for (key, rev) in [((iw, ih, s, e), false), ((iw, ih, e, s), true)] {
            if best.as_ref().is_none_or(|b| key < b.0) {
                best = Some((key, sym, rev));
            }
        }
    }
    best.unwrap()
}

fn search(w: u32, h: u32, start: Cell, end: Cell) -> Option<Vec<Cell>> {
    let n = (w * h) as usize;
    let id = |c: Cell| (c.1 * w + c.0) as usize;
    let (s, t) = (id(start), id(end));
    if n == 1 {
        return (s == t).then(|| vec![start]);
    }
    if s == t {
        return None;
    }
    let shade = |c: Cell| (c.0 + c.1) % 2;
    if n % 2 == 0 {
        if shade(start) == shade(end) {
            return None;
        }
    } else if shade(start) != 0 || shade(end) != 0 {
        return None;
    }
    let mut adj = vec![Vec::with_capacity(4); n];
    for y in 0..h {
        for x in 0..w {
            let v = id((x, y));
            if x > 0 {
                adj[v].push(v - 1);
            }
            if x + 1 < w {
                adj[v].push(v + 1);
            }
            if y > 0 {
                adj[v].push(v - w as usize);
            }
            if y + 1 < h {
                adj[v].push(v + w as usize);
            }
        }
    }
    let mut dfs = PathDfs { adj: &adj, n, end: t, visited: vec![false; n], path: vec![s], stack: Vec::new(), seen: vec![0; n], stamp: 0 };
    dfs.visited[s] = true;
    if !dfs.extend() {
        return None;
    }
    Some(dfs.path.iter().map(|&v| ((v as u32) % w, (v as u32) / w)).collect())
}

struct PathDfs<'a> {
    adj: &'a [Vec<usize>],
    n: usize,
    end: usize,
    visited: Vec<bool>,
    path: Vec<usize>,
    stack: Vec<usize>,
    seen: Vec<u32>,
    stamp: u32,
}

impl PathDfs<'_> {
    fn free(&self, v: usize, head: usize) -> usize {
        self.adj[v].iter().filter(|&&u| !self.visited[u] || u == head).count()
    }

    /// Unvisited cells are connected and none is a premature dead end.
    fn viable(&mut self, head: usize) -> bool {
        let left = self.n - self.path.len();
        self.stamp += 1;
        let stamp = self.stamp;
        self.stack.clear();
        self.stack.push(self.end);
        self.seen[self.end] = stamp;
        let mut reached = 0;
        let mut dead_ends = 0;
        while let Some(v) = self.stack.pop() {
            reached += 1;
            if v != self.end && self.free(v, head) < 2 {
                dead_ends += 1;
            }
            for &u in &self.adj[v] {
                if !self.visited[u] && self.seen[u] != stamp {
                    self.seen[u] = stamp;
                    self.stack.push(u);
                }
            }
        }
        reached == left && dead_ends == 0
    }

    fn extend(&mut self) -> bool {
        let head = *self.path.last().unwrap();
        if self.path.len() == self.n {
            return head == self.end;
        }
        if head == self.end {
            return false;
        }
        let mut cands: Vec<(usize, usize)> = Vec::with_capacity(4);
        for &u in &self.adj[head] {
            if self.visited[u] || (u == self.end && self.path.len() + 1 != self.n) {
                continue;
            }
            cands.push((self.free(u, head), u));
        }
        cands.sort_unstable();
        for (_, u) in cands {
            self.visited[u] = true;
            self.path.push(u);
            if (self.path.len() == self.n || self.viable(u)) && self.extend() {
                return true;
            }
            self.path.pop();
            self.visited[u] = false;
        }
        false
    }
}

/// Serializes every cached path (or its absence) as JSON keyed by
/// `"WxH:sx,sy:ex,ey"`.
pub fn export_grid_cache() -> Result<String> {
    let map: BTreeMap<String, Option<Vec<Cell>>> = cache()
        .lock()
        .unwrap()
        .iter()
        .map(|(&(w, h, s, e), p)| (format!("{w}x{h}:{},{}:{},{}", s.0, s.1, e.0, e.1), p.clone()))
        .collect();
    Ok(serde_json::to_string(&map)?)
}

/// Loads entries produced by [`export_grid_cache`]; each is checked before
/// it is trusted.
pub fn import_grid_cache(json: &str) -> Result<usize> {
    let map: BTreeMap<String, Option<Vec<Cell>>> = serde_json::from_str(json)?;
    let mut loaded = 0;
    let mut guard = cache().lock().unwrap();
    for (k, p) in map {
        let Some(key) = parse_key(&k) else { continue };
        let Some(path) = p else { continue };
        if is_ham_path(key.0, key.1, key.2, key.3, &path) {
            guard.insert(key, Some(path));
            loaded += 1;
        }
    }
    Ok(loaded)
}

fn parse_key(k: &str) -> Option<Key> {
    let mut parts = k.split(':');
    let (dims, s, e) = (parts.next()?, parts.next()?, parts.next()?);
    let (w, h) = dims.split_once('x')?;
    let cell = |c: &str| -> Option<Cell> {
        let (x, y) = c.split_once(',')?;
        Some((x.parse().ok()?, y.parse().ok()?))
    };
    Some((w.parse().ok()?, h.parse().ok()?, cell(s)?, cell(e)?))
}

/// Whether `path` is a Hamiltonian path of the grid from `start` to `end`.
pub fn is_ham_path(w: u32, h: u32, start: Cell, end: Cell, path: &[Cell]) -> bool {
    if path.len() != (w * h) as usize || path.first() != Some(&start) || path.last() != Some(&end) {
        return false;
    }
    let mut seen = vec![false; (w * h) as usize];
    for (i, &(x, y)) in path.iter().enumerate() {
        if x >= w || y >= h || std::mem::replace(&mut seen[(y * w + x) as usize], true) {
            return false;
        }
        if i > 0 {
            let (px, py) = path[i - 1];
            if px.abs_diff(x) + py.abs_diff(y) != 1 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Ends reachable by a Hamiltonian path from `start`, by plain
    /// enumeration of self-avoiding walks.
    fn brute_ends(w: u32, h: u32, start: Cell) -> Vec<Cell> {
        fn go(w: u32, h: u32, cur: Cell, seen: &mut Vec<bool>, left: usize, out: &mut Vec<Cell>) {
            if left == 0 {
                if !out.contains(&cur) {
                    out.push(cur);
                }
                return;
            }
            let (x, y) = cur;
            let steps = [(x.wrapping_sub(1), y), (x + 1, y), (x, y.wrapping_sub(1)), (x, y + 1)];
            for (nx, ny) in steps {
                if nx < w && ny < h && !seen[(ny * w + nx) as usize] {
                    seen[(ny * w + nx) as usize] = true;
                    go(w, h, (nx, ny), seen, left - 1, out);
                    seen[(ny * w + nx) as usize] = false;
                }
            }
        }
        let mut seen = vec![false; (w * h) as usize];
        seen[(start.1 * w + start.0) as usize] = true;
        let mut out = Vec::new();
        go(w, h, start, &mut seen, (w * h) as usize - 1, &mut out);
        out
    }

    #[test]
    fn agrees_with_enumeration_up_to_5x5() {
        for w in 1..=5 {
            for h in 1..=5 {
                for sx in 0..w {
                    for sy in 0..h {
                        let ends = brute_ends(w, h, (sx, sy));
                        for ex in 0..w {
                            for ey in 0..h {
                                let p = grid_ham_path_between(w, h, (sx, sy), (ex, ey));
                                assert_eq!(p.is_some(), ends.contains(&(ex, ey)), "{w}x{h} {sx},{sy} -> {ex},{ey}");
                                if let Some(p) = p {
                                    assert!(is_ham_path(w, h, (sx, sy), (ex, ey), &p));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shade_mismatch_on_odd_grid() {
        assert!(grid_ham_path_between(7, 7, (0, 0), (1, 0)).is_none());
        assert!(grid_ham_path_between(7, 7, (1, 1), (2, 2)).is_some());
    }

    #[test]
    fn cache_round_trip() {
        let p = grid_ham_path_between(6, 7, (1, 1), (2, 3)).unwrap();
        let json = export_grid_cache().unwrap();
        assert!(import_grid_cache(&json).unwrap() >= 1);
        assert_eq!(grid_ham_path_between(6, 7, (1, 1), (2, 3)).unwrap(), p);
    }
}
