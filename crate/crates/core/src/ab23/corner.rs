//! The 6x6 corner of the width-6 rim and the permutation it induces.
//!
//! Block positions are numbered `6u + v + 1` for the square `(u, v)` of a
//! 2x6 block of the bottom band. The corner template fills the bottom-left
//! corner `[6]^2` with twelve disjoint paths, each running from a square
//! of the left band's last block (`y` in 6..8) to a square of the bottom
//! band's first block (`x` in 6..8).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const COLOURS: usize = 12;

/// A permutation of the twelve block positions, stored zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CornerPermutation(pub [u8; COLOURS]);

impl CornerPermutation {
    pub fn identity() -> Self {
        let mut f = [0u8; COLOURS];
        for (i, x) in f.iter_mut().enumerate() {
            *x = i as u8;
        }
        CornerPermutation(f)
    }

    /// Builds a permutation from one-based cycles.
    pub fn from_cycles(cycles: &[&[u8]]) -> Result<Self> {
        let mut f = Self::identity();
        let mut seen = [false; COLOURS];
        for cyc in cycles {
            for (k, &x) in cyc.iter().enumerate() {
                let y = cyc[(k + 1) % cyc.len()];
                if !(1..=COLOURS as u8).contains(&x) || seen[x as usize - 1] {
                    return Err(Error::Precondition(format!("bad cycle entry {x}")));
                }
                seen[x as usize - 1] = true;
                f.0[x as usize - 1] = y - 1;
            }
        }
        Ok(f)
    }

    /// The band swap `(1 4)(2 5)(3 6)(7 10)(8 11)(9 12)`.
    pub fn band_swap() -> Self {
        let mut f = [0u8; COLOURS];
        for (i, x) in f.iter_mut().enumerate() {
            let (u, v) = (i / 6, i % 6);
            *x = (6 * u + (v + 3) % 6) as u8;
        }
        CornerPermutation(f)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut f = [0u8; COLOURS];
        for (i, x) in f.iter_mut().enumerate() {
            *x = self.0[other.0[i] as usize];
        }
        CornerPermutation(f)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| self.compose(&acc))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = [false; COLOURS];
        self.0.iter().all(|&x| (x as usize) < COLOURS && !std::mem::replace(&mut seen[x as usize], true))
    }
}

impl fmt::Display for CornerPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; COLOURS];
        let mut any = false;
        for i in 0..COLOURS {
            if seen[i] || self.apply(i) == i {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut j = i;
            let mut first = true;
            while !seen[j] {
                seen[j] = true;
                write!(f, "{}{}", if first { "" } else { " " }, j + 1)?;
                first = false;
                j = self.apply(j);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "id")?;
        }
        Ok(())
    }
}

/// Whether the colours return to their block positions after one lap of
/// the rim of `[n]^2`: `f^4 = id` for `n = 2 mod 4`, `(s f)^4 = id` with
/// `s` the band swap otherwise.
pub fn corner_check(f: &CornerPermutation, n: u32) -> bool {
    if !f.is_permutation() {
        return false;
    }
    if n % 4 == 2 {
        f.pow(4).is_identity()
    } else {
        CornerPermutation::band_swap().compose(f).pow(4).is_identity()
    }
}

pub type Cell = (i64, i64);

/// Twelve corner paths, each listed from its left-band end to its
/// bottom-band end.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerTemplate {
    pub paths: Vec<Vec<Cell>>,
}

pub(crate) fn is_move(p: Cell, q: Cell) -> bool {
    let (dx, dy) = ((p.0 - q.0).abs(), (p.1 - q.1).abs());
    (dx, dy) == (2, 3) || (dx, dy) == (3, 2)
}

fn in_corner(c: Cell) -> bool {
    (0..6).contains(&c.0) && (0..6).contains(&c.1)
}

fn left_end(c: Cell) -> bool {
    (0..6).contains(&c.0) && (6..8).contains(&c.1)
}

fn bottom_end(c: Cell) -> bool {
    (6..8).contains(&c.0) && (0..6).contains(&c.1)
}

/// Block position of a bottom-band end.
fn bottom_position(c: Cell) -> usize {
    (6 * (c.0 - 6) + c.1) as usize
}

/// Block position, in the bottom band's frame, of a left-band end: the
/// left band is the bottom band turned a quarter clockwise.
fn left_position(c: Cell) -> usize {
    (6 * (7 - c.1) + c.0) as usize
}

impl CornerTemplate {
    /// Checks that the paths are legal, disjoint, cover the corner and
    /// pair every left end with a bottom end.
    pub fn validate(&self) -> Result<()> {
        if self.paths.len() != COLOURS {
            return Err(Error::Construction(format!("corner has {} paths", self.paths.len())));
        }
        let mut seen = std::collections::HashSet::new();
        for p in &self.paths {
            let (Some(&s), Some(&e)) = (p.first(), p.last()) else {
                return Err(Error::Construction("empty corner path".into()));
            };
            if !left_end(s) || !bottom_end(e) || p[1..p.len() - 1].iter().any(|&c| !in_corner(c)) {
                return Err(Error::Construction(format!("corner path {p:?} has misplaced squares")));
            }
            if p.windows(2).any(|w| !is_move(w[0], w[1])) {
                return Err(Error::Construction(format!("corner path {p:?} has an illegal step")));
            }
            for &c in p {
                if !seen.insert(c) {
                    return Err(Error::Construction(format!("corner square {c:?} used twice")));
                }
            }
        }
        if seen.len() != 36 + 2 * COLOURS {
            return Err(Error::Construction("corner paths leave squares uncovered".into()));
        }
        Ok(())
    }

    /// Position map across the corner: a colour at position `i` in the
    /// last block before the corner is at `f(i)` in the first block after.
    pub fn permutation(&self) -> CornerPermutation {
        let mut f = CornerPermutation::identity();
        for p in &self.paths {
            f.0[left_position(p[0])] = bottom_position(*p.last().unwrap()) as u8;
        }
        f
    }

    pub fn edges(&self) -> impl Iterator<Item = (Cell, Cell)> + '_ {
        self.paths.iter().flat_map(|p| p.windows(2).map(|w| (w[0], w[1])))
    }

    pub fn has_edge(&self, p: Cell, q: Cell) -> bool {
        self.edges().any(|(u, v)| (u, v) == (p, q) || (u, v) == (q, p))
    }

    /// JSON with one path per line.
    pub fn to_json(&self) -> Result<String> {
        let lines: Vec<String> =
            self.paths.iter().map(serde_json::to_string).collect::<std::result::Result<_, _>>()?;
        Ok(format!("{{\"paths\": [\n  {}\n]}}\n", lines.join(",\n  ")))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let t: CornerTemplate = serde_json::from_str(s)?;
        t.validate()?;
        Ok(t)
    }
}

/// The stored corner template.
pub fn stored_corner() -> Result<CornerTemplate> {
    CornerTemplate::from_json(&crate::cache::load(crate::cache::CORNER23, include_str!("../../data/corner23.json"))?)
}

struct CornerSearch<'a> {
    cells: Vec<Cell>,
    adj: Vec<Vec<usize>>,
    used: Vec<bool>,
    paths: Vec<Vec<usize>>,
    accept: &'a mut dyn FnMut(&CornerTemplate) -> bool,
    nodes: u64,
    limit: u64,
}

impl CornerSearch<'_> {
    fn is_left(&self, v: usize) -> bool {
        left_end(self.cells[v])
    }

    fn is_bottom(&self, v: usize) -> bool {
        bottom_end(self.cells[v])
    }

    /// Every unused corner square keeps two usable neighbours.
    fn viable(&self, tip: usize) -> bool {
        self.cells.iter().enumerate().all(|(v, &c)| {
            if self.used[v] || !in_corner(c) {
                return true;
            }
            let free = self.adj[v].iter().filter(|&&w| !self.used[w] || w == tip).count();
            free >= 2
        })
    }

    fn run(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.limit {
            return true;
        }
        let Some(path) = self.paths.last() else {
            return self.start_next();
        };
        let tip = *path.last().unwrap();
        if self.is_bottom(tip) {
            return self.start_next();
        }
        let next: Vec<usize> = self.adj[tip]
            .iter()
            .copied()
            .filter(|&w| !self.used[w] && !self.is_left(w))
            .collect();
        for w in next {
            self.used[w] = true;
            self.paths.last_mut().unwrap().push(w);
            if self.viable(w) && self.run() {
                return true;
            }
            self.paths.last_mut().unwrap().pop();
            self.used[w] = false;
        }
        false
    }

    fn start_next(&mut self) -> bool {
        let Some(s) = (0..self.cells.len()).find(|&v| !self.used[v] && self.is_left(v)) else {
            let t = CornerTemplate {
                paths: self.paths.iter().map(|p| p.iter().map(|&v| self.cells[v]).collect()).collect(),
            };
            return t.validate().is_ok() && (self.accept)(&t);
        };
        self.used[s] = true;
        self.paths.push(vec![s]);
        if self.viable(s) && self.run() {
            return true;
        }
        self.paths.pop();
        self.used[s] = false;
        false
    }
}

/// Enumerates corner templates containing the edge `{(0,3),(2,0)}` until
/// `accept` returns true or `limit` search nodes are spent.
pub fn search_corner(limit: u64, accept: &mut dyn FnMut(&CornerTemplate) -> bool) -> Option<u64> {
    let mut cells: Vec<Cell> = Vec::new();
    for x in 0..8 {
        for y in 0..8 {
            let c = (x, y);
            if in_corner(c) || left_end(c) || bottom_end(c) {
                cells.push(c);
            }
        }
    }
    let adj: Vec<Vec<usize>> = cells
        .iter()
        .map(|&p| {
            (0..cells.len())
                .filter(|&j| {
                    let q = cells[j];
                    let band_pair = (left_end(p) && left_end(q)) || (bottom_end(p) && bottom_end(q));
                    is_move(p, q) && !band_pair
                })
                .collect()
        })
        .collect();
    let mut found = false;
    let mut wrapped = |t: &CornerTemplate| {
        if t.has_edge((0, 3), (2, 0)) && accept(t) {
            found = true;
            true
        } else {
            false
        }
    };
    let mut s = CornerSearch {
        used: vec![false; cells.len()],
        cells,
        adj,
        paths: Vec::new(),
        accept: &mut wrapped,
        nodes: 0,
        limit,
    };
    s.start_next();
    let nodes = s.nodes;
    found.then_some(nodes)
}

/// Reruns the search for the stored template: the first corner, in search
/// order, whose permutation passes [`corner_check`] for both residues of
/// `n` modulo 4.
pub fn regenerate_corner() -> Result<CornerTemplate> {
    let mut hit = None;
    search_corner(u64::MAX, &mut |t| {
        let f = t.permutation();
        let ok = corner_check(&f, 2) && corner_check(&f, 0);
        if ok {
            hit = Some(t.clone());
        }
        ok
    });
    hit.ok_or_else(|| Error::Construction("no corner template passes the lap condition".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quoted() -> CornerPermutation {
        CornerPermutation::from_cycles(&[&[1, 4, 10, 7], &[2, 5, 11, 8], &[3, 9, 12, 6]]).unwrap()
    }

    #[test]
    fn check_examples() {
        assert!(corner_check(&quoted(), 22));
        assert!(corner_check(&quoted(), 24));
        assert!(corner_check(&CornerPermutation::identity(), 26));
        let five = CornerPermutation::from_cycles(&[&[1, 2, 3, 4, 5]]).unwrap();
        assert!(!corner_check(&five, 22));
        assert!(!corner_check(&CornerPermutation([0; COLOURS]), 22));
    }

    #[test]
    fn permutation_algebra() {
        let s = CornerPermutation::band_swap();
        assert_eq!(s.to_string(), "(1 4)(2 5)(3 6)(7 10)(8 11)(9 12)");
        assert!(s.pow(2).is_identity());
        assert_eq!(quoted().to_string(), "(1 4 10 7)(2 5 11 8)(3 9 12 6)");
        assert!(quoted().pow(4).is_identity() && !quoted().pow(2).is_identity());
    }

    #[test]
    fn stored_template() {
        let t = stored_corner().unwrap();
        assert!(t.has_edge((0, 3), (2, 0)));
        assert_eq!(t.permutation(), quoted());
        assert_eq!(regenerate_corner().unwrap(), t);
        let back = CornerTemplate::from_json(&t.to_json().unwrap()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn rejects_broken_templates() {
        let mut t = stored_corner().unwrap();
        t.paths[0].swap(1, 2);
        assert!(t.validate().is_err());
        let mut t = stored_corner().unwrap();
        t.paths.pop();
        assert!(t.validate().is_err());
    }
}
