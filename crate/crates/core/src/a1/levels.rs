//! Blocks and levels of the `[6a+2]^2` board.
//!
//! The board is cut into `a x a` blocks `B(bx, by)`, `bx, by` in `0..7`;
//! the last row and column of blocks are only two squares wide. A level
//! `L(i, j)` is one component of the `(a, 1)` leaper restricted to the
//! translates of a 2x2 unit. Inside a block, the level of offset `(ox, oy)`
//! is `(ox ^ (by & 1), oy ^ (bx & 1))`, so every level meets every block in
//! one square and moves within a level are unit steps between blocks.

use serde::Serialize;

/// Number of blocks along each side.
pub const BLOCKS: u32 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LevelId {
    pub i: u32,
    pub j: u32,
}

impl LevelId {
    pub fn new(i: u32, j: u32) -> Self {
        LevelId { i, j }
    }

    pub fn position(&self) -> Position {
        match (self.i % 2, self.j % 2) {
            (0, 0) => Position::A,
            (1, 0) => Position::B,
            (1, 1) => Position::C,
            _ => Position::D,
        }
    }

    /// Levels meeting the two-wide blocks in both directions.
    pub fn is_odd(&self) -> bool {
        self.i < 2 && self.j < 2
    }
}

impl std::fmt::Display for LevelId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "L{},{}", self.i, self.j)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Position {
    A,
    B,
    C,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Shade {
    Gray,
    White,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BlockId {
    pub x: u32,
    pub y: u32,
}

impl BlockId {
    pub fn new(x: u32, y: u32) -> Self {
        BlockId { x, y }
    }

    pub fn shade(&self) -> Shade {
        if (self.x + self.y) % 2 == 0 {
            Shade::Gray
        } else {
            Shade::White
        }
    }

    /// The central 2x2 blocks.
    pub fn in_t(&self) -> bool {
        (2..=3).contains(&self.x) && (2..=3).contains(&self.y)
    }

    /// The ring of blocks around the centre.
    pub fn in_t1(&self) -> bool {
        (1..=4).contains(&self.x) && (1..=4).contains(&self.y) && !self.in_t()
    }

    pub fn is_incomplete(&self) -> bool {
        self.x == BLOCKS - 1 || self.y == BLOCKS - 1
    }
}

/// The block/level coordinatisation of `[6a+2]^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelPartition {
    a: u32,
}

pub fn level_partition(a: u32) -> crate::Result<LevelPartition> {
    if a < 2 || a % 2 == 1 {
        return Err(crate::Error::Precondition(format!("a = {a} must be even and positive")));
    }
    Ok(LevelPartition { a })
}

impl LevelPartition {
    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn side(&self) -> u32 {
        6 * self.a + 2
    }

    pub fn locate(&self, x: u32, y: u32) -> (BlockId, LevelId) {
        let a = self.a;
        let (bx, by) = (x / a, y / a);
        let (ox, oy) = (x % a, y % a);
        (BlockId::new(bx, by), LevelId::new(ox ^ (by & 1), oy ^ (bx & 1)))
    }

    /// The square of `level` in `block`, if the block has one.
    pub fn vertex(&self, level: LevelId, block: BlockId) -> Option<(u32, u32)> {
        let a = self.a;
        let x = block.x * a + (level.i ^ (block.y & 1));
        let y = block.y * a + (level.j ^ (block.x & 1));
        (block.x < BLOCKS && block.y < BLOCKS && x < self.side() && y < self.side()).then_some((x, y))
    }

    /// Width and height of the level's block grid.
    pub fn grid_dims(&self, level: LevelId) -> (u32, u32) {
        let w = if level.i < 2 { BLOCKS } else { BLOCKS - 1 };
        let h = if level.j < 2 { BLOCKS } else { BLOCKS - 1 };
        (w, h)
    }

    pub fn levels(&self) -> impl Iterator<Item = LevelId> + '_ {
        (0..self.a).flat_map(move |i| (0..self.a).map(move |j| LevelId::new(i, j)))
    }

    /// Number of squares in each level, counted by scanning the board.
    pub fn level_sizes(&self) -> std::collections::BTreeMap<LevelId, usize> {
        let mut sizes = std::collections::BTreeMap::new();
        for x in 0..self.side() {
            for y in 0..self.side() {
                *sizes.entry(self.locate(x, y).1).or_insert(0) += 1;
            }
        }
        sizes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn locate_and_vertex_are_inverse() {
        for a in [2, 4, 6] {
            let p = level_partition(a).unwrap();
            for x in 0..p.side() {
                for y in 0..p.side() {
                    let (b, l) = p.locate(x, y);
                    assert_eq!(p.vertex(l, b), Some((x, y)));
                }
            }
        }
    }

    #[test]
    fn level_contains_its_name() {
        let p = level_partition(6).unwrap();
        for l in p.levels() {
            assert_eq!(p.locate(l.i, l.j), (BlockId::new(0, 0), l));
        }
    }

    #[test]
    fn level_sizes_match_grid_dims() {
        let p = level_partition(4).unwrap();
        let sizes = p.level_sizes();
        for (l, &s) in &sizes {
            let (w, h) = p.grid_dims(*l);
            assert_eq!(s, (w * h) as usize, "{l}");
        }
        assert_eq!(sizes.values().sum::<usize>(), 26 * 26);
    }

    #[test]
    fn regions() {
        assert!(BlockId::new(3, 3).in_t());
        assert!(BlockId::new(1, 4).in_t1());
        assert!(!BlockId::new(0, 2).in_t1());
        assert_eq!(BlockId::new(3, 3).shade(), Shade::Gray);
    }
}
