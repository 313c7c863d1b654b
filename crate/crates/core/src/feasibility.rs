//! Necessary conditions for a leaper tour. A `Feasible` answer only means
//! that none of the known obstructions applies.

use std::fmt;

use serde::Serialize;

use crate::board::{BoardSpec, MoveSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Obstruction {
    /// Every move preserves coordinates modulo the common factor.
    CommonFactor { gcd: u32 },
    /// Both legs odd: the coordinate-sum parity is invariant, so the graph
    /// has two connected components.
    DisconnectedParity,
    /// The graph is bipartite by coordinate-sum parity and the board has
    /// an odd number of squares.
    UnequalBipartition,
    /// No axis pair is long enough for a single move.
    Edgeless,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::CommonFactor { gcd } => {
                write!(f, "legs share the factor {gcd}; moves preserve coordinates mod {gcd}")
            }
            Obstruction::DisconnectedParity => {
                write!(f, "both legs odd; the graph has two connected components (coordinate-sum parity)")
            }
            Obstruction::UnequalBipartition => {
                write!(f, "graph is bipartite with two partitions of different size (odd number of squares)")
            }
            Obstruction::Edgeless => write!(f, "board too small for a single move"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Feasibility {
    Feasible,
    Infeasible(Obstruction),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn feasibility_check(board: &BoardSpec, mv: MoveSpec) -> Feasibility {
    let (long, short) = (mv.long(), mv.short());
    let g = gcd(long as u64, short as u64) as u32;
    if g > 1 {
        return Feasibility::Infeasible(Obstruction::CommonFactor { gcd: g });
    }
    if (long + short) % 2 == 0 {
        return Feasibility::Infeasible(Obstruction::DisconnectedParity);
    }
    if board.volume() % 2 == 1 {
        return Feasibility::Infeasible(Obstruction::UnequalBipartition);
    }
    let dims = board.dims();
    let has_move = (0..dims.len())
        .any(|i| (0..dims.len()).any(|j| i != j && dims[i] > long && dims[j] > short));
    if !has_move {
        return Feasibility::Infeasible(Obstruction::Edgeless);
    }
    Feasibility::Feasible
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(dims: &[u32], a: u32, b: u32) -> Feasibility {
        feasibility_check(&BoardSpec::new(dims.to_vec()).unwrap(), MoveSpec::new(a, b).unwrap())
    }

    #[test]
    fn named_obstructions() {
        assert_eq!(check(&[15, 15], 2, 1), Feasibility::Infeasible(Obstruction::UnequalBipartition));
        assert_eq!(check(&[16, 16], 3, 1), Feasibility::Infeasible(Obstruction::DisconnectedParity));
        assert_eq!(check(&[20, 20], 2, 4), Feasibility::Infeasible(Obstruction::CommonFactor { gcd: 2 }));
        assert_eq!(check(&[4, 4], 5, 2), Feasibility::Infeasible(Obstruction::Edgeless));
        assert_eq!(check(&[14, 14], 2, 5), Feasibility::Feasible);
        assert_eq!(check(&[8, 8, 8], 2, 1), Feasibility::Feasible);
    }

    #[test]
    fn edgeless_matches_brute_force() {
        let mv = MoveSpec::new(3, 2).unwrap();
        for w in 1..8 {
            for h in (1..8).filter(|h| (w * h) % 2 == 0) {
                let board = BoardSpec::rect(w, h).unwrap();
                let geo = crate::board::Geometry::new(board.clone(), mv);
                let edgeless = (0..board.volume() as u32).all(|v| geo.neighbors(v).is_empty());
                let verdict = feasibility_check(&board, mv);
                assert_eq!(edgeless, verdict == Feasibility::Infeasible(Obstruction::Edgeless), "{w}x{h}");
            }
        }
    }
}
