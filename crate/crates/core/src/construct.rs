//! One entry point over all constructions, chosen by the move.

use crate::a1::a1_tour_unchecked;
use crate::ab23::tour_23;
use crate::ab25::{assemble_rect, tour_25};
use crate::board::{BoardSpec, MoveSpec};
use crate::error::{Error, Result};
use crate::feasibility::{feasibility_check, Feasibility};
use crate::multidim::{extend_a1_tour_to_d, extend_ab_to_d};
use crate::tour::{verify_tour, Tour};

/// A verified tour of `board` for the leaper `mv`.
///
/// Infeasible boards yield [`Error::Infeasible`]; boards that may have a
/// tour but are outside every construction yield [`Error::Unsupported`].
pub fn construct(board: &BoardSpec, mv: MoveSpec) -> Result<Tour> {
    if let Feasibility::Infeasible(ob) = feasibility_check(board, mv) {
        return Err(Error::Infeasible(ob));
    }
    let dims = board.dims();
    let d = dims.len();
    let t = match (mv.long(), mv.short()) {
        (5, 2) if d == 2 && !board.is_cube() => assemble_rect(dims[0], dims[1])?,
        _ if !board.is_cube() => {
            return Err(Error::Unsupported(format!("({mv}) leaper on the non-square board {board}")))
        }
        (a, 1) => {
            let base = a1_tour_unchecked(a, dims[0])?;
            if d == 2 { base } else { extend_a1_tour_to_d(&base, d)? }
        }
        (3, 2) | (5, 2) => {
            let base = if mv.long() == 3 { tour_23(dims[0])? } else { tour_25(dims[0])? };
            if d == 2 { base } else { extend_ab_to_d(&base, d)? }
        }
        _ => return Err(Error::Unsupported(format!("no construction for the ({mv}) leaper"))),
    };
    let report = verify_tour(&t);
    if !report.is_valid_tour() {
        return Err(Error::Construction(report.summary()));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feasibility::Obstruction;

    fn run(dims: &str, mv: (u32, u32)) -> Result<Tour> {
        construct(&BoardSpec::parse(dims).unwrap(), MoveSpec::new(mv.0, mv.1).unwrap())
    }

    #[test]
    fn dispatch() {
        assert_eq!(run("28x28", (2, 1)).unwrap().len(), 784);
        assert_eq!(run("14x14", (1, 2)).unwrap().len(), 196);
        assert_eq!(run("10x10", (3, 2)).unwrap().len(), 100);
        assert_eq!(run("28x28x28", (2, 1)).unwrap().len(), 21952);
        assert_eq!(run("174x174", (2, 5)).unwrap().len(), 30276);
        assert_eq!(run("174x20", (2, 5)).unwrap().len(), 3480);
    }

    #[test]
    fn refusals() {
        assert!(matches!(run("15x15", (2, 1)), Err(Error::Infeasible(Obstruction::UnequalBipartition))));
        assert!(matches!(run("16x16", (3, 1)), Err(Error::Infeasible(Obstruction::DisconnectedParity))));
        assert!(matches!(run("20x20", (2, 4)), Err(Error::Infeasible(Obstruction::CommonFactor { gcd: 2 }))));
        assert!(matches!(run("20x20", (4, 3)), Err(Error::Unsupported(_))));
        assert!(matches!(run("28x30", (2, 1)), Err(Error::Unsupported(_))));
        assert!(matches!(run("12x12", (2, 1)), Err(Error::Unsupported(_))));
    }
}
