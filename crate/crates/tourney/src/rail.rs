//! Rails and rail switching.
//!
//! A rail is a pair of parallel knight-move edges whose two connecting
//! cross edges are absent from the graph. It is completely specified by
//! its topmost cell, its primary move, and its cross move, both of which
//! are downward moves (4-7). Switching a rail exchanges the parallel
//! pair for the cross pair, preserving every cell's degree.

use crate::board::{Board, Move};
use crate::cover::CycleCover;
use crate::error::{Error, Result};

/// Canonical rail identity: `(top, primary, cross)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rail {
    top: usize,
    primary: Move,
    cross: Move,
}

impl Rail {
    /// Builds a rail triple, rejecting non-downward or equal moves.
    /// Geometric fit on a concrete board is checked by [`rail_cells`].
    pub fn new(top: usize, primary: Move, cross: Move) -> Result<Rail> {
        if !primary.is_downward() || !cross.is_downward() || primary == cross {
            return Err(Error::InvalidRail {
                primary: primary.index() as u8,
                cross: cross.index() as u8,
            });
        }
        Ok(Rail {
            top,
            primary,
            cross,
        })
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn primary(&self) -> Move {
        self.primary
    }

    pub fn cross(&self) -> Move {
        self.cross
    }

    /// The rail occupying the same four cells after a switch: primary
    /// and cross moves exchanged.
    pub fn mirrored(&self) -> Rail {
        Rail {
            top: self.top,
            primary: self.cross,
            cross: self.primary,
        }
    }
}

/// The four cells `(v0, v1, v2, v3)` of a rail: `v1 = dest(v0, primary)`,
/// `v2 = dest(v0, cross)`, `v3 = dest(v1, cross)`. The parallel edges are
/// `(v0, v1)` and `(v2, v3)`; the cross edges are `(v0, v2)` and
/// `(v1, v3)`.
pub fn rail_cells(board: Board, rail: Rail) -> Result<[usize; 4]> {
    let off_board = || Error::OffBoard {
        top: rail.top,
        primary: rail.primary.index() as u8,
        cross: rail.cross.index() as u8,
    };
    let v0 = rail.top;
    if v0 >= board.cells() {
        return Err(off_board());
    }
    let v1 = board.dest(v0, rail.primary).ok_or_else(off_board)?;
    let v2 = board.dest(v0, rail.cross).ok_or_else(off_board)?;
    let v3 = board.dest(v1, rail.cross).ok_or_else(off_board)?;
    Ok([v0, v1, v2, v3])
}

/// True when both parallel edges are present and both cross edges are
/// absent. A rail that does not fit on the board is simply not present.
pub fn is_rail_present(g: &CycleCover, rail: Rail) -> bool {
    let Ok([v0, v1, v2, v3]) = rail_cells(g.board(), rail) else {
        return false;
    };
    g.has_edge(v0, v1) && g.has_edge(v2, v3) && !g.has_edge(v0, v2) && !g.has_edge(v1, v3)
}

/// All rails present in `g`, each reported once from its topmost cell,
/// in lexicographic `(top, primary, cross)` order. Runs in O(n^2): a
/// constant amount of work per cell.
pub fn find_rails(g: &CycleCover) -> Vec<Rail> {
    let board = g.board();
    let mut rails = Vec::new();
    for top in 0..board.cells() {
        for primary in Move::DOWNWARD {
            let Some(v1) = board.dest(top, primary) else {
                continue;
            };
            if !g.has_edge(top, v1) {
                continue;
            }
            for cross in Move::DOWNWARD {
                if cross == primary {
                    continue;
                }
                let (Some(v2), Some(v3)) = (board.dest(top, cross), board.dest(v1, cross)) else {
                    continue;
                };
                if g.has_edge(v2, v3) && !g.has_edge(top, v2) && !g.has_edge(v1, v3) {
                    rails.push(Rail {
                        top,
                        primary,
                        cross,
                    });
                }
            }
        }
    }
    rails
}

/// The rails whose parallel-edge pair contains `edge`. At most 6 by the
/// rail-count bound: each downward move appears as the primary move of
/// three rail shapes, on either side.
pub fn rails_containing_edge(board: Board, rails: &[Rail], edge: (usize, usize)) -> Vec<Rail> {
    let e = (edge.0.min(edge.1), edge.0.max(edge.1));
    rails
        .iter()
        .copied()
        .filter(|&r| {
            rail_cells(board, r).is_ok_and(|[v0, v1, v2, v3]| (v0, v1) == e || (v2, v3) == e)
        })
        .collect()
}

/// Replaces the rail's parallel edges with its cross edges. Degrees are
/// unchanged; switching the mirrored rail afterwards restores `g`.
pub fn switch_rail(g: &mut CycleCover, rail: Rail) -> Result<()> {
    if !is_rail_present(g, rail) {
        return Err(Error::RailNotPresent(rail));
    }
    let [v0, v1, v2, v3] = rail_cells(g.board(), rail)?;
    g.remove_edge(v0, v1);
    g.remove_edge(v2, v3);
    g.add_edge(v0, v2);
    g.add_edge(v1, v3);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{brute_force_rails, diamond_cover_4};

    fn mv(i: u8) -> Move {
        Move::new(i)
    }

    fn single_rail_graph() -> CycleCover {
        let mut g = CycleCover::empty(8);
        g.add_edge(0, 17);
        g.add_edge(10, 27);
        g
    }

    #[test]
    fn rail_cells_examples() {
        let b = Board::new(8);
        let r = Rail::new(0, mv(6), mv(7)).unwrap();
        assert_eq!(rail_cells(b, r).unwrap(), [0, 17, 10, 27]);
        let off = Rail::new(0, mv(6), mv(5)).unwrap();
        assert!(matches!(rail_cells(b, off), Err(Error::OffBoard { .. })));
        assert!(matches!(
            Rail::new(0, mv(6), mv(6)),
            Err(Error::InvalidRail { .. })
        ));
        assert!(matches!(
            Rail::new(0, mv(2), mv(7)),
            Err(Error::InvalidRail { .. })
        ));
    }

    #[test]
    fn rail_presence() {
        let g = single_rail_graph();
        let r = Rail::new(0, mv(6), mv(7)).unwrap();
        assert!(is_rail_present(&g, r));

        let mut with_cross = g.clone();
        with_cross.add_edge(0, 10);
        assert!(!is_rail_present(&with_cross, r));

        let mut missing = g.clone();
        missing.remove_edge(10, 27);
        assert!(!is_rail_present(&missing, r));
    }

    #[test]
    fn find_rails_single() {
        let g = single_rail_graph();
        assert_eq!(find_rails(&g), vec![Rail::new(0, mv(6), mv(7)).unwrap()]);
    }

    #[test]
    fn diamond_cover_has_no_rails() {
        assert!(find_rails(&diamond_cover_4()).is_empty());
    }

    #[test]
    fn find_rails_matches_brute_force_on_diamonds_and_toys() {
        for g in [diamond_cover_4(), single_rail_graph(), CycleCover::empty(6)] {
            let fast: std::collections::BTreeSet<Rail> = find_rails(&g).into_iter().collect();
            assert_eq!(fast, brute_force_rails(&g));
        }
    }

    #[test]
    fn rails_containing_edge_single() {
        let g = single_rail_graph();
        let rails = find_rails(&g);
        let b = g.board();
        assert_eq!(rails_containing_edge(b, &rails, (17, 0)).len(), 1);
        assert_eq!(rails_containing_edge(b, &rails, (0, 10)).len(), 0);
    }

    #[test]
    fn switch_and_mirror_restore() {
        let mut g = single_rail_graph();
        let before = g.edge_set();
        let r = Rail::new(0, mv(6), mv(7)).unwrap();
        switch_rail(&mut g, r).unwrap();
        assert!(g.has_edge(0, 10) && g.has_edge(17, 27));
        assert!(!g.has_edge(0, 17) && !g.has_edge(10, 27));
        assert!(is_rail_present(&g, r.mirrored()));
        switch_rail(&mut g, r.mirrored()).unwrap();
        assert_eq!(g.edge_set(), before);
    }

    #[test]
    fn switch_requires_presence() {
        let mut g = single_rail_graph();
        let r = Rail::new(0, mv(6), mv(5)).unwrap();
        assert!(matches!(
            switch_rail(&mut g, r),
            Err(Error::RailNotPresent(_))
        ));
    }
}
