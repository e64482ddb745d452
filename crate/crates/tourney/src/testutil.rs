//! Shared fixtures and independent oracles for unit tests.

use crate::cover::CycleCover;
use crate::rail::Rail;

/// The four diamond 4-cycles of a 4x4 board.
pub(crate) fn diamond_cover_4() -> CycleCover {
    CycleCover::from_cycles(
        4,
        &[
            vec![0, 6, 15, 9],
            vec![4, 2, 11, 13],
            vec![8, 1, 7, 14],
            vec![12, 10, 3, 5],
        ],
    )
}

/// Brute-force rail enumeration over all edge pairs, independent of the
/// linear-scan implementation. For every ordered pair of distinct edges
/// and endpoint correspondence, accept when both cross displacements are
/// the same knight move and neither cross edge is present.
pub(crate) fn brute_force_rails(g: &CycleCover) -> std::collections::BTreeSet<Rail> {
    let board = g.board();
    let edges: Vec<(usize, usize)> = g.edge_set();
    let mut found = std::collections::BTreeSet::new();
    for &(a0, a1) in &edges {
        for &(b0, b1) in &edges {
            if (a0, a1) == (b0, b1) {
                continue;
            }
            for (c0, c1) in [(b0, b1), (b1, b0)] {
                let (Some(m0), Some(m1)) = (board.km(a0, c0), board.km(a1, c1)) else {
                    continue;
                };
                if m0 != m1 || g.has_edge(a0, c0) || g.has_edge(a1, c1) {
                    continue;
                }
                // Canonical triple from the topmost (minimum) cell.
                let cells = [a0, a1, c0, c1];
                let top = *cells.iter().min().unwrap();
                let (along, across) = match cells.iter().position(|&c| c == top).unwrap() {
                    0 => (a1, c0),
                    1 => (a0, c1),
                    2 => (c1, a0),
                    _ => (c0, a1),
                };
                let primary = board.km(top, along).unwrap();
                let cross = board.km(top, across).unwrap();
                found.insert(Rail::new(top, primary, cross).unwrap());
            }
        }
    }
    found
}
