//! The four-cover tourney: every 4x4 block of the board carries the four
//! interlocking diamond 4-cycles, giving a rail-free block structure
//! with n^2/4 cycles in total.

use crate::cover::CycleCover;
use crate::error::{Error, Result};

/// The four diamond 4-cycles of a 4x4 block, as (row, col) sequences.
pub(crate) const DIAMONDS: [[(usize, usize); 4]; 4] = [
    [(0, 0), (1, 2), (3, 3), (2, 1)],
    [(0, 1), (1, 3), (3, 2), (2, 0)],
    [(0, 2), (2, 3), (3, 1), (1, 0)],
    [(0, 3), (1, 1), (3, 0), (2, 2)],
];

/// Diamond cycles of one 4x4 block placed at `(row_off, col_off)` on an
/// `n` x `n` board.
pub(crate) fn diamond_block(n: usize, row_off: usize, col_off: usize) -> Vec<Vec<usize>> {
    DIAMONDS
        .iter()
        .map(|d| {
            d.iter()
                .map(|&(r, c)| (row_off + r) * n + col_off + c)
                .collect()
        })
        .collect()
}

/// Deterministic tourney of size n^2/4 tiling the board with diamond
/// 4-cycles. Requires n divisible by 4.
pub fn four_cover(n: usize) -> Result<CycleCover> {
    if n < 4 || n % 4 != 0 {
        return Err(Error::BadSize {
            n,
            reason: "four-cover needs n divisible by 4",
        });
    }
    let mut cycles = Vec::with_capacity(n * n / 4);
    for bi in 0..n / 4 {
        for bj in 0..n / 4 {
            cycles.extend(diamond_block(n, 4 * bi, 4 * bj));
        }
    }
    Ok(CycleCover::from_cycles(n, &cycles))
}
