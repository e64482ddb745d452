//! Deterministic block-tiled tourneys and the tours joined from them.
//!
//! The board side is split into parts from {6, 8, 10}; the grid of
//! blocks over that partition each carries a precomputed closed tour of
//! its own shape, giving a tourney with one cycle per block.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::backtrack::closed_tour_rect;
use super::cache;
use crate::cover::CycleCover;
use crate::error::{Error, Result};
use crate::rng::Rng;
use crate::surgery::{join_to_tour, DEFAULT_JOIN_ROUNDS};

/// Splits an even side length `n >= 6` into parts from {6, 8, 10}:
/// all 6s when `n % 6 == 0`, one 8 and 6s when `n % 6 == 2`, one 10 and
/// 6s when `n % 6 == 4`.
pub fn block_partition(n: usize) -> Result<Vec<usize>> {
    if n < 6 || n % 2 != 0 {
        return Err(Error::BadSize {
            n,
            reason: "tiled tourney needs even n >= 6",
        });
    }
    let mut parts = Vec::new();
    let mut rest = n;
    match n % 6 {
        0 => {}
        2 => {
            parts.push(8);
            rest -= 8;
        }
        _ => {
            parts.push(10);
            rest -= 10;
        }
    }
    parts.extend(std::iter::repeat(6).take(rest / 6));
    Ok(parts)
}

/// Closed tour of a `w` x `h` block as a cyclic sequence of local cells
/// (`row * w + col`). Derived once by backtracking, then cached in
/// memory and, when `TOURNEY_DATA_DIR` is set, on disk.
pub fn base_tour(w: usize, h: usize) -> Result<Vec<usize>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Vec<usize>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(tour) = cache.lock().unwrap().get(&(w, h)) {
        return Ok(tour.clone());
    }
    let header = format!("block {w} {h}");
    let cycles = cache::load_or_derive(&format!("block-{w}x{h}.txt"), &header, || {
        closed_tour_rect(w, h).map(|t| vec![t])
    })
    .filter(|cycles| cycles.len() == 1 && cycles[0].len() == w * h)
    .ok_or(Error::BadSize {
        n: w.max(h),
        reason: "no closed tour for this block shape",
    })?;
    let tour = cycles.into_iter().next().unwrap();
    cache.lock().unwrap().insert((w, h), tour.clone());
    Ok(tour)
}

/// Deterministic tourney tiling the board with closed block tours.
/// The size is the square of the partition length.
pub fn tiled_tourney(n: usize) -> Result<CycleCover> {
    let parts = block_partition(n)?;
    let mut offsets = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for &p in &parts {
        offsets.push(acc);
        acc += p;
    }
    let mut cycles = Vec::with_capacity(parts.len() * parts.len());
    for (bi, &h) in parts.iter().enumerate() {
        for (bj, &w) in parts.iter().enumerate() {
            let (row_off, col_off) = (offsets[bi], offsets[bj]);
            let tour = base_tour(w, h)?;
            cycles.push(
                tour.iter()
                    .map(|&c| (row_off + c / w) * n + col_off + c % w)
                    .collect(),
            );
        }
    }
    Ok(CycleCover::from_cycles(n, &cycles))
}

/// Closed tour built by joining the tiled tourney; deterministic given
/// the seed. Fails with `JoinIncomplete` if the join stalls, which has
/// not been observed for n >= 10.
pub fn dc_tour(n: usize, rng: &mut Rng) -> Result<CycleCover> {
    let mut g = tiled_tourney(n)?;
    let outcome = join_to_tour(&mut g, rng, DEFAULT_JOIN_ROUNDS)?;
    if !outcome.reached_tour {
        return Err(Error::JoinIncomplete {
            size: outcome.final_size,
        });
    }
    Ok(g)
}
