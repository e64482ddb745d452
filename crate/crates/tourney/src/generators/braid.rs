//! Concentric braided tourneys.
//!
//! An n x n braided tourney consists of `n/4 - 1` concentric rings, each
//! two cells wide and carrying four interwoven cycles, around an
//! `m x m` center with `m = 4 + (n mod 4)`; the center carries four more
//! cycles (the diamond cover for m = 4, a derived cover for m = 6), so
//! the total size is exactly `4 * floor(n / 4)`.
//!
//! Each ring's four cycles come from one seed cycle that visits every
//! 90-degree-rotation orbit of the ring exactly once: its four rotated
//! copies are vertex-disjoint and tile the ring. The seed cycle is found
//! once per ring size by deterministic backtracking and cached.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::backtrack::k_cycle_two_factor;
use super::cache;
use super::four_cover::diamond_block;
use crate::board::Board;
use crate::cover::CycleCover;
use crate::error::{Error, Result};

/// Cells of the outermost two-wide ring of an `s` x `s` board.
fn ring_cells(s: usize) -> Vec<usize> {
    let b = Board::new(s);
    (0..b.cells())
        .filter(|&c| {
            let (row, col) = (b.row(c), b.col(c));
            row.min(col).min(s - 1 - row).min(s - 1 - col) < 2
        })
        .collect()
}

/// Quarter-turn rotation of a cell on an `s` x `s` board.
fn rotate90(s: usize, cell: usize) -> usize {
    let b = Board::new(s);
    let (row, col) = (b.row(cell), b.col(cell));
    b.cell_at(s - 1 - row, col)
}

/// Seed cycle for the ring of an `s` x `s` board: a cycle in the ring's
/// knight graph that visits each rotation orbit exactly once and closes
/// on itself. Returns the cell sequence.
fn ring_seed_cycle(s: usize) -> Option<Vec<usize>> {
    let b = Board::new(s);
    let cells = ring_cells(s);
    let mut in_ring = vec![false; b.cells()];
    for &c in &cells {
        in_ring[c] = true;
    }
    let mut adj = vec![Vec::new(); b.cells()];
    for &c in &cells {
        adj[c] = b.neighbors(c).filter(|&v| in_ring[v]).collect();
    }
    // Orbits have size exactly 4: even boards have no rotation-fixed cell.
    let mut orbit_of = vec![usize::MAX; b.cells()];
    let mut orbit_count = 0;
    for &c in &cells {
        if orbit_of[c] != usize::MAX {
            continue;
        }
        let mut x = c;
        for _ in 0..4 {
            orbit_of[x] = orbit_count;
            x = rotate90(s, x);
        }
        orbit_count += 1;
    }
    debug_assert_eq!(orbit_count * 4, cells.len());

    let start = cells[0];
    let mut visited = vec![false; orbit_count];
    visited[orbit_of[start]] = true;
    let mut path = vec![start];
    if extend_orbit_cycle(&adj, &orbit_of, &mut visited, &mut path, orbit_count, start) {
        Some(path)
    } else {
        None
    }
}

fn extend_orbit_cycle(
    adj: &[Vec<usize>],
    orbit_of: &[usize],
    visited: &mut Vec<bool>,
    path: &mut Vec<usize>,
    orbit_count: usize,
    start: usize,
) -> bool {
    let cur = *path.last().unwrap();
    if path.len() == orbit_count {
        return adj[cur].contains(&start);
    }
    // The closing cell must sit in a still-unvisited orbit next to the
    // start.
    if adj[start].iter().all(|&v| visited[orbit_of[v]]) {
        return false;
    }
    let mut cands: Vec<(usize, usize)> = adj[cur]
        .iter()
        .filter(|&&v| !visited[orbit_of[v]])
        .map(|&v| {
            let onward = adj[v].iter().filter(|&&w| !visited[orbit_of[w]]).count();
            (onward, v)
        })
        .collect();
    cands.sort_unstable();
    for (onward, v) in cands {
        if onward == 0 && path.len() + 1 != orbit_count {
            continue;
        }
        visited[orbit_of[v]] = true;
        path.push(v);
        if extend_orbit_cycle(adj, orbit_of, visited, path, orbit_count, start) {
            return true;
        }
        path.pop();
        visited[orbit_of[v]] = false;
    }
    false
}

/// The four braid cycles of the outermost ring of an `s` x `s` board,
/// as local cell sequences. Falls back to a direct 4-cycle 2-factor
/// search if the rotational construction fails for some size.
pub(crate) fn ring_cycles(s: usize) -> Result<Vec<Vec<usize>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<Vec<usize>>>>> = OnceLock::new();
    let cache_mem = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(cycles) = cache_mem.lock().unwrap().get(&s) {
        return Ok(cycles.clone());
    }
    let header = format!("ring {s}");
    let cycles = cache::load_or_derive(&format!("ring-{s}.txt"), &header, || {
        if let Some(seed) = ring_seed_cycle(s) {
            let mut cycles = Vec::with_capacity(4);
            let mut current = seed;
            for _ in 0..4 {
                cycles.push(current.clone());
                current = current.iter().map(|&c| rotate90(s, c)).collect();
            }
            Some(cycles)
        } else {
            k_cycle_two_factor(s, &ring_cells(s), 4)
        }
    })
    .filter(|cycles| cycles.len() == 4)
    .ok_or(Error::BadSize {
        n: s,
        reason: "no braided ring cover found",
    })?;
    cache_mem.lock().unwrap().insert(s, cycles.clone());
    Ok(cycles)
}

/// A four-cycle cover of the 6x6 board for braid centers, derived once
/// by exact search.
fn center6_cycles() -> Result<Vec<Vec<usize>>> {
    static CACHE: OnceLock<Option<Vec<Vec<usize>>>> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            cache::load_or_derive("center-6.txt", "center 6", || {
                k_cycle_two_factor(6, &(0..36).collect::<Vec<_>>(), 4)
            })
            .filter(|cycles| cycles.len() == 4)
        })
        .clone()
        .ok_or(Error::BadSize {
            n: 6,
            reason: "no 4-cycle cover of the 6x6 center found",
        })
}

/// Deterministic concentric braided tourney of size `4 * floor(n / 4)`
/// for even `n >= 4`.
pub fn braided_tourney(n: usize) -> Result<CycleCover> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::BadSize {
            n,
            reason: "braided tourney needs even n >= 4",
        });
    }
    let shift = |cells: &[usize], sub: usize, off: usize| -> Vec<usize> {
        let b = Board::new(sub);
        cells
            .iter()
            .map(|&c| (b.row(c) + off) * n + b.col(c) + off)
            .collect()
    };

    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let rings = n / 4 - 1;
    for i in 0..rings {
        let sub = n - 4 * i;
        for cycle in ring_cycles(sub)? {
            cycles.push(shift(&cycle, sub, 2 * i));
        }
    }
    let m = 4 + n % 4;
    let off = (n - m) / 2;
    if m == 4 {
        cycles.extend(diamond_block(n, off, off));
    } else {
        for cycle in center6_cycles()? {
            cycles.push(shift(&cycle, 6, off));
        }
    }
    Ok(CycleCover::from_cycles(n, &cycles))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_follow_the_formula() {
        for n in [8, 10, 12, 14, 16, 20] {
            let g = braided_tourney(n).unwrap();
            assert_eq!(g.validate(false).unwrap(), 4 * (n / 4), "n={n}");
        }
    }

    #[test]
    fn smallest_boards() {
        // n = 4 is the bare diamond cover, n = 6 the bare center.
        assert_eq!(braided_tourney(4).unwrap().validate(false).unwrap(), 4);
        assert_eq!(braided_tourney(6).unwrap().validate(false).unwrap(), 4);
        assert!(braided_tourney(7).is_err());
        assert!(braided_tourney(2).is_err());
    }

    #[test]
    fn cycles_are_confined_to_their_ring() {
        let n = 16;
        let g = braided_tourney(n).unwrap();
        let b = g.board();
        for cycle in g.cycles().unwrap() {
            let ring = |c: usize| {
                let (row, col) = (b.row(c), b.col(c));
                row.min(col).min(n - 1 - row).min(n - 1 - col) / 2
            };
            let first = ring(cycle[0]);
            assert!(cycle.iter().all(|&c| ring(c) == first));
        }
    }

    #[test]
    fn ring_cycles_partition_the_ring() {
        for s in [8, 10, 12, 14] {
            let cycles = ring_cycles(s).unwrap();
            assert_eq!(cycles.len(), 4);
            let mut cells: Vec<usize> = cycles.iter().flatten().copied().collect();
            cells.sort_unstable();
            let mut expect = ring_cells(s);
            expect.sort_unstable();
            assert_eq!(cells, expect, "s={s}");
        }
    }
}
