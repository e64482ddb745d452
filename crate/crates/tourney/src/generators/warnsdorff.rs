//! Warnsdorff random walks, in closed-tour and tourney modes.
//!
//! Each step moves to an unvisited neighbor chosen uniformly among those
//! with the fewest onward unvisited moves. Tour mode restarts from
//! scratch until a walk covers the board and ends a knight's move from
//! its start. Tourney mode runs successive walks over the remaining
//! cells, closing each walk as soon as it lands a knight's move from its
//! own start (with at least 4 cells), and restarts the whole generation
//! if a walk strands before it can close. Closing eagerly is what makes
//! tourney mode orders of magnitude faster than tour mode: a walk left
//! to run dead-ends only after sweeping the entire board.

use arrayvec::ArrayVec;

use crate::board::Board;
use crate::cover::CycleCover;
use crate::error::{Error, Result};
use crate::rng::Rng;

fn check_size(n: usize) -> Result<()> {
    if n < 6 || n % 2 != 0 {
        return Err(Error::BadSize {
            n,
            reason: "closed walks need even n >= 6",
        });
    }
    Ok(())
}

fn adjacency(board: Board) -> Vec<ArrayVec<usize, 8>> {
    (0..board.cells())
        .map(|v| board.neighbors(v).collect())
        .collect()
}

/// One Warnsdorff step: the unvisited neighbor of `cur` with the fewest
/// onward unvisited moves, ties broken uniformly.
fn step(
    adj: &[ArrayVec<usize, 8>],
    visited: &[bool],
    rng: &mut Rng,
    cur: usize,
) -> Option<usize> {
    let mut best: ArrayVec<usize, 8> = ArrayVec::new();
    let mut best_onward = usize::MAX;
    for &v in &adj[cur] {
        if visited[v] {
            continue;
        }
        let onward = adj[v].iter().filter(|&&w| !visited[w]).count();
        if onward < best_onward {
            best_onward = onward;
            best.clear();
            best.push(v);
        } else if onward == best_onward {
            best.push(v);
        }
    }
    if best.is_empty() {
        None
    } else {
        Some(best[rng.range(best.len())])
    }
}

/// Pseudo-random closed knight's tour. The walk runs until it dead-ends;
/// it succeeds when it has covered the board and ends a knight's move
/// from its start. Restarts count against `attempt_cap`.
pub fn warnsdorff_tour(n: usize, rng: &mut Rng, attempt_cap: usize) -> Result<CycleCover> {
    check_size(n)?;
    let board = Board::new(n);
    let adj = adjacency(board);
    let cells = board.cells();
    for _ in 0..attempt_cap.max(1) {
        let mut visited = vec![false; cells];
        let mut path = Vec::with_capacity(cells);
        let start = rng.range(cells);
        visited[start] = true;
        path.push(start);
        let mut cur = start;
        while let Some(next) = step(&adj, &visited, rng, cur) {
            visited[next] = true;
            path.push(next);
            cur = next;
        }
        if path.len() == cells && board.km(cur, start).is_some() {
            return Ok(CycleCover::from_cycles(n, &[path]));
        }
    }
    Err(Error::AttemptsExhausted {
        attempts: attempt_cap.max(1),
    })
}

/// Pseudo-random tourney from successive Warnsdorff walks with eager
/// closing. Each walk closes the moment it stands a knight's move from
/// its own start with at least 4 cells; a walk that strands first forces
/// a full restart, counted against `attempt_cap`.
pub fn warnsdorff_tourney(n: usize, rng: &mut Rng, attempt_cap: usize) -> Result<CycleCover> {
    check_size(n)?;
    let board = Board::new(n);
    let adj = adjacency(board);
    let cells = board.cells();
    'attempts: for _ in 0..attempt_cap.max(1) {
        let mut visited = vec![false; cells];
        let mut remaining = cells;
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        while remaining > 0 {
            let start = {
                let mut k = rng.range(remaining);
                let mut cell = 0;
                loop {
                    if !visited[cell] {
                        if k == 0 {
                            break cell;
                        }
                        k -= 1;
                    }
                    cell += 1;
                }
            };
            let mut path = vec![start];
            visited[start] = true;
            let mut cur = start;
            loop {
                if path.len() >= 4 && board.km(cur, start).is_some() {
                    break;
                }
                match step(&adj, &visited, rng, cur) {
                    Some(next) => {
                        visited[next] = true;
                        path.push(next);
                        cur = next;
                    }
                    None => continue 'attempts,
                }
            }
            debug_assert_eq!(path.len() % 2, 0);
            remaining -= path.len();
            cycles.push(path);
        }
        return Ok(CycleCover::from_cycles(n, &cycles));
    }
    Err(Error::AttemptsExhausted {
        attempts: attempt_cap.max(1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tour_mode_yields_closed_tours() {
        for seed in 0..4 {
            let g = warnsdorff_tour(8, &mut Rng::new(seed), 10_000).unwrap();
            assert_eq!(g.validate(true).unwrap(), 1);
        }
    }

    #[test]
    fn tourney_mode_yields_valid_covers() {
        for seed in 0..4 {
            let g = warnsdorff_tourney(12, &mut Rng::new(seed), 10_000).unwrap();
            assert!(g.validate(false).unwrap() >= 1);
        }
    }

    #[test]
    fn smallest_supported_board() {
        let g = warnsdorff_tourney(6, &mut Rng::new(3), 100_000).unwrap();
        assert!(g.validate(false).unwrap() >= 1);
    }

    #[test]
    fn odd_boards_are_rejected() {
        assert!(matches!(
            warnsdorff_tour(5, &mut Rng::new(0), 10),
            Err(Error::BadSize { .. })
        ));
        assert!(matches!(
            warnsdorff_tourney(7, &mut Rng::new(0), 10),
            Err(Error::BadSize { .. })
        ));
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let a = warnsdorff_tour(10, &mut Rng::new(11), 10_000).unwrap();
        let b = warnsdorff_tour(10, &mut Rng::new(11), 10_000).unwrap();
        assert_eq!(a.edge_set(), b.edge_set());
    }
}
