//! Exact searches used by the deterministic generators: closed tours on
//! small rectangular blocks, and k-cycle 2-factors of cell subsets.
//! All searches are deterministic (fixed candidate ordering), so the
//! first solution found is stable across runs and platforms.

use crate::board::Board;

/// Knight adjacency on a `w` x `h` rectangle, cells indexed `row * w + col`.
fn rect_adjacency(w: usize, h: usize) -> Vec<Vec<usize>> {
    const DELTAS: [(i64, i64); 8] = [
        (2, -1),
        (1, -2),
        (-1, -2),
        (-2, -1),
        (-2, 1),
        (-1, 2),
        (1, 2),
        (2, 1),
    ];
    let mut adj = vec![Vec::new(); w * h];
    for row in 0..h {
        for col in 0..w {
            for (dc, dr) in DELTAS {
                let c = col as i64 + dc;
                let r = row as i64 + dr;
                if c >= 0 && c < w as i64 && r >= 0 && r < h as i64 {
                    adj[row * w + col].push((r as usize) * w + c as usize);
                }
            }
        }
    }
    adj
}

/// Closed knight's tour of a `w` x `h` rectangle as a cyclic cell
/// sequence starting at cell 0, found by depth-first search with
/// Warnsdorff ordering (fewest onward moves first).
pub(crate) fn closed_tour_rect(w: usize, h: usize) -> Option<Vec<usize>> {
    let cells = w * h;
    if cells % 2 != 0 {
        return None;
    }
    let adj = rect_adjacency(w, h);
    let mut visited = vec![false; cells];
    let mut path = Vec::with_capacity(cells);
    visited[0] = true;
    path.push(0);
    if extend_tour(&adj, &mut visited, &mut path, cells) {
        Some(path)
    } else {
        None
    }
}

fn extend_tour(
    adj: &[Vec<usize>],
    visited: &mut Vec<bool>,
    path: &mut Vec<usize>,
    cells: usize,
) -> bool {
    let cur = *path.last().unwrap();
    if path.len() == cells {
        return adj[cur].contains(&0);
    }
    // The tour must end on an unvisited neighbor of the start; if none
    // remains the branch is dead.
    if adj[0].iter().all(|&v| visited[v]) {
        return false;
    }
    let mut cands: Vec<(usize, usize)> = adj[cur]
        .iter()
        .filter(|&&v| !visited[v])
        .map(|&v| {
            let onward = adj[v].iter().filter(|&&w| !visited[w]).count();
            (onward, v)
        })
        .collect();
    cands.sort_unstable();
    for (onward, v) in cands {
        // A candidate with no onward moves can only be the final cell.
        if onward == 0 && path.len() + 1 != cells {
            continue;
        }
        visited[v] = true;
        path.push(v);
        if extend_tour(adj, visited, path, cells) {
            return true;
        }
        path.pop();
        visited[v] = false;
    }
    false
}

/// A 2-factor of the subgraph induced on `cells` (subset of an `s` x `s`
/// board) with exactly `k` cycles, built cycle by cycle. Each cycle is
/// returned as a cell sequence. Deterministic first-found search.
pub(crate) fn k_cycle_two_factor(s: usize, cells: &[usize], k: usize) -> Option<Vec<Vec<usize>>> {
    let board = Board::new(s);
    let mut member = vec![false; board.cells()];
    for &c in cells {
        member[c] = true;
    }
    let mut adj = vec![Vec::new(); board.cells()];
    for &c in cells {
        adj[c] = board.neighbors(c).filter(|&v| member[v]).collect();
    }
    let mut covered = vec![false; board.cells()];
    let mut cycles = Vec::new();
    let mut order: Vec<usize> = cells.to_vec();
    order.sort_unstable();
    if cover_cells(&adj, &order, &mut covered, &mut cycles, cells.len(), k) {
        Some(cycles)
    } else {
        None
    }
}

fn cover_cells(
    adj: &[Vec<usize>],
    order: &[usize],
    covered: &mut Vec<bool>,
    cycles: &mut Vec<Vec<usize>>,
    remaining: usize,
    k: usize,
) -> bool {
    if remaining == 0 {
        return cycles.len() == k;
    }
    if cycles.len() >= k || remaining < 4 * (k - cycles.len()) {
        return false;
    }
    let start = *order.iter().find(|&&c| !covered[c]).unwrap();
    covered[start] = true;
    let mut path = vec![start];
    let ok = extend_cycle(adj, order, covered, cycles, remaining - 1, k, &mut path);
    covered[start] = false;
    ok
}

fn extend_cycle(
    adj: &[Vec<usize>],
    order: &[usize],
    covered: &mut Vec<bool>,
    cycles: &mut Vec<Vec<usize>>,
    remaining: usize,
    k: usize,
    path: &mut Vec<usize>,
) -> bool {
    let cur = *path.last().unwrap();
    let start = path[0];
    let last_cycle = cycles.len() + 1 == k;

    // Closing is an option once the walk is long enough; when this is
    // the last cycle it must absorb every remaining cell first.
    if path.len() >= 4 && adj[cur].contains(&start) && (!last_cycle || remaining == 0) {
        cycles.push(path.clone());
        if cover_cells(adj, order, covered, cycles, remaining, k) {
            return true;
        }
        cycles.pop();
    }

    let mut cands: Vec<(usize, usize)> = adj[cur]
        .iter()
        .filter(|&&v| !covered[v])
        .map(|&v| {
            let onward = adj[v].iter().filter(|&&w| !covered[w]).count();
            (onward, v)
        })
        .collect();
    cands.sort_unstable();
    for (_, v) in cands {
        covered[v] = true;
        path.push(v);
        if extend_cycle(adj, order, covered, cycles, remaining - 1, k, path) {
            return true;
        }
        path.pop();
        covered[v] = false;
    }
    false
}
