//! Cycle covers of the knight's graph.
//!
//! A [`CycleCover`] holds an undirected subgraph of the knight's graph
//! as per-cell neighbor lists (at most 8 entries each). The same type
//! carries graphs under construction; [`CycleCover::validate`] checks
//! the tourney invariants: degree 2 everywhere, every edge a legal
//! knight's move, and returns the number of cycles.

use arrayvec::ArrayVec;

use crate::board::Board;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleCover {
    board: Board,
    adj: Vec<ArrayVec<usize, 8>>,
}

impl CycleCover {
    /// An edgeless graph on the `n x n` board.
    pub fn empty(n: usize) -> CycleCover {
        let board = Board::new(n);
        CycleCover {
            board,
            adj: vec![ArrayVec::new(); board.cells()],
        }
    }

    /// Builds a cover from explicit cycles given as cell sequences.
    /// Consecutive cells (wrapping) become edges; legality is not
    /// checked here, run `validate` for that.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> CycleCover {
        let mut g = CycleCover::empty(n);
        for cycle in cycles {
            for i in 0..cycle.len() {
                let u = cycle[i];
                let v = cycle[(i + 1) % cycle.len()];
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn board(&self) -> Board {
        self.board
    }

    pub fn n(&self) -> usize {
        self.board.size()
    }

    /// Inserts an undirected edge. Returns false if it was already
    /// present. Panics if either cell would exceed knight-graph degree.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.adj.len() && v < self.adj.len());
        if self.has_edge(u, v) {
            return false;
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        true
    }

    /// Removes an undirected edge. Returns false if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let Some(i) = self.adj[u].iter().position(|&w| w == v) else {
            return false;
        };
        self.adj[u].swap_remove(i);
        let j = self.adj[v].iter().position(|&w| w == u).unwrap();
        self.adj[v].swap_remove(j);
        true
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbor cells of `v`, in insertion order.
    pub fn neighbors_of(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Undirected edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|nbrs| nbrs.len()).sum::<usize>() / 2
    }

    /// Sorted edge list, canonical for equality comparisons.
    pub fn edge_set(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        edges.sort_unstable();
        edges
    }

    /// Decomposes a 2-regular graph into its cycles. Each cycle starts
    /// at its minimum cell and runs toward the smaller of that cell's
    /// two neighbors; cycles are listed by ascending start cell.
    pub fn cycles(&self) -> Result<Vec<Vec<usize>>> {
        for (v, nbrs) in self.adj.iter().enumerate() {
            if nbrs.len() != 2 {
                return Err(Error::NotTwoRegular {
                    cell: v,
                    degree: nbrs.len(),
                });
            }
        }
        let mut seen = vec![false; self.adj.len()];
        let mut cycles = Vec::new();
        for start in 0..self.adj.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut cycle = vec![start];
            let mut prev = start;
            let mut cur = self.adj[start][0].min(self.adj[start][1]);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                let [a, b] = [self.adj[cur][0], self.adj[cur][1]];
                let next = if a == prev { b } else { a };
                prev = cur;
                cur = next;
            }
            cycles.push(cycle);
        }
        Ok(cycles)
    }

    /// Checks 2-regularity, edge legality, and full coverage; returns
    /// the tourney size (number of cycles). With `expect_tour`, a size
    /// above one is an error.
    pub fn validate(&self, expect_tour: bool) -> Result<usize> {
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if self.board.km(u, v).is_none() {
                    return Err(Error::IllegalEdge {
                        u: u.min(v),
                        v: u.max(v),
                    });
                }
            }
        }
        let cycles = self.cycles()?;
        debug_assert_eq!(
            cycles.iter().map(|c| c.len()).sum::<usize>(),
            self.board.cells()
        );
        if expect_tour && cycles.len() != 1 {
            return Err(Error::NotConnected {
                cycles: cycles.len(),
            });
        }
        Ok(cycles.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::diamond_cover_4;

    #[test]
    fn edge_insert_remove_query() {
        let mut g = CycleCover::empty(8);
        assert!(g.add_edge(0, 17));
        assert!(!g.add_edge(17, 0));
        assert!(g.has_edge(17, 0));
        assert_eq!(g.edge_count(), 1);
        assert!(g.remove_edge(0, 17));
        assert!(!g.remove_edge(0, 17));
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn diamond_cover_decomposes_into_four_cycles() {
        let g = diamond_cover_4();
        let cycles = g.cycles().unwrap();
        assert_eq!(cycles.len(), 4);
        assert!(cycles.iter().all(|c| c.len() == 4));
        assert_eq!(cycles[0], vec![0, 6, 15, 9]);
        assert_eq!(g.validate(false).unwrap(), 4);
    }

    #[test]
    fn diamond_cover_is_not_a_tour() {
        let g = diamond_cover_4();
        assert_eq!(
            g.validate(true),
            Err(Error::NotConnected { cycles: 4 })
        );
    }

    #[test]
    fn isolated_cell_is_not_two_regular() {
        let g = CycleCover::empty(4);
        assert_eq!(
            g.cycles(),
            Err(Error::NotTwoRegular { cell: 0, degree: 0 })
        );
    }

    #[test]
    fn illegal_edge_is_rejected() {
        let mut g = diamond_cover_4();
        g.remove_edge(0, 6);
        g.remove_edge(15, 9);
        g.add_edge(0, 15);
        g.add_edge(6, 9);
        assert_eq!(g.validate(false), Err(Error::IllegalEdge { u: 0, v: 15 }));
    }

    #[test]
    fn cycle_lengths_are_even_and_at_least_four() {
        let g = diamond_cover_4();
        for c in g.cycles().unwrap() {
            assert!(c.len() >= 4 && c.len() % 2 == 0);
        }
    }

    // Knight's graph connectivity: one component exactly when n >= 4.
    #[test]
    fn knight_graph_connectivity() {
        for n in 2..=12 {
            let b = Board::new(n);
            let mut seen = vec![false; b.cells()];
            let mut queue = std::collections::VecDeque::from([0usize]);
            seen[0] = true;
            let mut count = 1;
            while let Some(u) = queue.pop_front() {
                for v in b.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        count += 1;
                        queue.push_back(v);
                    }
                }
            }
            assert_eq!(count == b.cells(), n >= 4, "n={n}");
        }
    }
}
