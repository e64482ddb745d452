//! Tourney surgery: join, shatter, and obfuscate.
//!
//! The rail graph of a tourney has a vertex per cycle and one edge per
//! rail whose parallel edges lie in two distinct cycles. Switching a
//! pairwise vertex-disjoint set of rails chosen along a spanning forest
//! of the rail graph merges cycles (join); switching a maximal random
//! disjoint rail set splits them (shatter). A few shatters followed by a
//! join obfuscate a tour's origin.

use std::collections::VecDeque;

use crate::cover::CycleCover;
use crate::error::{Error, Result};
use crate::rail::{find_rails, rail_cells, switch_rail, Rail};
use crate::rng::Rng;

pub const DEFAULT_JOIN_ROUNDS: usize = 8;
pub const DEFAULT_OBFUSCATE_ATTEMPTS: usize = 8;
pub const DEFAULT_SHATTER_ITERS: usize = 16;

/// A rail linking two distinct cycles, by cycle index.
#[derive(Clone, Copy, Debug)]
pub struct RailGraphEdge {
    pub a: usize,
    pub b: usize,
    pub rail: Rail,
}

/// Multigraph over the cycles of a tourney. Parallel edges (several
/// rails linking the same cycle pair) are preserved.
#[derive(Clone, Debug)]
pub struct RailGraph {
    cycle_count: usize,
    edges: Vec<RailGraphEdge>,
    adj: Vec<Vec<usize>>,
}

impl RailGraph {
    pub fn cycle_count(&self) -> usize {
        self.cycle_count
    }

    pub fn edges(&self) -> &[RailGraphEdge] {
        &self.edges
    }

    /// Indices of all edges between the same cycle pair as `edge`.
    fn parallel_to(&self, edge: usize) -> impl Iterator<Item = usize> + '_ {
        let (a, b) = (self.edges[edge].a, self.edges[edge].b);
        self.adj[a]
            .iter()
            .copied()
            .filter(move |&i| (self.edges[i].a, self.edges[i].b) == (a, b))
    }
}

/// Builds the rail graph of a validated tourney from its rail list.
/// Rails internal to one cycle are dropped.
pub fn build_rail_graph(g: &CycleCover, rails: &[Rail]) -> Result<RailGraph> {
    let cycles = g.cycles()?;
    let mut cycle_of = vec![0usize; g.board().cells()];
    for (i, cycle) in cycles.iter().enumerate() {
        for &v in cycle {
            cycle_of[v] = i;
        }
    }
    let mut edges = Vec::new();
    let mut adj = vec![Vec::new(); cycles.len()];
    for &rail in rails {
        let [v0, _, v2, _] = rail_cells(g.board(), rail)?;
        let (ca, cb) = (cycle_of[v0], cycle_of[v2]);
        if ca == cb {
            continue;
        }
        let (a, b) = (ca.min(cb), ca.max(cb));
        adj[a].push(edges.len());
        adj[b].push(edges.len());
        edges.push(RailGraphEdge { a, b, rail });
    }
    Ok(RailGraph {
        cycle_count: cycles.len(),
        edges,
        adj,
    })
}

/// Breadth-first spanning forest from the lowest-numbered roots.
/// Returns indices into `rg.edges()`, one per forest edge; the edge
/// count is `cycle_count - components`.
pub fn spanning_forest(rg: &RailGraph) -> Vec<usize> {
    let mut visited = vec![false; rg.cycle_count];
    let mut forest = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..rg.cycle_count {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        queue.push_back(root);
        while let Some(c) = queue.pop_front() {
            for &ei in &rg.adj[c] {
                let e = rg.edges[ei];
                let other = if e.a == c { e.b } else { e.a };
                if !visited[other] {
                    visited[other] = true;
                    forest.push(ei);
                    queue.push_back(other);
                }
            }
        }
    }
    forest
}

#[derive(Clone, Copy, Debug)]
pub struct JoinStats {
    pub size_before: usize,
    pub switched: usize,
    pub size_after: usize,
}

/// One pass of the join operation: find rails, take a spanning forest of
/// the rail graph, pick one rail per forest edge so that all picks are
/// pairwise vertex-disjoint (forest edges with no disjoint candidate are
/// skipped), and switch them. Each switch merges two cycles, so the
/// output size is exactly the input size minus the number switched.
pub fn join(g: &mut CycleCover, rng: &mut Rng) -> Result<JoinStats> {
    let size_before = g.validate(false)?;
    let rails = find_rails(g);
    let rg = build_rail_graph(g, &rails)?;
    let forest = spanning_forest(&rg);

    let board = g.board();
    let mut occupied = vec![false; board.cells()];
    let mut chosen: Vec<Rail> = Vec::new();
    for &ei in &forest {
        let candidates: Vec<Rail> = rg
            .parallel_to(ei)
            .map(|i| rg.edges[i].rail)
            .filter(|&r| {
                rail_cells(board, r)
                    .map(|cells| cells.iter().all(|&c| !occupied[c]))
                    .unwrap_or(false)
            })
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let rail = *rng.pick(&candidates);
        for c in rail_cells(board, rail)? {
            occupied[c] = true;
        }
        chosen.push(rail);
    }

    for &rail in &chosen {
        switch_rail(g, rail)?;
    }
    let size_after = g.validate(false)?;
    assert_eq!(
        size_after,
        size_before - chosen.len(),
        "join size law violated"
    );
    Ok(JoinStats {
        size_before,
        switched: chosen.len(),
        size_after,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct JoinToTour {
    pub final_size: usize,
    pub rounds: usize,
    pub reached_tour: bool,
}

/// Repeats [`join`] until the cover is a single cycle, the size stops
/// decreasing, or `max_rounds` passes have run.
pub fn join_to_tour(g: &mut CycleCover, rng: &mut Rng, max_rounds: usize) -> Result<JoinToTour> {
    let mut size = g.validate(false)?;
    let mut rounds = 0;
    while size > 1 && rounds < max_rounds {
        let stats = join(g, rng)?;
        rounds += 1;
        if stats.size_after == size {
            break;
        }
        size = stats.size_after;
    }
    Ok(JoinToTour {
        final_size: size,
        rounds,
        reached_tour: size == 1,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct ShatterStats {
    pub switched: usize,
    pub size_before: usize,
    pub size_after: usize,
}

/// Switches a maximal pairwise vertex-disjoint set of rails, chosen by a
/// seeded greedy scan over a shuffled rail list. On a tour this
/// generally produces a tourney of several cycles.
pub fn shatter(g: &mut CycleCover, rng: &mut Rng) -> Result<ShatterStats> {
    let size_before = g.validate(false)?;
    let board = g.board();
    let mut rails = find_rails(g);
    rng.shuffle(&mut rails);
    let mut occupied = vec![false; board.cells()];
    let mut chosen: Vec<Rail> = Vec::new();
    for rail in rails {
        let cells = rail_cells(board, rail)?;
        if cells.iter().all(|&c| !occupied[c]) {
            for c in cells {
                occupied[c] = true;
            }
            chosen.push(rail);
        }
    }
    for &rail in &chosen {
        switch_rail(g, rail)?;
    }
    let size_after = g.validate(false)?;
    Ok(ShatterStats {
        switched: chosen.len(),
        size_before,
        size_after,
    })
}

/// Obfuscates a closed tour: `shatter_iters` shatters followed by a
/// join back to a tour. Retries with a fresh substream up to
/// `max_attempts` times if the join falls short.
pub fn obfuscate(
    tour: &CycleCover,
    rng: &mut Rng,
    shatter_iters: usize,
    max_attempts: usize,
) -> Result<CycleCover> {
    tour.validate(true)?;
    let base = rng.fork();
    for attempt in 0..max_attempts.max(1) {
        let mut stream = base.substream(attempt as u64);
        let mut g = tour.clone();
        for _ in 0..shatter_iters {
            shatter(&mut g, &mut stream)?;
        }
        let outcome = join_to_tour(&mut g, &mut stream, DEFAULT_JOIN_ROUNDS)?;
        if outcome.reached_tour {
            return Ok(g);
        }
    }
    Err(Error::ObfuscationFailed {
        attempts: max_attempts.max(1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::Move;
    use crate::testutil::diamond_cover_4;

    #[test]
    fn closed_tour_rail_graph_has_no_edges() {
        // A 6x6 tour from the deterministic tiled generator.
        let g = crate::generators::tiled_tourney(6).unwrap();
        assert_eq!(g.validate(true).unwrap(), 1);
        let rails = find_rails(&g);
        let rg = build_rail_graph(&g, &rails).unwrap();
        assert_eq!(rg.cycle_count(), 1);
        assert!(rg.edges().is_empty());
        assert!(spanning_forest(&rg).is_empty());
    }

    #[test]
    fn diamond_cover_rail_graph_is_edgeless() {
        let g = diamond_cover_4();
        let rails = find_rails(&g);
        let rg = build_rail_graph(&g, &rails).unwrap();
        assert_eq!(rg.cycle_count(), 4);
        assert!(rg.edges().is_empty());
    }

    #[test]
    fn forest_size_arithmetic() {
        // Hand-built rail graph shapes: sizes 2 and 3 components give
        // 1 + 2 forest edges.
        let dummy = Rail::new(0, Move::new(6), Move::new(7)).unwrap();
        let mut adj = vec![Vec::new(); 5];
        let edges: Vec<RailGraphEdge> = [(0, 1), (2, 3), (3, 4), (2, 4)]
            .into_iter()
            .enumerate()
            .map(|(i, (a, b))| {
                adj[a].push(i);
                adj[b].push(i);
                RailGraphEdge { a, b, rail: dummy }
            })
            .collect();
        let rg = RailGraph {
            cycle_count: 5,
            edges,
            adj,
        };
        assert_eq!(spanning_forest(&rg).len(), 3);
    }

    #[test]
    fn cross_cycle_switch_merges() {
        let mut g = crate::generators::tiled_tourney(12).unwrap();
        assert_eq!(g.cycles().unwrap().len(), 4);
        let rails = find_rails(&g);
        let rg = build_rail_graph(&g, &rails).unwrap();
        assert_eq!(rg.cycle_count(), 4);
        assert!(rg.edges().len() >= 3, "adjacent blocks share rails");
        let rail = rg.edges()[0].rail;
        switch_rail(&mut g, rail).unwrap();
        assert_eq!(g.cycles().unwrap().len(), 3);
    }

    #[test]
    fn join_on_rail_free_cover_is_identity() {
        let mut g = diamond_cover_4();
        let before = g.edge_set();
        let stats = join(&mut g, &mut Rng::new(0)).unwrap();
        assert_eq!(stats.switched, 0);
        assert_eq!(stats.size_after, 4);
        assert_eq!(g.edge_set(), before);
    }

    #[test]
    fn join_to_tour_flags_rail_free_input() {
        let mut g = diamond_cover_4();
        let outcome = join_to_tour(&mut g, &mut Rng::new(0), 4).unwrap();
        assert!(!outcome.reached_tour);
        assert_eq!(outcome.final_size, 4);
    }

    #[test]
    fn shatter_on_rail_free_cover_is_identity() {
        let mut g = diamond_cover_4();
        let before = g.edge_set();
        let stats = shatter(&mut g, &mut Rng::new(5)).unwrap();
        assert_eq!(stats.switched, 0);
        assert_eq!(g.edge_set(), before);
    }

    #[test]
    fn disjoint_switches_commute() {
        let g = crate::generators::tiled_tourney(12).unwrap();
        let board = g.board();
        let rails = find_rails(&g);
        // Greedily pick a handful of disjoint rails.
        let mut occupied = vec![false; board.cells()];
        let mut set = Vec::new();
        for r in rails {
            let cells = rail_cells(board, r).unwrap();
            if cells.iter().all(|&c| !occupied[c]) {
                for c in cells {
                    occupied[c] = true;
                }
                set.push(r);
                if set.len() == 5 {
                    break;
                }
            }
        }
        assert!(set.len() >= 2);
        let mut forward = g.clone();
        for &r in &set {
            switch_rail(&mut forward, r).unwrap();
        }
        let mut rng = Rng::new(99);
        for _ in 0..5 {
            let mut perm = set.clone();
            rng.shuffle(&mut perm);
            let mut h = g.clone();
            for &r in &perm {
                switch_rail(&mut h, r).unwrap();
            }
            assert_eq!(h.edge_set(), forward.edge_set());
        }
    }
}
