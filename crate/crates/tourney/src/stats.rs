//! Move statistics for tourneys.
//!
//! The move distribution counts, for each move number, the edges
//! realizing that move in either direction, normalized by `2n^2`. The
//! relative move distribution counts, at every cell, the difference
//! (mod 8) between the incoming and outgoing move in both traversal
//! directions, normalized the same way. Bucket 4 of the relative
//! distribution is structurally zero: no move is followed by its exact
//! reverse inside a cycle.

use crate::cover::CycleCover;
use crate::error::{Error, Result};
use crate::rail::find_rails;

/// Frequencies of the eight moves across a cover's edges, with the raw
/// bucket counts kept for exact identity checks.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct MoveDistribution {
    pub counts: [usize; 8],
    pub freq: [f64; 8],
}

/// Frequencies of the eight relative moves across a cover's cells.
/// `freq[4]` is always zero.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct RelativeMoveDistribution {
    pub counts: [usize; 8],
    pub freq: [f64; 8],
}

/// Per-bucket mean and population standard deviation over a set of
/// distributions.
#[derive(Clone, Debug)]
pub struct DistributionSummary {
    pub mean: [f64; 8],
    pub stddev: [f64; 8],
    pub trials: usize,
}

fn normalize(counts: [usize; 8], denom: usize) -> [f64; 8] {
    let mut freq = [0.0; 8];
    for i in 0..8 {
        freq[i] = counts[i] as f64 / denom as f64;
    }
    freq
}

/// Move distribution of a validated cover: each undirected edge
/// increments the buckets of its move and the opposite move.
pub fn move_distribution(g: &CycleCover) -> Result<MoveDistribution> {
    g.validate(false)?;
    let board = g.board();
    let mut counts = [0usize; 8];
    for (u, v) in g.edges() {
        let m = board.km(u, v).expect("validated edge");
        counts[m.index()] += 1;
        counts[m.opposite().index()] += 1;
    }
    let denom = 2 * board.cells();
    debug_assert_eq!(counts.iter().sum::<usize>(), denom);
    Ok(MoveDistribution {
        counts,
        freq: normalize(counts, denom),
    })
}

/// Relative move distribution of a validated cover: every cell
/// contributes the relative move of its two cycle edges in both
/// traversal directions.
pub fn relative_move_distribution(g: &CycleCover) -> Result<RelativeMoveDistribution> {
    g.validate(false)?;
    let board = g.board();
    let mut counts = [0usize; 8];
    for v in 0..board.cells() {
        let [a, b] = [g.neighbors_of(v)[0], g.neighbors_of(v)[1]];
        let into = board.km(a, v).expect("validated edge");
        let out = board.km(v, b).expect("validated edge");
        counts[into.rel(out).index()] += 1;
        let into_rev = board.km(b, v).expect("validated edge");
        let out_rev = board.km(v, a).expect("validated edge");
        counts[into_rev.rel(out_rev).index()] += 1;
    }
    let denom = 2 * board.cells();
    debug_assert_eq!(counts.iter().sum::<usize>(), denom);
    Ok(RelativeMoveDistribution {
        counts,
        freq: normalize(counts, denom),
    })
}

/// Per-bucket arithmetic mean and population standard deviation.
pub fn aggregate<'a>(rows: impl IntoIterator<Item = &'a [f64; 8]>) -> Result<DistributionSummary> {
    let rows: Vec<&[f64; 8]> = rows.into_iter().collect();
    if rows.is_empty() {
        return Err(Error::EmptySet);
    }
    let trials = rows.len();
    let mut mean = [0.0; 8];
    for row in &rows {
        for i in 0..8 {
            mean[i] += row[i];
        }
    }
    for m in &mut mean {
        *m /= trials as f64;
    }
    let mut stddev = [0.0; 8];
    for row in &rows {
        for i in 0..8 {
            stddev[i] += (row[i] - mean[i]).powi(2);
        }
    }
    for s in &mut stddev {
        *s = (*s / trials as f64).sqrt();
    }
    Ok(DistributionSummary {
        mean,
        stddev,
        trials,
    })
}

/// Number of rails in a validated cover, the quantity tracked by the
/// rail-count conjecture.
pub fn rail_count(g: &CycleCover) -> Result<usize> {
    g.validate(false)?;
    Ok(find_rails(g).len())
}
