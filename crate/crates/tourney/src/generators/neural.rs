//! Edge-neuron network in the Takefuji-Lee style.
//!
//! One binary neuron per undirected knight-graph edge, with integer
//! potential `U` (initially 0) and output `V` (initially a fair coin).
//! A sweep visits edges in a fixed order and nudges each potential by
//! the degree surplus of its endpoints, `U += (2 - deg(u)) + (2 -
//! deg(v))` where `deg` counts active edges, then sets `V = 1` if
//! `U > 3`, `V = 0` if `U < 0`, and leaves it otherwise. Any tourney
//! indicator is a fixpoint: with every cell at degree 2 all potentials
//! freeze and no output can change. The network has converged when the
//! active edges are 2-regular; tour mode additionally requires a single
//! cycle and reinitializes otherwise. Sequential (Gauss-Seidel) updates
//! are the default; the synchronous mode behind the flag rarely settles.

use crate::board::{Board, Move};
use crate::cover::CycleCover;
use crate::error::{Error, Result};
use crate::rng::Rng;

pub const DEFAULT_ATTEMPT_CAP: usize = 1024;
pub const DEFAULT_EPOCH_CAP: usize = 2048;

struct Network {
    n: usize,
    /// Undirected edges `(u, v)` with `u < v`, in (cell, move) order.
    edges: Vec<(usize, usize)>,
}

struct State {
    potential: Vec<i64>,
    output: Vec<u8>,
    /// Active degree per cell, maintained incrementally.
    degree: Vec<i64>,
}

impl Network {
    fn build(n: usize) -> Network {
        let board = Board::new(n);
        let mut edges = Vec::new();
        for u in 0..board.cells() {
            for m in Move::DOWNWARD {
                if let Some(v) = board.dest(u, m) {
                    edges.push((u, v));
                }
            }
        }
        Network { n, edges }
    }

    fn init(&self, rng: &mut Rng) -> State {
        let output: Vec<u8> = (0..self.edges.len()).map(|_| rng.coin() as u8).collect();
        let mut degree = vec![0i64; self.n * self.n];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if output[e] == 1 {
                degree[a] += 1;
                degree[b] += 1;
            }
        }
        State {
            potential: vec![0; self.edges.len()],
            output,
            degree,
        }
    }

    /// One full sweep. Returns (any output changed, any potential still
    /// drifting toward its flip threshold). When both are false the
    /// outputs can never change again.
    fn sweep(&self, s: &mut State, synchronous: bool) -> (bool, bool) {
        let snapshot: Option<Vec<i64>> = synchronous.then(|| s.degree.clone());
        let mut v_changed = false;
        let mut approaching = false;
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            let (da, db) = match &snapshot {
                Some(snap) => (snap[a], snap[b]),
                None => (s.degree[a], s.degree[b]),
            };
            let delta = (2 - da) + (2 - db);
            s.potential[e] += delta;
            let new_v = if s.potential[e] > 3 {
                1
            } else if s.potential[e] < 0 {
                0
            } else {
                s.output[e]
            };
            if new_v != s.output[e] {
                v_changed = true;
                s.output[e] = new_v;
                let d = if new_v == 1 { 1 } else { -1 };
                s.degree[a] += d;
                s.degree[b] += d;
            }
            // An active edge sinking or an inactive edge rising will
            // eventually cross a threshold.
            if (s.output[e] == 1 && delta < 0) || (s.output[e] == 0 && delta > 0) {
                approaching = true;
            }
        }
        (v_changed, approaching)
    }

    fn active_cover(&self, s: &State) -> CycleCover {
        let mut g = CycleCover::empty(self.n);
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if s.output[e] == 1 {
                g.add_edge(a, b);
            }
        }
        g
    }
}

fn run(
    n: usize,
    rng: &mut Rng,
    attempt_cap: usize,
    epoch_cap: usize,
    synchronous: bool,
    need_tour: bool,
) -> Result<CycleCover> {
    if n < 6 || n % 2 != 0 {
        return Err(Error::BadSize {
            n,
            reason: "network generation needs even n >= 6",
        });
    }
    let net = Network::build(n);
    let mut hit_epoch_cap = false;
    for _ in 0..attempt_cap.max(1) {
        let mut state = net.init(rng);
        let mut settled = false;
        for _ in 0..epoch_cap.max(1) {
            let (v_changed, approaching) = net.sweep(&mut state, synchronous);
            if state.degree.iter().all(|&d| d == 2) {
                // All potentials are frozen from here on; the active
                // set is a tourney.
                let cover = net.active_cover(&state);
                if !need_tour || cover.cycles()?.len() == 1 {
                    return Ok(cover);
                }
                settled = true;
                break;
            }
            if !v_changed && !approaching {
                // Frozen short of 2-regularity; only a restart helps.
                settled = true;
                break;
            }
        }
        hit_epoch_cap = !settled;
    }
    if hit_epoch_cap {
        Err(Error::EpochLimit { epochs: epoch_cap })
    } else {
        Err(Error::AttemptsExhausted {
            attempts: attempt_cap,
        })
    }
}

/// Tourney from the edge-neuron network.
pub fn neural_tourney(
    n: usize,
    rng: &mut Rng,
    attempt_cap: usize,
    epoch_cap: usize,
    synchronous: bool,
) -> Result<CycleCover> {
    run(n, rng, attempt_cap, epoch_cap, synchronous, false)
}

/// Closed tour from the edge-neuron network: converged tourneys with
/// more than one cycle are rejected and the network reinitialized.
pub fn neural_tour(
    n: usize,
    rng: &mut Rng,
    attempt_cap: usize,
    epoch_cap: usize,
    synchronous: bool,
) -> Result<CycleCover> {
    run(n, rng, attempt_cap, epoch_cap, synchronous, true)
}
