//! Tourney and tour generators.
//!
//! Five families: Warnsdorff random walks (tour and tourney modes), the
//! edge-neuron network (tour and tourney modes), the deterministic block
//! tiling and the tour joined from it, concentric braids, and the
//! diamond four-cover.

mod backtrack;
mod braid;
mod cache;
mod four_cover;
mod neural;
mod tiled;
mod warnsdorff;

pub use braid::braided_tourney;
pub use cache::DATA_DIR_ENV;
pub use four_cover::four_cover;
pub use neural::{neural_tour, neural_tourney, DEFAULT_ATTEMPT_CAP, DEFAULT_EPOCH_CAP};
pub use tiled::{base_tour, block_partition, dc_tour, tiled_tourney};
pub use warnsdorff::{warnsdorff_tour, warnsdorff_tourney};

use crate::cover::CycleCover;
use crate::error::{Error, Result};
use crate::rng::Rng;

/// Shared generation knobs. `epoch_cap` and `synchronous` only matter
/// for the network generators.
#[derive(Clone, Copy, Debug)]
pub struct GeneratorConfig {
    pub n: usize,
    pub seed: u64,
    pub attempt_cap: usize,
    pub epoch_cap: usize,
    pub synchronous: bool,
}

impl GeneratorConfig {
    pub fn new(n: usize, seed: u64) -> GeneratorConfig {
        GeneratorConfig {
            n,
            seed,
            attempt_cap: DEFAULT_ATTEMPT_CAP,
            epoch_cap: DEFAULT_EPOCH_CAP,
            synchronous: false,
        }
    }
}

/// The eight generation algorithms exposed by the CLI and the batch
/// helpers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Algorithm {
    WarnsdorffTour,
    WarnsdorffTourney,
    NeuralTour,
    NeuralTourney,
    Tiled,
    DcTour,
    Braid,
    FourCover,
}

impl Algorithm {
    pub const ALL: [Algorithm; 8] = [
        Algorithm::WarnsdorffTour,
        Algorithm::WarnsdorffTourney,
        Algorithm::NeuralTour,
        Algorithm::NeuralTourney,
        Algorithm::Tiled,
        Algorithm::DcTour,
        Algorithm::Braid,
        Algorithm::FourCover,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::WarnsdorffTour => "warnsdorff-tour",
            Algorithm::WarnsdorffTourney => "warnsdorff-tourney",
            Algorithm::NeuralTour => "neural-tour",
            Algorithm::NeuralTourney => "neural-tourney",
            Algorithm::Tiled => "tiled",
            Algorithm::DcTour => "dc",
            Algorithm::Braid => "braid",
            Algorithm::FourCover => "four-cover",
        }
    }

    /// True when the output is always a single cycle.
    pub fn is_tour_mode(self) -> bool {
        matches!(
            self,
            Algorithm::WarnsdorffTour | Algorithm::NeuralTour | Algorithm::DcTour
        )
    }

    /// Smallest supported board and side-length constraint, as
    /// (minimum, modulus).
    pub fn size_rule(self) -> (usize, usize) {
        match self {
            Algorithm::FourCover => (4, 4),
            Algorithm::Braid => (4, 2),
            _ => (6, 2),
        }
    }

    pub fn accepts(self, n: usize) -> bool {
        let (min, modulus) = self.size_rule();
        n >= min && n % modulus == 0
    }

    pub fn run(self, cfg: &GeneratorConfig) -> Result<CycleCover> {
        let mut rng = Rng::new(cfg.seed);
        match self {
            Algorithm::WarnsdorffTour => warnsdorff_tour(cfg.n, &mut rng, cfg.attempt_cap),
            Algorithm::WarnsdorffTourney => warnsdorff_tourney(cfg.n, &mut rng, cfg.attempt_cap),
            Algorithm::NeuralTour => neural_tour(
                cfg.n,
                &mut rng,
                cfg.attempt_cap,
                cfg.epoch_cap,
                cfg.synchronous,
            ),
            Algorithm::NeuralTourney => neural_tourney(
                cfg.n,
                &mut rng,
                cfg.attempt_cap,
                cfg.epoch_cap,
                cfg.synchronous,
            ),
            Algorithm::Tiled => tiled_tourney(cfg.n),
            Algorithm::DcTour => dc_tour(cfg.n, &mut rng),
            Algorithm::Braid => braided_tourney(cfg.n),
            Algorithm::FourCover => four_cover(cfg.n),
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Algorithm> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::ParseError {
                line: 0,
                message: format!("unknown algorithm '{s}'"),
            })
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for algo in Algorithm::ALL {
            assert_eq!(algo.name().parse::<Algorithm>().unwrap(), algo);
        }
        assert!("nope".parse::<Algorithm>().is_err());
    }

    #[test]
    fn every_generator_produces_a_valid_cover_at_n_12() {
        for algo in Algorithm::ALL {
            let cfg = GeneratorConfig::new(12, 42);
            let g = algo.run(&cfg).unwrap();
            let k = g.validate(false).unwrap();
            if algo.is_tour_mode() {
                assert_eq!(k, 1, "{}", algo.name());
            }
        }
    }

    #[test]
    fn size_rules() {
        assert!(!Algorithm::FourCover.accepts(6));
        assert!(Algorithm::FourCover.accepts(8));
        assert!(!Algorithm::WarnsdorffTour.accepts(5));
        assert!(Algorithm::Braid.accepts(10));
    }
}
