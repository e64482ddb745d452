//! CSV reporting and the timing harness.
//!
//! Statistics CSVs are deterministic for a fixed seed set. Benchmark
//! runs execute serially with one discarded warm-up per size; times are
//! monotonic wall-clock, reported per cell.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use crate::cover::CycleCover;
use crate::error::Result;
use crate::generators::{Algorithm, GeneratorConfig};
use crate::rail::find_rails;
use crate::rng::Rng;
use crate::stats::DistributionSummary;
use crate::surgery::{obfuscate, DEFAULT_OBFUSCATE_ATTEMPTS, DEFAULT_SHATTER_ITERS};

/// One aggregated row of move statistics for `stats_csv`.
#[derive(Clone, Debug)]
pub struct StatsRow {
    pub algorithm: String,
    pub n: usize,
    pub trials: usize,
    pub moves: DistributionSummary,
    pub relative: DistributionSummary,
}

/// Renders rows as CSV with fixed six-decimal formatting:
/// `algorithm,n,trials,f0..f7,sd_f0..sd_f7,r0..r7,sd_r0..sd_r7`.
pub fn stats_csv(rows: &[StatsRow]) -> String {
    let mut out = String::from("algorithm,n,trials");
    for prefix in ["f", "sd_f", "r", "sd_r"] {
        for i in 0..8 {
            out.push_str(&format!(",{prefix}{i}"));
        }
    }
    out.push('\n');
    for row in rows {
        out.push_str(&format!("{},{},{}", row.algorithm, row.n, row.trials));
        for values in [
            &row.moves.mean,
            &row.moves.stddev,
            &row.relative.mean,
            &row.relative.stddev,
        ] {
            for v in values {
                out.push_str(&format!(",{v:.6}"));
            }
        }
        out.push('\n');
    }
    out
}

/// Record of one timed generation run.
#[derive(Clone, Debug)]
pub struct RunRecord {
    pub algorithm: String,
    pub n: usize,
    pub seed: u64,
    pub wall: Duration,
    pub cycles: usize,
    pub rails: usize,
    pub outputs: Vec<PathBuf>,
}

/// Aggregated timing for one board size.
#[derive(Clone, Debug)]
pub struct BenchPoint {
    pub algorithm: String,
    pub n: usize,
    pub trials: usize,
    pub mean_per_cell_ns: f64,
    pub sd_per_cell_ns: f64,
}

/// Times `trials` seeded runs of an algorithm (optionally followed by
/// obfuscation) for each board size. One warm-up run per size is
/// excluded; rail counts are taken outside the timed region.
pub fn bench(
    algo: Algorithm,
    obfuscated: bool,
    sizes: &[usize],
    trials: usize,
    seed: u64,
) -> Result<(Vec<RunRecord>, Vec<BenchPoint>)> {
    let name = if obfuscated {
        format!("{}+obfuscate", algo.name())
    } else {
        algo.name().to_string()
    };
    let base = Rng::new(seed);
    let run = |n: usize, trial_seed: u64| -> Result<(CycleCover, Duration)> {
        let mut cfg = GeneratorConfig::new(n, trial_seed);
        cfg.attempt_cap = 100_000;
        let start = Instant::now();
        let mut g = algo.run(&cfg)?;
        if obfuscated {
            let mut rng = Rng::new(trial_seed ^ 0xb10c);
            g = obfuscate(
                &g,
                &mut rng,
                DEFAULT_SHATTER_ITERS,
                DEFAULT_OBFUSCATE_ATTEMPTS,
            )?;
        }
        Ok((g, start.elapsed()))
    };

    let mut records = Vec::new();
    let mut points = Vec::new();
    for &n in sizes {
        let warm_seed = base.substream(u64::MAX).seed() ^ n as u64;
        run(n, warm_seed)?;
        let mut per_cell = Vec::with_capacity(trials);
        for t in 0..trials.max(1) {
            let trial_seed = base.substream((n * 1_000_003 + t) as u64).seed();
            let (g, wall) = run(n, trial_seed)?;
            per_cell.push(wall.as_nanos() as f64 / (n * n) as f64);
            records.push(RunRecord {
                algorithm: name.clone(),
                n,
                seed: trial_seed,
                wall,
                cycles: g.validate(false)?,
                rails: find_rails(&g).len(),
                outputs: Vec::new(),
            });
        }
        let mean = per_cell.iter().sum::<f64>() / per_cell.len() as f64;
        let var =
            per_cell.iter().map(|t| (t - mean).powi(2)).sum::<f64>() / per_cell.len() as f64;
        points.push(BenchPoint {
            algorithm: name.clone(),
            n,
            trials: per_cell.len(),
            mean_per_cell_ns: mean,
            sd_per_cell_ns: var.sqrt(),
        });
    }
    Ok((records, points))
}

/// CSV for benchmark points:
/// `algorithm,n,trials,mean_per_cell_ns,sd_per_cell_ns`.
pub fn bench_csv(points: &[BenchPoint]) -> String {
    let mut out = String::from("algorithm,n,trials,mean_per_cell_ns,sd_per_cell_ns\n");
    for p in points {
        out.push_str(&format!(
            "{},{},{},{:.3},{:.3}\n",
            p.algorithm, p.n, p.trials, p.mean_per_cell_ns, p.sd_per_cell_ns
        ));
    }
    out
}
