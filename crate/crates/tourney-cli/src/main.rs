//! Command-line front end: generate covers, obfuscate tours, export move
//! statistics, and run timing sweeps. Seeds are always echoed to stderr
//! so any run can be reproduced exactly.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};

use tourney::generators::{Algorithm, GeneratorConfig};
use tourney::report::{bench, bench_csv, stats_csv, StatsRow};
use tourney::stats::{aggregate, move_distribution, relative_move_distribution};
use tourney::surgery::{join_to_tour, obfuscate, DEFAULT_JOIN_ROUNDS};
use tourney::svg::{write_svg, SvgOptions};
use tourney::text::{read_text, write_text};
use tourney::{CycleCover, Error, Rng};

#[derive(Parser)]
#[command(name = "tourney", version, about = "Knight's tourneys and closed tours")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Txt,
    Svg,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a tourney or closed tour.
    Generate {
        /// warnsdorff-tour | warnsdorff-tourney | neural-tour |
        /// neural-tourney | tiled | dc | braid | four-cover
        #[arg(long)]
        algo: Algorithm,
        /// Board side length.
        #[arg(short)]
        n: usize,
        /// RNG seed; random (and echoed) when omitted.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Txt)]
        format: Format,
        /// Output path (used as a stem with --format both).
        #[arg(short, long)]
        output: PathBuf,
        /// Draw board grid lines in SVG output.
        #[arg(long)]
        grid: bool,
        /// Draw cell dots in SVG output.
        #[arg(long)]
        dots: bool,
        /// Cell pitch in SVG user units.
        #[arg(long, default_value_t = 16.0)]
        pitch: f64,
        /// Restart budget for the random generators. Note that
        /// neural-tour on boards beyond ~24 needs astronomically many
        /// restarts regardless of this cap.
        #[arg(long, default_value_t = 100_000)]
        attempt_cap: usize,
        /// Sweep budget per network attempt.
        #[arg(long, default_value_t = 2048)]
        epoch_cap: usize,
        /// Update the network synchronously (rarely settles).
        #[arg(long)]
        synchronous: bool,
    },
    /// Obfuscate a tour read from canonical text. Tourney inputs are
    /// joined into a tour first.
    Obfuscate {
        #[arg(short, long)]
        input: PathBuf,
        /// Number of shatter passes before the final join.
        #[arg(long, default_value_t = 16)]
        iters: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Txt)]
        format: Format,
        #[arg(long)]
        grid: bool,
        #[arg(long)]
        dots: bool,
        #[arg(long, default_value_t = 16.0)]
        pitch: f64,
        /// Retry budget when a join falls short of a tour.
        #[arg(long, default_value_t = 8)]
        attempts: usize,
    },
    /// Aggregate move statistics over seeded trials, written as CSV.
    Stats {
        #[arg(long)]
        algo: Algorithm,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        output: PathBuf,
        /// Measure obfuscated tours instead of raw generator output.
        #[arg(long)]
        obfuscate: bool,
        #[arg(long, default_value_t = 100_000)]
        attempt_cap: usize,
        #[arg(long, default_value_t = 2048)]
        epoch_cap: usize,
    },
    /// Wall-clock timing sweep over board sizes, written as CSV.
    Bench {
        #[arg(long)]
        algo: Algorithm,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        step: usize,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        output: PathBuf,
        /// Time the full generate-join-obfuscate pipeline.
        #[arg(long)]
        obfuscated: bool,
    },
}

fn pick_seed(seed: Option<u64>) -> u64 {
    let seed = seed.unwrap_or_else(|| {
        let nanos = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_nanos() as u64)
            .unwrap_or(0);
        nanos ^ (std::process::id() as u64).rotate_left(32)
    });
    eprintln!("seed: {seed}");
    seed
}

fn write_outputs(
    g: &CycleCover,
    format: Format,
    output: &Path,
    svg_opts: &SvgOptions,
) -> Result<(), Error> {
    let io_err = |e: std::io::Error, path: &Path| Error::ParseError {
        line: 0,
        message: format!("cannot write {}: {e}", path.display()),
    };
    let (txt_path, svg_path) = match format {
        Format::Txt => (Some(output.to_path_buf()), None),
        Format::Svg => (None, Some(output.to_path_buf())),
        Format::Both => (
            Some(output.with_extension("txt")),
            Some(output.with_extension("svg")),
        ),
    };
    if let Some(path) = txt_path {
        std::fs::write(&path, write_text(g)?).map_err(|e| io_err(e, &path))?;
        println!("{}", path.display());
    }
    if let Some(path) = svg_path {
        std::fs::write(&path, write_svg(g, svg_opts)?).map_err(|e| io_err(e, &path))?;
        println!("{}", path.display());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.cmd {
        Cmd::Generate {
            algo,
            n,
            seed,
            format,
            output,
            grid,
            dots,
            pitch,
            attempt_cap,
            epoch_cap,
            synchronous,
        } => {
            let seed = pick_seed(seed);
            let cfg = GeneratorConfig {
                n,
                seed,
                attempt_cap,
                epoch_cap,
                synchronous,
            };
            let g = algo.run(&cfg)?;
            let k = g.validate(false)?;
            eprintln!("{} n={n}: {k} cycle(s)", algo.name());
            write_outputs(&g, format, &output, &SvgOptions { pitch, grid, dots })
        }
        Cmd::Obfuscate {
            input,
            iters,
            seed,
            output,
            format,
            grid,
            dots,
            pitch,
            attempts,
        } => {
            let seed = pick_seed(seed);
            let text = std::fs::read_to_string(&input).map_err(|e| Error::ParseError {
                line: 0,
                message: format!("cannot read {}: {e}", input.display()),
            })?;
            let mut g = read_text(&text)?;
            let mut rng = Rng::new(seed);
            if g.validate(false)? > 1 {
                let outcome = join_to_tour(&mut g, &mut rng, DEFAULT_JOIN_ROUNDS)?;
                if !outcome.reached_tour {
                    return Err(Error::JoinIncomplete {
                        size: outcome.final_size,
                    });
                }
            }
            let obfuscated = obfuscate(&g, &mut rng, iters, attempts)?;
            write_outputs(
                &obfuscated,
                format,
                &output,
                &SvgOptions { pitch, grid, dots },
            )
        }
        Cmd::Stats {
            algo,
            n,
            trials,
            seed,
            output,
            obfuscate: obfuscated,
            attempt_cap,
            epoch_cap,
        } => {
            let seed = pick_seed(seed);
            if trials == 0 {
                return Err(Error::EmptySet);
            }
            let results: Vec<Result<([f64; 8], [f64; 8]), Error>> =
                tourney::batch::map_trials(seed, trials, |_, rng| {
                    let cfg = GeneratorConfig {
                        n,
                        seed: rng.seed(),
                        attempt_cap,
                        epoch_cap,
                        synchronous: false,
                    };
                    let mut g = algo.run(&cfg)?;
                    if obfuscated {
                        if g.validate(false)? > 1 {
                            let outcome = join_to_tour(&mut g, rng, DEFAULT_JOIN_ROUNDS)?;
                            if !outcome.reached_tour {
                                return Err(Error::JoinIncomplete {
                                    size: outcome.final_size,
                                });
                            }
                        }
                        g = obfuscate(&g, rng, 16, 8)?;
                    }
                    Ok((
                        move_distribution(&g)?.freq,
                        relative_move_distribution(&g)?.freq,
                    ))
                });
            let mut f_rows = Vec::with_capacity(trials);
            let mut r_rows = Vec::with_capacity(trials);
            for r in results {
                let (f, rel) = r?;
                f_rows.push(f);
                r_rows.push(rel);
            }
            let name = if obfuscated {
                format!("{}+obfuscate", algo.name())
            } else {
                algo.name().to_string()
            };
            let row = StatsRow {
                algorithm: name,
                n,
                trials,
                moves: aggregate(f_rows.iter())?,
                relative: aggregate(r_rows.iter())?,
            };
            std::fs::write(&output, stats_csv(&[row])).map_err(|e| Error::ParseError {
                line: 0,
                message: format!("cannot write {}: {e}", output.display()),
            })?;
            println!("{}", output.display());
            Ok(())
        }
        Cmd::Bench {
            algo,
            n_min,
            n_max,
            step,
            trials,
            seed,
            output,
            obfuscated,
        } => {
            let seed = pick_seed(seed);
            if step == 0 || n_min > n_max {
                return Err(Error::BadSize {
                    n: n_min,
                    reason: "need step >= 1 and n-min <= n-max",
                });
            }
            let sizes: Vec<usize> = (n_min..=n_max)
                .step_by(step)
                .filter(|&n| algo.accepts(n))
                .collect();
            if sizes.is_empty() {
                return Err(Error::BadSize {
                    n: n_min,
                    reason: "no sizes in range fit this algorithm",
                });
            }
            let (_, points) = bench(algo, obfuscated, &sizes, trials, seed)?;
            std::fs::write(&output, bench_csv(&points)).map_err(|e| Error::ParseError {
                line: 0,
                message: format!("cannot write {}: {e}", output.display()),
            })?;
            println!("{}", output.display());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
