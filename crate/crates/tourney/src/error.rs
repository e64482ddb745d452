use crate::rail::Rail;

/// Errors surfaced by cover validation, rail surgery, generation, and
/// the text format.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum Error {
    #[error("cell {cell} has degree {degree}, expected 2")]
    NotTwoRegular { cell: usize, degree: usize },
    #[error("edge ({u}, {v}) is not a knight's move")]
    IllegalEdge { u: usize, v: usize },
    #[error("expected a single cycle, found {cycles}")]
    NotConnected { cycles: usize },
    #[error("rail at cell {top} with moves {primary}/{cross} leaves the board")]
    OffBoard { top: usize, primary: u8, cross: u8 },
    #[error("rail moves must be distinct downward moves (got {primary}/{cross})")]
    InvalidRail { primary: u8, cross: u8 },
    #[error("rail {0:?} is not present in the graph")]
    RailNotPresent(Rail),
    #[error("board size {n} not supported: {reason}")]
    BadSize { n: usize, reason: &'static str },
    #[error("gave up after {attempts} attempts")]
    AttemptsExhausted { attempts: usize },
    #[error("network failed to settle within {epochs} sweeps")]
    EpochLimit { epochs: usize },
    #[error("join stalled at {size} cycles without reaching a tour")]
    JoinIncomplete { size: usize },
    #[error("obfuscation failed to recover a tour after {attempts} attempts")]
    ObfuscationFailed { attempts: usize },
    #[error("cannot aggregate an empty distribution set")]
    EmptySet,
    #[error("parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
