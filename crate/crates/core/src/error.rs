use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty necklace text")]
    EmptyInput,
    #[error("illegal character {0:?} in necklace text")]
    IllegalChar(char),
    #[error("malformed run-length input: {0}")]
    MalformedRle(String),
    #[error("run length must be at least 1")]
    ZeroRun,
    #[error("bead count overflows the supported range")]
    Overflow,
    #[error("necklace must have at least {min} beads, got {n}")]
    TooSmall { n: u64, min: u64 },
    #[error("necklace has {n} beads, above the dense expansion limit {limit}")]
    ExpansionLimit { n: u64, limit: u64 },
    #[error("witness reconstruction is limited to {limit} beads, got {n}")]
    WitnessLimit { n: u64, limit: u64 },
    #[error("exhaustive search is limited to {limit} beads, got {n}")]
    ExhaustiveLimit { n: u64, limit: u64 },
    #[error("secant cut positions must be distinct and below the bead count")]
    InvalidSecant,
    #[error("necklace is not balanced: {red} red vs {blue} blue")]
    Unbalanced { red: u64, blue: u64 },
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("interval out of range or straddling the secant")]
    BadInterval,
    #[error("invalid parameter: {0}")]
    BadParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
