//! Separated matchings on circular two-colored words.
//!
//! A necklace is a cyclic word over `{Red, Blue}`. A secant cuts the circle
//! at two positions; a matching pairs beads across the secant so that the
//! chords are pairwise non-crossing. This crate provides:
//!
//! * the data model ([`Necklace`], [`Secant`], [`Matching`]) with a strict
//!   validator ([`validate_matching`]),
//! * an exact solver ([`solve`]) that sweeps cut positions and runs an
//!   interval DP per rotation, with a bit-parallel subsequence bound used
//!   to skip hopeless rotations,
//! * slow exhaustive references ([`oracle_exhaustive`],
//!   [`longest_alternating_path`]) for cross-checking,
//! * generators for structured hard instances ([`gen_simple`], [`gen_dust`],
//!   [`gen_unbalanced`]),
//! * closed-form bound tables and per-interval efficiency reports
//!   ([`analysis`]).

pub mod analysis;
pub mod constructions;
mod error;
pub mod matching;
pub mod necklace;
pub mod solver;

pub use error::{Error, Result};
pub use matching::{validate_matching, Matching, Model, Secant, Violation};
pub use necklace::{Color, Necklace};
pub use solver::{
    baseline_half, color_split_bound, longest_alternating_path, oracle_exhaustive,
    rotation_upper_bound, solve, solve_fixed_secant, SolveOptions, SolveResult,
};
pub use constructions::{
    dust_mono_bound, gen_dust, gen_simple, gen_unbalanced, lambda_star, solve_unbalanced_params,
    DustLevel, DustParams, Preset, ScaleProfile, SimpleParams, UnbalancedOutcome, UnbalancedParams,
};
