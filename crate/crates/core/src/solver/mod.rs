//! Maximum-coverage search over all secants.
//!
//! The driver rotates the word once per distinct cut position and runs an
//! interval dynamic program on each rotation; the best rotation, together
//! with a reconstructed second cut, yields the optimal secant and matching.
//! Cheap per-rotation upper bounds let most rotations be skipped once a good
//! value is known, and the bound analysis is organized so that the reported
//! result and counters never depend on the pruning flag or the worker count.

mod baseline;
mod bound;
mod fixed;
mod interval;
mod oracle;

pub use baseline::baseline_half;
pub use bound::{color_split_bound, rotation_upper_bound};
pub use fixed::solve_fixed_secant;
pub use oracle::{longest_alternating_path, oracle_exhaustive};

use crate::error::{Error, Result};
use crate::matching::{Matching, Model, Secant};
use crate::necklace::{Color, Necklace};

/// Default cap on dense expansion; larger necklaces are rejected unless the
/// caller raises [`SolveOptions::max_beads`].
pub const DEFAULT_MAX_BEADS: u64 = 4096;

/// Hard cap on witness reconstruction, which keeps a full quadratic DP table.
pub const WITNESS_MAX_BEADS: u64 = 8192;

/// Rotations are processed in fixed blocks of this size: bounds first, then
/// a skip/solve decision per rotation against the best value known at the
/// block boundary. Decisions never depend on results from the same block,
/// which is what makes the examined/pruned split reproducible.
const BLOCK: usize = 32;

/// Knobs for [`solve`]. `Default` gives a single-threaded, pruned search
/// that reconstructs a witness and refuses necklaces beyond
/// [`DEFAULT_MAX_BEADS`] beads.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Skip rotations whose upper bound cannot beat the best value seen at
    /// the last block boundary. Off means every rotation is solved, but the
    /// reported result and counters are identical either way.
    pub pruning: bool,
    /// Reconstruct the optimal matching, not just its size.
    pub want_witness: bool,
    /// Cap on how many distinct rotations are considered. The word's
    /// primitive period already limits the sweep; this lowers it further.
    pub rotation_limit: Option<u64>,
    /// Worker threads for the per-rotation dynamic programs.
    pub worker_count: usize,
    /// Dense-expansion limit for this call.
    pub max_beads: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            pruning: true,
            want_witness: true,
            rotation_limit: None,
            worker_count: 1,
            max_beads: DEFAULT_MAX_BEADS,
        }
    }
}

/// Outcome of [`solve`]: the maximum number of covered beads over every
/// secant and proper matching, plus search accounting.
///
/// `rotations_examined` counts rotations whose dynamic program the bound
/// analysis required; `rotations_pruned` counts the rest. The two always sum
/// to the number of distinct rotations considered. With pruning disabled the
/// skipped rotations are solved anyway (and checked against the bound), but
/// the counters still report the analysis, so they are comparable across
/// runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub n: u64,
    pub n_red: u64,
    pub n_blue: u64,
    pub model: Model,
    pub covered: u64,
    pub witness: Option<Matching>,
    pub rotations_examined: u64,
    pub rotations_pruned: u64,
}

impl SolveResult {
    /// Fraction of beads covered, in `[0, 1]`.
    pub fn ratio(&self) -> f64 {
        self.covered as f64 / self.n as f64
    }

    /// Serializes to the stable single-line JSON shape used by the CLI.
    /// Requires a witness; solve with `want_witness` when JSON is needed.
    pub fn to_json(&self) -> String {
        #[derive(serde::Serialize)]
        struct Out<'a> {
            n_red: u64,
            n_blue: u64,
            #[serde(rename = "N")]
            n: u64,
            model: Model,
            covered: u64,
            ratio: String,
            secant: [u64; 2],
            pairs: &'a [[u64; 2]],
            rotations_examined: u64,
            rotations_pruned: u64,
        }
        let witness = self
            .witness
            .as_ref()
            .expect("serializing a result that was solved without a witness");
        let pairs = witness.canonical_pairs();
        let out = Out {
            n_red: self.n_red,
            n_blue: self.n_blue,
            n: self.n,
            model: self.model,
            covered: self.covered,
            ratio: format!("{:.6}", self.ratio()),
            secant: [witness.secant.c1(), witness.secant.c2()],
            pairs: &pairs,
            rotations_examined: self.rotations_examined,
            rotations_pruned: self.rotations_pruned,
        };
        serde_json::to_string(&out).expect("result serialization cannot fail")
    }
}

/// Computes the maximum number of covered beads over all secants and proper
/// matchings of the given model, with a deterministic optimal witness.
///
/// For each cut position `c` (one secant endpoint), the word is rotated so
/// the cut sits at position 0 and an interval DP computes the largest nested
/// chain of model-colored pairs; the second endpoint is implied by the
/// innermost pair. Only one primitive period's worth of cuts is swept, since
/// rotating by the period repeats the word.
///
/// Ties between rotations go to the smallest cut index, and the backtrack
/// prefers matching both ends over dropping the left end over dropping the
/// right, so equal inputs always produce byte-equal results, independent of
/// `worker_count` and `pruning`.
pub fn solve(necklace: &Necklace, model: Model, opts: &SolveOptions) -> Result<SolveResult> {
    let n = necklace.len();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let word = necklace.to_dense(opts.max_beads)?;
    if opts.want_witness && n > WITNESS_MAX_BEADS {
        return Err(Error::WitnessLimit {
            n,
            limit: WITNESS_MAX_BEADS,
        });
    }

    let rotations = necklace
        .period()
        .min(opts.rotation_limit.unwrap_or(u64::MAX))
        .max(1);
    let workers = opts.worker_count.max(1);

    let mut examined = 0u64;
    let mut pruned = 0u64;
    // best value among examined rotations at the last block boundary; this
    // is what skip decisions compare against
    let mut class_best = 0u64;
    // running optimum for the final answer: (covered, cut index)
    let mut best: Option<(u64, u64)> = None;

    let mut block_start = 0u64;
    while block_start < rotations {
        let block_end = (block_start + BLOCK as u64).min(rotations);
        let cuts: Vec<u64> = (block_start..block_end).collect();

        let bounds: Vec<u64> = cuts
            .iter()
            .map(|&c| {
                let w = rotate(&word, c);
                rotation_upper_bound(&w, model).min(color_split_bound(&w, model))
            })
            .collect();
        let keep: Vec<bool> = bounds.iter().map(|&u| u > class_best).collect();

        let todo: Vec<usize> = if opts.pruning {
            (0..cuts.len()).filter(|&i| keep[i]).collect()
        } else {
            (0..cuts.len()).collect()
        };
        let values = dp_values(&word, model, &cuts, &todo, workers);

        for i in 0..cuts.len() {
            if keep[i] {
                examined += 1;
                class_best = class_best.max(values[i].unwrap());
            } else {
                pruned += 1;
            }
            // with pruning on, only examined rotations compete; with it off
            // all do, and the winner is provably the same either way because
            // the earliest optimal rotation always beats the bound test
            let candidate = if opts.pruning && !keep[i] {
                None
            } else {
                values[i]
            };
            if let Some(v) = candidate {
                debug_assert!(v <= bounds[i], "upper bound must be admissible");
                if best.map_or(true, |(bv, _)| v > bv) {
                    best = Some((v, cuts[i]));
                }
            }
        }
        block_start = block_end;
    }

    let (covered, best_cut) = best.unwrap_or((0, 0));
    let witness = if opts.want_witness {
        Some(build_witness(&word, model, best_cut, covered))
    } else {
        None
    };
    if let Some(w) = &witness {
        debug_assert_eq!(crate::matching::validate_matching(necklace, w), Ok(()));
    }

    Ok(SolveResult {
        n,
        n_red: necklace.red_count(),
        n_blue: necklace.blue_count(),
        model,
        covered,
        witness,
        rotations_examined: examined,
        rotations_pruned: pruned,
    })
}

fn rotate(word: &[Color], c: u64) -> Vec<Color> {
    let c = c as usize;
    let mut w = Vec::with_capacity(word.len());
    w.extend_from_slice(&word[c..]);
    w.extend_from_slice(&word[..c]);
    w
}

fn dp_value(word: &[Color], model: Model, c: u64) -> u64 {
    2 * interval::max_nested_pairs(&rotate(word, c), model)
}

/// Runs the interval DP for the requested block entries, farming them out to
/// `workers` threads. Each value is a pure function of the input, so the
/// assignment of entries to threads cannot affect the results.
fn dp_values(
    word: &[Color],
    model: Model,
    cuts: &[u64],
    todo: &[usize],
    workers: usize,
) -> Vec<Option<u64>> {
    let mut values: Vec<Option<u64>> = vec![None; cuts.len()];
    let workers = workers.min(todo.len());
    if workers <= 1 {
        for &i in todo {
            values[i] = Some(dp_value(word, model, cuts[i]));
        }
        return values;
    }
    let parts: Vec<Vec<(usize, u64)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|id| {
                scope.spawn(move || {
                    todo.iter()
                        .enumerate()
                        .filter(|(slot, _)| slot % workers == id)
                        .map(|(_, &i)| (i, dp_value(word, model, cuts[i])))
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("solver worker panicked"))
            .collect()
    });
    for part in parts {
        for (i, v) in part {
            values[i] = Some(v);
        }
    }
    values
}

/// Rebuilds the optimal matching for the winning cut. The second cut goes
/// just past the innermost pair's left end, which every pair of the nested
/// chain straddles; with no pairs at all it lands on the next bead over.
fn build_witness(word: &[Color], model: Model, cut: u64, covered: u64) -> Matching {
    let n = word.len() as u64;
    let w = rotate(word, cut);
    let (pairs_found, chain) = interval::nested_pairs_witness(&w, model);
    debug_assert_eq!(2 * pairs_found, covered);
    let second = chain.last().map_or(1, |&(i, _)| i as u64 + 1);
    let pairs = chain
        .iter()
        .map(|&(i, j)| ((i as u64 + cut) % n, (j as u64 + cut) % n))
        .collect();
    Matching::new(
        Secant::new(cut, (cut + second) % n).expect("offset is never zero"),
        model,
        pairs,
    )
}
