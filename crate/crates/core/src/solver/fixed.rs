//! Best matching for one fixed secant.
//!
//! With both cuts pinned, nested pairs walk arc 1 forward while their
//! partners walk arc 2 backward, so the optimum is a longest common
//! subsequence between arc 1 and the reversed arc 2 under the model's color
//! predicate.

use crate::error::{Error, Result};
use crate::matching::{Matching, Model, Secant};
use crate::necklace::{Color, Necklace};
use crate::solver::DEFAULT_MAX_BEADS;

/// Maximum matching across `secant`, with a deterministic witness.
///
/// The backtrack prefers matching the current ends, then advancing arc 1,
/// then advancing arc 2, mirroring the rotation solver's preferences.
pub fn solve_fixed_secant(
    necklace: &Necklace,
    secant: Secant,
    model: Model,
) -> Result<Matching> {
    let n = necklace.len();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    if secant.c1() >= n || secant.c2() >= n {
        return Err(Error::InvalidSecant);
    }
    let dense = necklace.to_dense(DEFAULT_MAX_BEADS)?;
    let (len1, len2) = secant.arc_lens(n);
    let (len1, len2) = (len1 as usize, len2 as usize);
    let nn = dense.len();
    let c1 = secant.c1() as usize;
    let c2 = secant.c2() as usize;

    // arc 1 clockwise from c1; arc 2 counterclockwise from c1 (reversed)
    let x: Vec<Color> = (0..len1).map(|t| dense[(c1 + t) % nn]).collect();
    let y_beads: Vec<usize> = (0..len2).map(|t| (c2 + len2 - 1 - t) % nn).collect();
    let y: Vec<Color> = y_beads.iter().map(|&b| dense[b]).collect();

    let stride = len2 + 1;
    let mut dp = vec![0u16; (len1 + 1) * stride];
    for a in 1..=len1 {
        for b in 1..=len2 {
            let mut best = dp[(a - 1) * stride + b].max(dp[a * stride + b - 1]);
            if model.pair_ok(x[a - 1], y[b - 1]) {
                best = best.max(dp[(a - 1) * stride + b - 1] + 1);
            }
            dp[a * stride + b] = best;
        }
    }

    let mut pairs: Vec<(u64, u64)> = Vec::new();
    let (mut a, mut b) = (len1, len2);
    while a > 0 && b > 0 {
        let here = dp[a * stride + b];
        if model.pair_ok(x[a - 1], y[b - 1]) && here == dp[(a - 1) * stride + b - 1] + 1 {
            let bead1 = (c1 + (a - 1)) % nn;
            let bead2 = y_beads[b - 1];
            pairs.push((bead1 as u64, bead2 as u64));
            a -= 1;
            b -= 1;
        } else if dp[(a - 1) * stride + b] == here {
            a -= 1;
        } else {
            b -= 1;
        }
    }
    pairs.reverse();

    let matching = Matching::new(secant, model, pairs);
    debug_assert_eq!(
        crate::matching::validate_matching(necklace, &matching),
        Ok(())
    );
    Ok(matching)
}
