//! Interval DP over one rotation of the word.
//!
//! With the first cut fixed before position 0, a proper matching is exactly a
//! chain of nested pairs of the linear word, outermost to innermost; the
//! second cut then fits in the innermost gap. `best[i][j]`, the most
//! model-respecting nested pairs inside positions `i..=j`, satisfies
//!
//! ```text
//! best[i][j] = max( best[i+1][j],                     drop left
//!                   best[i][j-1],                     drop right
//!                   best[i+1][j-1] + pair(w[i], w[j]) match ends )
//! ```
//!
//! Counting needs only the two previous diagonals; the witness path keeps the
//! full 16-bit table and replays the preferences match > drop left > drop
//! right, which makes reconstruction deterministic.

use crate::matching::Model;
use crate::necklace::Color;

/// Maximum nested model-respecting pairs in `w`, two-diagonal rolling form.
pub(crate) fn max_nested_pairs(w: &[Color], model: Model) -> u64 {
    let n = w.len();
    if n < 2 {
        return 0;
    }
    // prev2 holds lengths len-2, prev holds len-1, indexed by interval start
    let mut prev2 = vec![0u16; n];
    let mut prev = vec![0u16; n];
    let mut cur = vec![0u16; n];
    for len in 2..=n {
        for i in 0..=(n - len) {
            let j = i + len - 1;
            let mut best = prev[i].max(prev[i + 1]);
            if model.pair_ok(w[i], w[j]) {
                best = best.max(prev2[i + 1] + 1);
            }
            cur[i] = best;
        }
        std::mem::swap(&mut prev2, &mut prev);
        std::mem::swap(&mut prev, &mut cur);
    }
    u64::from(prev[0])
}

/// Like [`max_nested_pairs`] but also returns the chain, outermost first,
/// as `(i, j)` positions of `w`.
pub(crate) fn nested_pairs_witness(w: &[Color], model: Model) -> (u64, Vec<(usize, usize)>) {
    let n = w.len();
    if n < 2 {
        return (0, Vec::new());
    }
    let stride = n;
    let mut table = vec![0u16; n * stride];
    let at = |i: usize, j: usize| i * stride + j;
    for len in 2..=n {
        for i in 0..=(n - len) {
            let j = i + len - 1;
            let mut best = table[at(i, j - 1)].max(table[at(i + 1, j)]);
            if model.pair_ok(w[i], w[j]) {
                let inner = if len == 2 { 0 } else { table[at(i + 1, j - 1)] };
                best = best.max(inner + 1);
            }
            table[at(i, j)] = best;
        }
    }

    let mut pairs = Vec::with_capacity(usize::from(table[at(0, n - 1)]));
    let (mut i, mut j) = (0usize, n - 1);
    while i < j {
        let here = table[at(i, j)];
        let inner = if j - i == 1 { 0 } else { table[at(i + 1, j - 1)] };
        if model.pair_ok(w[i], w[j]) && here == inner + 1 {
            pairs.push((i, j));
            i += 1;
            j -= 1;
        } else if table[at(i + 1, j)] == here {
            i += 1;
        } else {
            j -= 1;
        }
    }
    (u64::from(table[at(0, n - 1)]), pairs)
}
