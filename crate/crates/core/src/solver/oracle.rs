//! Slow exhaustive references used to cross-check the production solver.
//!
//! Both searches here are plain backtracking with capacity pruning only; they
//! deliberately share no machinery with the sweep solver so that agreement
//! between the two is meaningful evidence.

use crate::error::{Error, Result};
use crate::matching::{chords_properly_cross, Model};
use crate::necklace::{Color, Necklace};

/// Hard cap for [`oracle_exhaustive`].
pub const ORACLE_MAX_BEADS: u64 = 16;

/// Hard cap for [`longest_alternating_path`].
pub const PATH_MAX_BEADS: u64 = 14;

/// Exhaustive maximum of covered beads over every secant and every set of
/// nested model-respecting pairs. Limited to [`ORACLE_MAX_BEADS`].
pub fn oracle_exhaustive(necklace: &Necklace, model: Model) -> Result<u64> {
    let n = necklace.len();
    if n > ORACLE_MAX_BEADS {
        return Err(Error::ExhaustiveLimit {
            n,
            limit: ORACLE_MAX_BEADS,
        });
    }
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let dense = necklace.to_dense(ORACLE_MAX_BEADS)?;
    let nn = dense.len();
    let mut best = 0usize;
    for c1 in 0..nn {
        // word cut open at c1; the second cut at offset `split` makes
        // arc 1 = w[0..split) and arc 2 = w[split..)
        let w: Vec<Color> = (0..nn).map(|i| dense[(i + c1) % nn]).collect();
        for c2 in c1 + 1..nn {
            let split = c2 - c1;
            chain_search(&w, model, 0, split, nn - 1, 0, &mut best);
        }
    }
    Ok(2 * best as u64)
}

/// Enumerates nested pair chains outermost-first: the next pair must lie
/// strictly inside the previous one on both sides of `split`.
fn chain_search(
    w: &[Color],
    model: Model,
    lo: usize,
    split: usize,
    hi: usize,
    depth: usize,
    best: &mut usize,
) {
    if depth > *best {
        *best = depth;
    }
    if hi < split {
        return;
    }
    let cap = (split - lo).min(hi + 1 - split);
    if depth + cap <= *best {
        return;
    }
    for p in lo..split {
        for q in (split..=hi).rev() {
            if model.pair_ok(w[p], w[q]) {
                chain_search(w, model, p + 1, split, q - 1, depth + 1, best);
            }
        }
    }
}

/// Most vertices on any non-crossing color-alternating path, by exhaustive
/// extension. Limited to [`PATH_MAX_BEADS`].
///
/// Path edges are chords of the circle; consecutive edges share a vertex and
/// never count as crossing. A single bead is a path of one vertex.
pub fn longest_alternating_path(necklace: &Necklace) -> Result<u64> {
    let n = necklace.len();
    if n > PATH_MAX_BEADS {
        return Err(Error::ExhaustiveLimit {
            n,
            limit: PATH_MAX_BEADS,
        });
    }
    let dense = necklace.to_dense(PATH_MAX_BEADS)?;
    let nn = dense.len();
    let mut best = 1usize;
    let mut used = vec![false; nn];
    let mut path: Vec<usize> = Vec::with_capacity(nn);
    for start in 0..nn {
        used[start] = true;
        path.push(start);
        extend_path(&dense, &mut used, &mut path, &mut best);
        path.pop();
        used[start] = false;
    }
    Ok(best as u64)
}

fn extend_path(dense: &[Color], used: &mut [bool], path: &mut Vec<usize>, best: &mut usize) {
    if path.len() > *best {
        *best = path.len();
    }
    let nn = dense.len();
    let last = *path.last().unwrap();
    let want = dense[last].complement();

    // alternation cap: the extension interleaves the two colors
    let mut free_same = 0usize;
    let mut free_want = 0usize;
    for v in 0..nn {
        if !used[v] {
            if dense[v] == want {
                free_want += 1;
            } else {
                free_same += 1;
            }
        }
    }
    let cap = if free_want > free_same {
        2 * free_same + 1
    } else {
        2 * free_want
    };
    if path.len() + cap <= *best {
        return;
    }

    'candidate: for v in 0..nn {
        if used[v] || dense[v] != want {
            continue;
        }
        let new_edge = (last as u64, v as u64);
        for e in path.windows(2) {
            if chords_properly_cross(nn as u64, (e[0] as u64, e[1] as u64), new_edge) {
                continue 'candidate;
            }
        }
        used[v] = true;
        path.push(v);
        extend_path(dense, used, path, best);
        path.pop();
        used[v] = false;
    }
}
