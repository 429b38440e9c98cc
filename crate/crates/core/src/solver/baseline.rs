//! Constructive half-coverage baselines for balanced necklaces.
//!
//! These build a proper matching directly, without search, and come with a
//! size guarantee: `ceil(n/2)` pairs in the hetero model and `floor(n/2)`
//! pairs in the homo model, where `n` is the per-color bead count.

use crate::error::{Error, Result};
use crate::matching::{Matching, Model, Secant};
use crate::necklace::{Color, Necklace};
use crate::solver::DEFAULT_MAX_BEADS;

/// Builds a proper matching of guaranteed size on a balanced necklace.
///
/// Hetero: cut the circle into two arcs of `n` beads each. If the first arc
/// holds `k` beads of its majority color, the second arc holds exactly `k`
/// beads of the opposite color, and pairing them first-to-last is cross-free.
/// Majority means `k >= ceil(n/2)`, so that many pairs always exist.
///
/// Homo: slide the cut until the leading arc of `n` beads holds exactly
/// `floor(n/2)` blue beads. Such a cut always exists because the count
/// changes by at most one per step and opposite cuts sum to `n`. Blue beads
/// then pair across the secant first-to-last, and any red beads left between
/// the cuts and the blue block extend the matching for free.
///
/// Fails with [`Error::Unbalanced`] when the color counts differ.
pub fn baseline_half(necklace: &Necklace, model: Model) -> Result<Matching> {
    let red = necklace.red_count();
    let blue = necklace.blue_count();
    if red != blue {
        return Err(Error::Unbalanced { red, blue });
    }
    if necklace.len() < 2 {
        return Err(Error::TooSmall {
            n: necklace.len(),
            min: 2,
        });
    }
    let word = necklace.to_dense(DEFAULT_MAX_BEADS)?;
    let matching = match model {
        Model::Hetero => hetero_majority(&word),
        Model::Homo => homo_blue_split(&word),
    };
    debug_assert_eq!(
        crate::matching::validate_matching(necklace, &matching),
        Ok(())
    );
    Ok(matching)
}

fn hetero_majority(word: &[Color]) -> Matching {
    let nn = word.len();
    let n = nn / 2;
    let reds_in_first = word[..n].iter().filter(|&&c| c == Color::Red).count();
    let major = if 2 * reds_in_first >= n {
        Color::Red
    } else {
        Color::Blue
    };
    let left: Vec<u64> = (0..n).filter(|&i| word[i] == major).map(|i| i as u64).collect();
    let right: Vec<u64> = (n..nn)
        .filter(|&i| word[i] == major.complement())
        .map(|i| i as u64)
        .collect();
    // both arcs hold n beads and each color has n beads in total, so the
    // second arc has exactly as many minority-color beads as the first has
    // majority-color beads
    debug_assert_eq!(left.len(), right.len());
    let pairs: Vec<(u64, u64)> = left.iter().zip(right.iter().rev()).map(|(&a, &b)| (a, b)).collect();
    Matching::new(
        Secant::new(0, n as u64).unwrap(),
        Model::Hetero,
        pairs,
    )
}

fn homo_blue_split(word: &[Color]) -> Matching {
    let nn = word.len();
    let n = nn / 2;
    let target = n / 2;
    let blues_in = |from: usize| -> usize {
        (from..from + n)
            .filter(|&i| word[i % nn] == Color::Blue)
            .count()
    };
    let cut = (0..nn)
        .find(|&c| blues_in(c) == target)
        .expect("a window with floor(n/2) blue beads always exists");

    // positions relative to the cut; bead index = (cut + offset) mod nn
    let bead = |offset: usize| ((cut + offset) % nn) as u64;
    let color = |offset: usize| word[(cut + offset) % nn];

    let left_blue: Vec<usize> = (0..n).filter(|&o| color(o) == Color::Blue).collect();
    let right_blue: Vec<usize> = (n..nn).filter(|&o| color(o) == Color::Blue).collect();
    debug_assert_eq!(left_blue.len(), target);
    debug_assert!(right_blue.len() >= target);

    let mut pairs: Vec<(u64, u64)> = Vec::new();
    for (i, &a) in left_blue.iter().enumerate() {
        // the i-th blue from the cut pairs with the i-th blue counted
        // backwards, keeping every pair nested inside the previous one
        let b = right_blue[target - 1 - i];
        pairs.push((bead(a), bead(b)));
    }

    if target > 0 {
        // red beads outside the outermost blue pair still nest around it;
        // the second arc may hold unused blue beads out there, so filter
        let outer_right: Vec<usize> = (right_blue[target - 1] + 1..nn)
            .filter(|&o| color(o) == Color::Red)
            .collect();
        let outer = left_blue[0].min(outer_right.len());
        for i in 0..outer {
            pairs.push((bead(left_blue[0] - 1 - i), bead(outer_right[i])));
        }
        // and red beads between the innermost blue pair and the far cut
        // nest inside it
        let inner_left = n - left_blue[target - 1] - 1;
        let inner_right = right_blue[0] - n;
        for i in 0..inner_left.min(inner_right) {
            pairs.push((bead(left_blue[target - 1] + 1 + i), bead(right_blue[0] - 1 - i)));
        }
    } else {
        // no blue pair required; reds still pair across the cut when both
        // arcs have some
        let left_red: Vec<usize> = (0..n).filter(|&o| color(o) == Color::Red).collect();
        let right_red: Vec<usize> = (n..nn).filter(|&o| color(o) == Color::Red).collect();
        let take = left_red.len().min(right_red.len());
        for i in 0..take {
            pairs.push((bead(left_red[i]), bead(right_red[right_red.len() - 1 - i])));
        }
    }

    let pairs = pairs
        .into_iter()
        .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
        .collect();
    Matching::new(
        Secant::new(cut as u64, ((cut + n) % nn) as u64).unwrap(),
        Model::Homo,
        pairs,
    )
}
