//! Admissible upper bounds on the covered bead count of one rotation.
//!
//! Any nested chain of k model-respecting pairs in a word w reads off a
//! subsequence of 2k beads that w has in common with its own reversal
//! (same-color pairs) or reversed complement (different-color pairs). The
//! subsequence bound is therefore never below the true optimum and can be
//! used to skip rotations that cannot beat the incumbent.

use crate::matching::Model;
use crate::necklace::Color;

/// Longest common subsequence length via the bit-parallel row update.
///
/// State is one bit per position of `a`, spread over machine words; each
/// character of `b` updates the whole row with a carried add and borrow.
pub(crate) fn lcs_len(a: &[Color], b: &[Color]) -> usize {
    let n = a.len();
    if n == 0 || b.is_empty() {
        return 0;
    }
    let words = n.div_ceil(64);
    let mut mask_red = vec![0u64; words];
    let mut mask_blue = vec![0u64; words];
    for (i, &c) in a.iter().enumerate() {
        let bit = 1u64 << (i % 64);
        match c {
            Color::Red => mask_red[i / 64] |= bit,
            Color::Blue => mask_blue[i / 64] |= bit,
        }
    }
    let mut s = vec![!0u64; words];
    let rem = n % 64;
    let tail_mask = if rem == 0 { !0u64 } else { (1u64 << rem) - 1 };
    s[words - 1] = tail_mask;
    for &c in b {
        let m = match c {
            Color::Red => &mask_red,
            Color::Blue => &mask_blue,
        };
        let mut carry = false;
        let mut borrow = false;
        for k in 0..words {
            let u = s[k] & m[k];
            let (add, c1) = s[k].overflowing_add(u);
            let (add, c2) = add.overflowing_add(carry as u64);
            carry = c1 || c2;
            let (sub, b1) = s[k].overflowing_sub(u);
            let (sub, b2) = sub.overflowing_sub(borrow as u64);
            borrow = b1 || b2;
            s[k] = add | sub;
        }
    }
    s[words - 1] &= tail_mask;
    let surviving: u32 = s.iter().map(|w| w.count_ones()).sum();
    n - surviving as usize
}

/// Subsequence upper bound for the rotation `word`: covered beads of any
/// proper matching with the first cut at position 0 never exceed it.
pub fn rotation_upper_bound(word: &[Color], model: Model) -> u64 {
    let partner: Vec<Color> = match model {
        Model::Hetero => word.iter().rev().map(|c| c.complement()).collect(),
        Model::Homo => word.iter().rev().copied().collect(),
    };
    lcs_len(word, &partner) as u64
}

/// Color-count cap for the rotation `word`: the best second-cut placement
/// cannot pair more beads of each color than both sides hold.
pub fn color_split_bound(word: &[Color], model: Model) -> u64 {
    let n = word.len();
    if n < 2 {
        return 0;
    }
    let red_total = word.iter().filter(|&&c| c == Color::Red).count() as u64;
    let mut r1 = 0u64;
    let mut best = 0u64;
    for p in 1..n {
        if word[p - 1] == Color::Red {
            r1 += 1;
        }
        let b1 = p as u64 - r1;
        let r2 = red_total - r1;
        let b2 = (n - p) as u64 - r2;
        let pairs = match model {
            Model::Hetero => r1.min(b2) + b1.min(r2),
            Model::Homo => r1.min(r2) + b1.min(b2),
        };
        best = best.max(pairs);
    }
    2 * best
}
