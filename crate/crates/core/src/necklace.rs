//! Circular two-colored words stored in run-length form.
//!
//! A [`Necklace`] is a cyclic word over [`Color`] with a distinguished bead 0
//! and clockwise indices `0..N-1`. The run list is kept faithful to the dense
//! expansion: expanding the runs in order yields exactly the dense word, so
//! the first and last run may share a color when bead 0 falls inside a
//! monochromatic stretch of the circle. Cyclic quantities such as [`mono`]
//! account for that wraparound without re-anchoring the word.
//!
//! [`mono`]: Necklace::mono

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Bead color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    /// The other color.
    pub fn complement(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    fn from_char(c: char) -> Result<Color> {
        match c {
            'R' => Ok(Color::Red),
            'B' => Ok(Color::Blue),
            other => Err(Error::IllegalChar(other)),
        }
    }
}

/// One maximal stretch of same-colored beads in the linear run list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Run {
    pub color: Color,
    pub len: u64,
}

/// A circular word over `{Red, Blue}` with bead indices `0..N-1` clockwise.
///
/// Stored as a run list whose in-order expansion equals the dense word.
/// Adjacent runs in the list always have different colors; the wraparound
/// pair may not, and cyclic accessors compensate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Necklace {
    runs: Vec<Run>,
    total: u64,
    red: u64,
}

/// Dense text cutoff used by [`Necklace::render`]: at or below this many
/// beads the text form is the plain `{R,B}` string, above it run-length.
pub const RENDER_DENSE_MAX: u64 = 4096;

impl Necklace {
    /// Builds a necklace from raw runs, merging adjacent same-color runs.
    ///
    /// The run order is kept as given (bead 0 starts the first run); only
    /// adjacent duplicates are merged, the wraparound pair is left alone.
    pub fn from_runs<I>(runs: I) -> Result<Necklace>
    where
        I: IntoIterator<Item = (Color, u64)>,
    {
        let mut merged: Vec<Run> = Vec::new();
        let mut total: u64 = 0;
        let mut red: u64 = 0;
        for (color, len) in runs {
            if len == 0 {
                return Err(Error::ZeroRun);
            }
            total = total.checked_add(len).ok_or(Error::Overflow)?;
            if color == Color::Red {
                red = red.checked_add(len).ok_or(Error::Overflow)?;
            }
            match merged.last_mut() {
                Some(last) if last.color == color => {
                    last.len = last.len.checked_add(len).ok_or(Error::Overflow)?
                }
                _ => merged.push(Run { color, len }),
            }
        }
        if merged.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Necklace {
            runs: merged,
            total,
            red,
        })
    }

    /// Builds a necklace from a dense color sequence.
    pub fn from_dense(beads: &[Color]) -> Result<Necklace> {
        Necklace::from_runs(beads.iter().map(|&c| (c, 1)))
    }

    /// Parses either a dense `{R,B}` string or an `rle:`-prefixed token
    /// stream such as `rle:4R4B` (decimal count, then color letter).
    pub fn parse(text: &str) -> Result<Necklace> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(rle) = text.strip_prefix("rle:") {
            return Necklace::parse_rle(rle);
        }
        let mut beads = Vec::with_capacity(text.len());
        for c in text.chars() {
            beads.push(Color::from_char(c)?);
        }
        Necklace::from_dense(&beads)
    }

    fn parse_rle(body: &str) -> Result<Necklace> {
        if body.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut runs = Vec::new();
        let mut chars = body.chars().peekable();
        while let Some(&c) = chars.peek() {
            if !c.is_ascii_digit() {
                return Err(Error::MalformedRle(format!(
                    "expected a count before {c:?}"
                )));
            }
            let mut count: u64 = 0;
            while let Some(&d) = chars.peek() {
                if let Some(v) = d.to_digit(10) {
                    count = count
                        .checked_mul(10)
                        .and_then(|c| c.checked_add(u64::from(v)))
                        .ok_or(Error::Overflow)?;
                    chars.next();
                } else {
                    break;
                }
            }
            if count == 0 {
                return Err(Error::ZeroRun);
            }
            let color = match chars.next() {
                Some(c) => Color::from_char(c)?,
                None => {
                    return Err(Error::MalformedRle("count without a color".to_string()));
                }
            };
            runs.push((color, count));
        }
        Necklace::from_runs(runs)
    }

    /// Text form: dense for up to [`RENDER_DENSE_MAX`] beads, `rle:` beyond.
    pub fn render(&self) -> String {
        if self.total <= RENDER_DENSE_MAX {
            let mut s = String::with_capacity(self.total as usize);
            for run in &self.runs {
                for _ in 0..run.len {
                    s.push(run.color.as_char());
                }
            }
            s
        } else {
            let mut s = String::from("rle:");
            for run in &self.runs {
                s.push_str(&run.len.to_string());
                s.push(run.color.as_char());
            }
            s
        }
    }

    /// Number of beads.
    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn red_count(&self) -> u64 {
        self.red
    }

    pub fn blue_count(&self) -> u64 {
        self.total - self.red
    }

    /// True when red and blue counts agree.
    pub fn is_balanced(&self) -> bool {
        self.red_count() == self.blue_count()
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// Number of maximal single-color circular arcs.
    ///
    /// Computed on the run list; the wraparound pair is merged arithmetically
    /// when the first and last runs share a color. A monochromatic necklace
    /// has exactly one arc.
    pub fn mono(&self) -> u64 {
        let k = self.runs.len() as u64;
        if k >= 2 && self.runs[0].color == self.runs[k as usize - 1].color {
            k - 1
        } else {
            k
        }
    }

    /// Color of the bead at `index` (0-based, clockwise).
    ///
    /// Runs are scanned with a binary search over prefix sums, so this works
    /// on giant run-length-only instances.
    pub fn bead_at(&self, index: u64) -> Color {
        assert!(index < self.total, "bead index out of range");
        let mut lo = 0usize;
        let mut hi = self.runs.len();
        // prefix(i) = beads before run i; find the run whose span holds index
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.prefix(mid) <= index {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        self.runs[lo].color
    }

    fn prefix(&self, run_idx: usize) -> u64 {
        self.runs[..run_idx].iter().map(|r| r.len).sum()
    }

    /// Dense expansion, up to `limit` beads.
    pub fn to_dense(&self, limit: u64) -> Result<Vec<Color>> {
        if self.total > limit {
            return Err(Error::ExpansionLimit {
                n: self.total,
                limit,
            });
        }
        let mut beads = Vec::with_capacity(self.total as usize);
        for run in &self.runs {
            for _ in 0..run.len {
                beads.push(run.color);
            }
        }
        Ok(beads)
    }

    /// The necklace rotated so that old bead `k` becomes new bead 0.
    ///
    /// Bead `i` of the result equals bead `(i + k) mod N` of `self`.
    pub fn rotated(&self, k: u64) -> Necklace {
        let k = k % self.total;
        if k == 0 {
            return self.clone();
        }
        // Locate the run holding bead k and split it there.
        let mut idx = 0usize;
        let mut before = 0u64;
        while before + self.runs[idx].len <= k {
            before += self.runs[idx].len;
            idx += 1;
        }
        let offset = k - before;
        let mut rotated: Vec<(Color, u64)> = Vec::with_capacity(self.runs.len() + 1);
        let cur = self.runs[idx];
        rotated.push((cur.color, cur.len - offset));
        for run in &self.runs[idx + 1..] {
            rotated.push((run.color, run.len));
        }
        for run in &self.runs[..idx] {
            rotated.push((run.color, run.len));
        }
        if offset > 0 {
            rotated.push((cur.color, offset));
        }
        Necklace::from_runs(rotated).expect("rotation preserves well-formedness")
    }

    /// Every bead replaced by `factor` adjacent copies of itself.
    pub fn replicated(&self, factor: u64) -> Result<Necklace> {
        if factor == 0 {
            return Err(Error::BadParams("replication factor must be >= 1".into()));
        }
        Necklace::from_runs(self.runs.iter().map(|r| (r.color, r.len * factor)))
    }

    /// The mirror image: bead `i` of the result is bead `N-1-i` of `self`.
    pub fn reversed(&self) -> Necklace {
        Necklace::from_runs(self.runs.iter().rev().map(|r| (r.color, r.len)))
            .expect("reversal preserves well-formedness")
    }

    /// Red and blue swapped everywhere.
    pub fn color_swapped(&self) -> Necklace {
        Necklace::from_runs(self.runs.iter().map(|r| (r.color.complement(), r.len)))
            .expect("color swap preserves well-formedness")
    }

    /// Smallest `p >= 1` with `rotated(p) == self`. Always divides `N`.
    ///
    /// Computed on the cyclic run list, so it works without dense expansion.
    pub fn period(&self) -> u64 {
        if self.runs.len() == 1 {
            return 1;
        }
        // Cyclic run sequence anchored at a true boundary: merge the
        // wraparound pair if the linear list starts mid-arc.
        let mut cyc: Vec<Run> = Vec::with_capacity(self.runs.len());
        let k = self.runs.len();
        if self.runs[0].color == self.runs[k - 1].color {
            cyc.push(Run {
                color: self.runs[0].color,
                len: self.runs[0].len + self.runs[k - 1].len,
            });
            cyc.extend_from_slice(&self.runs[1..k - 1]);
        } else {
            cyc.extend_from_slice(&self.runs);
        }
        let m = cyc.len();
        for q in 1..=m {
            if m % q != 0 {
                continue;
            }
            if (0..m).all(|i| cyc[i] == cyc[(i + q) % m]) {
                return cyc[..q].iter().map(|r| r.len).sum();
            }
        }
        unreachable!("q = m always matches");
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for Necklace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Necklace> {
        Necklace::parse(s)
    }
}
