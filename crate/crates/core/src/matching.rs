//! Secants, matchings across them, and the strict validator.
//!
//! A secant cuts the circle at two distinct positions; cut position `c` lies
//! between beads `c-1 mod N` and `c`. The cuts split the necklace into arc 1
//! (beads `c1 ..= c2-1` clockwise) and arc 2 (beads `c2 ..= c1-1`). A valid
//! matching pairs beads one-from-each-arc, obeys the model's color rule, and
//! its chords are pairwise non-crossing, which for secant-respecting pairs
//! means pairwise nested once the circle is cut open at `c1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::necklace::Necklace;

/// Which colors a matched pair must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// Paired beads must have different colors.
    Hetero,
    /// Paired beads must have the same color.
    Homo,
}

impl Model {
    /// True when the two colors may be paired under this model.
    pub fn pair_ok(self, a: crate::Color, b: crate::Color) -> bool {
        match self {
            Model::Hetero => a != b,
            Model::Homo => a == b,
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Hetero => "hetero",
            Model::Homo => "homo",
        })
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Model> {
        match s {
            "hetero" => Ok(Model::Hetero),
            "homo" => Ok(Model::Homo),
            other => Err(Error::BadParams(format!(
                "unknown model {other:?}, expected hetero or homo"
            ))),
        }
    }
}

/// Two distinct cut positions. Cut `c` sits between beads `c-1 mod N` and `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Secant {
    c1: u64,
    c2: u64,
}

impl Secant {
    pub fn new(c1: u64, c2: u64) -> Result<Secant> {
        if c1 == c2 {
            return Err(Error::InvalidSecant);
        }
        Ok(Secant { c1, c2 })
    }

    pub fn c1(self) -> u64 {
        self.c1
    }

    pub fn c2(self) -> u64 {
        self.c2
    }

    /// True when `bead` lies in arc 1 (beads `c1 ..= c2-1` clockwise) of a
    /// necklace with `n` beads.
    pub fn in_arc1(self, n: u64, bead: u64) -> bool {
        bead_offset(n, self.c1, bead) < arc1_len(n, self.c1, self.c2)
    }

    /// Beads in arc 1 / arc 2.
    pub fn arc_lens(self, n: u64) -> (u64, u64) {
        let a1 = arc1_len(n, self.c1, self.c2);
        (a1, n - a1)
    }
}

fn bead_offset(n: u64, from: u64, bead: u64) -> u64 {
    (bead + n - from % n) % n
}

fn arc1_len(n: u64, c1: u64, c2: u64) -> u64 {
    let d = (c2 + n - c1 % n) % n;
    if d == 0 {
        n
    } else {
        d
    }
}

/// A set of bead pairs across a secant, under one color model.
///
/// Size-0 matchings are valid. The pair list order is preserved; violations
/// refer to positions in this list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub secant: Secant,
    pub model: Model,
    pub pairs: Vec<(u64, u64)>,
}

impl Matching {
    pub fn new(secant: Secant, model: Model, pairs: Vec<(u64, u64)>) -> Matching {
        Matching {
            secant,
            model,
            pairs,
        }
    }

    /// Beads covered by the matching (`2 * pairs.len()`).
    pub fn covered(&self) -> u64 {
        2 * self.pairs.len() as u64
    }

    /// Pairs as `(low, high)` index pairs, sorted by the low index.
    pub fn canonical_pairs(&self) -> Vec<[u64; 2]> {
        let mut pairs: Vec<[u64; 2]> = self
            .pairs
            .iter()
            .map(|&(a, b)| [a.min(b), a.max(b)])
            .collect();
        pairs.sort_unstable();
        pairs
    }

    /// Serializes to the witness interchange form
    /// `{"n":..,"model":..,"secant":[c1,c2],"pairs":[[i,j],..]}`.
    pub fn to_witness_json(&self, n: u64) -> String {
        let doc = WitnessJson {
            n,
            model: self.model,
            secant: [self.secant.c1(), self.secant.c2()],
            pairs: self.canonical_pairs(),
        };
        serde_json::to_string(&doc).expect("witness serialization cannot fail")
    }

    /// Parses the witness interchange form; returns the matching and the
    /// bead count the witness claims to be for.
    pub fn from_witness_json(text: &str) -> Result<(Matching, u64)> {
        let doc: WitnessJson = serde_json::from_str(text)
            .map_err(|e| Error::InvalidMatching(format!("bad witness JSON: {e}")))?;
        let secant = Secant::new(doc.secant[0], doc.secant[1])?;
        let pairs = doc.pairs.iter().map(|p| (p[0], p[1])).collect();
        Ok((Matching::new(secant, doc.model, pairs), doc.n))
    }
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    n: u64,
    model: Model,
    secant: [u64; 2],
    pairs: Vec<[u64; 2]>,
}

/// Why a matching is invalid. Pair numbers refer to `Matching::pairs` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// A bead index (or, with `pair == None`, a secant cut) is `>= N`.
    IndexOutOfRange { pair: Option<usize>, index: u64 },
    /// A bead appears in more than one pair (or twice in one pair).
    DuplicateBead { pairs: (usize, usize), index: u64 },
    /// Both beads of the pair lie in the same arc of the secant.
    NotSecantRespecting { pair: usize },
    /// The pair's colors break the model rule.
    ColorRule { pair: usize },
    /// Two chords properly cross.
    Crossing { pairs: (usize, usize) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::IndexOutOfRange { pair: Some(p), index } => {
                write!(f, "IndexOutOfRange (pair {p}, bead {index})")
            }
            Violation::IndexOutOfRange { pair: None, index } => {
                write!(f, "IndexOutOfRange (secant cut {index})")
            }
            Violation::DuplicateBead { pairs, index } => {
                write!(f, "DuplicateBead (bead {index} in pairs {} and {})", pairs.0, pairs.1)
            }
            Violation::NotSecantRespecting { pair } => {
                write!(f, "NotSecantRespecting (pair {pair})")
            }
            Violation::ColorRule { pair } => write!(f, "ColorRule (pair {pair})"),
            Violation::Crossing { pairs } => {
                write!(f, "Crossing (pairs {} and {})", pairs.0, pairs.1)
            }
        }
    }
}

/// Checks a matching against a necklace.
///
/// Violations are reported in a fixed precedence: index range, duplicate
/// beads, secant respect, color rule, crossing. Within one check, the
/// offender with the smallest pair position wins.
pub fn validate_matching(
    necklace: &Necklace,
    matching: &Matching,
) -> std::result::Result<(), Violation> {
    let n = necklace.len();
    let secant = matching.secant;

    for cut in [secant.c1(), secant.c2()] {
        if cut >= n {
            return Err(Violation::IndexOutOfRange {
                pair: None,
                index: cut,
            });
        }
    }
    for (p, &(a, b)) in matching.pairs.iter().enumerate() {
        for bead in [a, b] {
            if bead >= n {
                return Err(Violation::IndexOutOfRange {
                    pair: Some(p),
                    index: bead,
                });
            }
        }
    }

    let mut seen: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    for (p, &(a, b)) in matching.pairs.iter().enumerate() {
        if a == b {
            return Err(Violation::DuplicateBead {
                pairs: (p, p),
                index: a,
            });
        }
        for bead in [a, b] {
            if let Some(&q) = seen.get(&bead) {
                return Err(Violation::DuplicateBead {
                    pairs: (q, p),
                    index: bead,
                });
            }
            seen.insert(bead, p);
        }
    }

    for (p, &(a, b)) in matching.pairs.iter().enumerate() {
        if secant.in_arc1(n, a) == secant.in_arc1(n, b) {
            return Err(Violation::NotSecantRespecting { pair: p });
        }
    }

    for (p, &(a, b)) in matching.pairs.iter().enumerate() {
        if !matching.model.pair_ok(necklace.bead_at(a), necklace.bead_at(b)) {
            return Err(Violation::ColorRule { pair: p });
        }
    }

    // All pairs straddle the secant, so cut the circle at c1 and demand a
    // nested chain: sorted by left endpoint, right endpoints must descend.
    let mut intervals: Vec<(u64, u64, usize)> = matching
        .pairs
        .iter()
        .enumerate()
        .map(|(p, &(a, b))| {
            let x = bead_offset(n, secant.c1(), a);
            let y = bead_offset(n, secant.c1(), b);
            (x.min(y), x.max(y), p)
        })
        .collect();
    intervals.sort_unstable();
    for w in intervals.windows(2) {
        let (_, r_outer, p_outer) = w[0];
        let (_, r_inner, p_inner) = w[1];
        if r_inner >= r_outer {
            let lo = p_outer.min(p_inner);
            let hi = p_outer.max(p_inner);
            return Err(Violation::Crossing { pairs: (lo, hi) });
        }
    }

    Ok(())
}

/// Geometric chord test: do chords `(a, b)` and `(c, d)` properly cross?
///
/// Chords sharing an endpoint never properly cross. This is the second,
/// independent route to the non-crossing predicate; the validator uses the
/// nested-interval route.
pub fn chords_properly_cross(n: u64, first: (u64, u64), second: (u64, u64)) -> bool {
    let (a, b) = first;
    let (c, d) = second;
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let inside = |x: u64| -> bool {
        // strictly inside the clockwise arc from a to b
        let db = (b + n - a) % n;
        let dx = (x + n - a) % n;
        dx > 0 && dx < db
    };
    inside(c) != inside(d)
}
