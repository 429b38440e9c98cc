//! Bound curves, per-interval matching efficiency, and batch sweeps.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::constructions::{lambda_star, psi1, psi2, Preset};
use crate::error::{Error, Result};
use crate::matching::{validate_matching, Matching, Model};
use crate::necklace::Necklace;
use crate::solver::{solve, SolveOptions};

/// Asymptotic covered-bead ratios of the two balanced constructions and the
/// dust fraction that achieves the second one.
#[derive(Debug, Clone, Copy)]
pub struct BalancedBounds {
    /// Ceiling forced by the geometric-arcs family: 2/3.
    pub simple: f64,
    /// Ceiling forced by the dust family: 2 - sqrt(2).
    pub dust: f64,
    /// Dust fraction behind `dust`: 1 - 1/sqrt(2).
    pub lambda_star: f64,
}

pub fn balanced_bounds() -> BalancedBounds {
    BalancedBounds {
        simple: 2.0 / 3.0,
        dust: 2.0 - std::f64::consts::SQRT_2,
        lambda_star: lambda_star(),
    }
}

fn normalize_phi(phi: f64) -> Result<f64> {
    if !(0.5..=2.0).contains(&phi) {
        return Err(Error::BadParams(format!("phi {phi} outside [0.5, 2]")));
    }
    Ok(if phi < 1.0 { 1.0 / phi } else { phi })
}

/// Best known ceiling on the covered fraction for red/blue ratio `phi`:
/// `2/(psi2+1)`, the larger of the two candidate curves, identical for both
/// models. Equals `2 - sqrt(2)` at `phi = 1` and exactly `2/3` at `phi = 2`.
/// Ratios below 1 are evaluated at their reciprocal.
pub fn unbalanced_bound(phi: f64, _model: Model) -> Result<f64> {
    let phi = normalize_phi(phi)?;
    Ok(2.0 / (psi2(phi) + 1.0))
}

/// The smaller candidate curve `2/(psi1+1)`, kept accessible so the two can
/// be compared; it is never the bound that [`unbalanced_bound`] reports.
pub fn unbalanced_bound_alternate(phi: f64) -> Result<f64> {
    let phi = normalize_phi(phi)?;
    Ok(2.0 / (psi1(phi) + 1.0))
}

/// Counting-argument bounds on the covered fraction for ratio `phi`:
/// homogeneous `(phi/(1+phi), 1)`, heterogeneous `(1/(1+phi), 2/(1+phi))`.
/// Ratios below 1 are evaluated at their reciprocal.
pub fn trivial_bounds(phi: f64, model: Model) -> Result<(f64, f64)> {
    let phi = normalize_phi(phi)?;
    Ok(match model {
        Model::Homo => (phi / (1.0 + phi), 1.0),
        Model::Hetero => (1.0 / (1.0 + phi), 2.0 / (1.0 + phi)),
    })
}

/// One grid point of the bound curves.
#[derive(Debug, Clone, Copy)]
pub struct BoundRow {
    pub phi: f64,
    pub p: f64,
    pub construction_bound: f64,
    pub trivial_lower: f64,
    pub trivial_upper: f64,
    pub psi1: f64,
    pub psi2: f64,
    pub model: Model,
}

/// Evaluates the bound curves on an inclusive grid over `[1, 2]`.
pub fn bound_table(phi_from: f64, phi_to: f64, step: f64, model: Model) -> Result<Vec<BoundRow>> {
    if !(1.0..=2.0).contains(&phi_from) || !(1.0..=2.0).contains(&phi_to) || phi_from > phi_to {
        return Err(Error::BadParams(format!(
            "grid [{phi_from}, {phi_to}] must lie inside [1, 2]"
        )));
    }
    if !(step > 0.0) {
        return Err(Error::BadParams("step must be positive".into()));
    }
    let count = ((phi_to - phi_from) / step + 1e-9).floor() as usize + 1;
    let mut rows = Vec::with_capacity(count);
    for k in 0..count {
        let phi = (phi_from + k as f64 * step).min(phi_to);
        let (trivial_lower, trivial_upper) = trivial_bounds(phi, model)?;
        rows.push(BoundRow {
            phi,
            p: phi / (1.0 + phi),
            construction_bound: unbalanced_bound(phi, model)?,
            trivial_lower,
            trivial_upper,
            psi1: psi1(phi),
            psi2: psi2(phi),
            model,
        });
    }
    Ok(rows)
}

pub fn bound_table_csv(rows: &[BoundRow]) -> String {
    let mut out = String::from("phi,p,construction_bound,trivial_lower,trivial_upper,psi1,psi2,model\n");
    for r in rows {
        writeln!(
            out,
            "{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{}",
            r.phi, r.p, r.construction_bound, r.trivial_lower, r.trivial_upper, r.psi1, r.psi2, r.model
        )
        .expect("writing to a String cannot fail");
    }
    out
}

/// How well a matching uses one stretch of beads: the covered fraction of
/// `I` together with the arc its partners span on the other side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EfficiencyReport {
    /// The queried interval, as (first bead, length), clockwise.
    pub interval: (u64, u64),
    /// Arc spanned by the partners of the interval's first and last matched
    /// beads, as (first bead, length); absent when nothing in `I` is
    /// matched.
    pub partner_span: Option<(u64, u64)>,
    pub covered_in_union: u64,
    pub union_size: u64,
    pub eff: f64,
}

/// Evaluates the efficiency of `matching` on the interval of `len` beads
/// starting at `start` (clockwise). The interval must lie inside one arc of
/// the matching's secant; the partner span always lies inside the other, so
/// the union is disjoint and `eff = covered_in_union / union_size`. An
/// interval without matched beads scores 0.
pub fn efficiency(
    necklace: &Necklace,
    matching: &Matching,
    start: u64,
    len: u64,
) -> Result<EfficiencyReport> {
    validate_matching(necklace, matching).map_err(|v| Error::InvalidMatching(v.to_string()))?;
    let n = necklace.len();
    if len == 0 || start >= n || len > n {
        return Err(Error::BadInterval);
    }
    let c1 = matching.secant.c1();
    let (len1, _) = matching.secant.arc_lens(n);
    // positions relative to the first cut; both arcs are contiguous there
    let rel = |bead: u64| (bead + n - c1) % n;
    let lo = rel(start);
    let hi = lo + len; // exclusive
    let inside_one_arc = hi <= len1 || (lo >= len1 && hi <= n);
    if !inside_one_arc {
        return Err(Error::BadInterval);
    }

    // matched beads inside the interval, tracked in relative coordinates
    let mut first: Option<(u64, u64)> = None; // (rel position, partner)
    let mut last: Option<(u64, u64)> = None;
    let mut matched_inside = 0u64;
    for &(a, b) in &matching.pairs {
        for (bead, partner) in [(a, b), (b, a)] {
            let r = rel(bead);
            if r >= lo && r < hi {
                matched_inside += 1;
                if first.map_or(true, |(fr, _)| r < fr) {
                    first = Some((r, partner));
                }
                if last.map_or(true, |(lr, _)| r > lr) {
                    last = Some((r, partner));
                }
            }
        }
    }

    let (first, last) = match (first, last) {
        (Some(f), Some(l)) => (f, l),
        _ => {
            return Ok(EfficiencyReport {
                interval: (start, len),
                partner_span: None,
                covered_in_union: 0,
                union_size: len,
                eff: 0.0,
            })
        }
    };

    // partners appear in reverse order on the other arc, so the span runs
    // from the last bead's partner to the first bead's
    let span_lo = rel(last.1).min(rel(first.1));
    let span_hi = rel(last.1).max(rel(first.1));
    let span_len = span_hi - span_lo + 1;
    let mut covered = matched_inside;
    for &(a, b) in &matching.pairs {
        for bead in [a, b] {
            let r = rel(bead);
            if r >= span_lo && r <= span_hi {
                covered += 1;
            }
        }
    }
    let union_size = len + span_len;
    Ok(EfficiencyReport {
        interval: (start, len),
        partner_span: Some(((c1 + span_lo) % n, span_len)),
        covered_in_union: covered,
        union_size,
        eff: covered as f64 / union_size as f64,
    })
}

/// Splits the secant's first arc into `chunks` near-equal intervals and
/// reports each one's efficiency. The unions of the reports are pairwise
/// disjoint and jointly hold every covered bead, so the best report is
/// always at least as efficient as the matching is globally (covered/N).
pub fn efficiency_profile(
    necklace: &Necklace,
    matching: &Matching,
    chunks: u64,
) -> Result<Vec<EfficiencyReport>> {
    let n = necklace.len();
    let (len1, _) = matching.secant.arc_lens(n);
    let chunks = chunks.clamp(1, len1);
    let base = len1 / chunks;
    let extra = len1 % chunks;
    let c1 = matching.secant.c1();
    let mut reports = Vec::with_capacity(chunks as usize);
    let mut offset = 0u64;
    for k in 0..chunks {
        let len = base + u64::from(k < extra);
        reports.push(efficiency(necklace, matching, (c1 + offset) % n, len)?);
        offset += len;
    }
    Ok(reports)
}

fn default_threads() -> usize {
    1
}

fn default_pruning() -> bool {
    true
}

fn default_max_n() -> u64 {
    crate::solver::DEFAULT_MAX_BEADS
}

/// A batch experiment: either solve a list of generated instances or
/// evaluate the bound curves on a grid. Read from JSON with a `kind` tag.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SweepSpec {
    Solve {
        presets: Vec<String>,
        models: Vec<Model>,
        #[serde(default = "default_threads")]
        threads: usize,
        #[serde(default = "default_pruning")]
        pruning: bool,
        #[serde(default = "default_max_n")]
        max_n: u64,
    },
    Bounds {
        phi_from: f64,
        phi_to: f64,
        step: f64,
        model: Model,
    },
}

/// Runs the sweep and renders its CSV. Solve sweeps emit one row per
/// (preset, model) in grid order; instances the solver refuses (too large to
/// expand, witness table too big) become rows with status `skipped` instead
/// of disappearing. The `runtime_ms` column reports wall time and is the
/// one non-reproducible column; everything else is deterministic.
pub fn sweep(spec: &SweepSpec) -> Result<String> {
    match spec {
        SweepSpec::Bounds {
            phi_from,
            phi_to,
            step,
            model,
        } => Ok(bound_table_csv(&bound_table(
            *phi_from, *phi_to, *step, *model,
        )?)),
        SweepSpec::Solve {
            presets,
            models,
            threads,
            pruning,
            max_n,
        } => {
            let mut out =
                String::from("preset,s,lambda,phi,N,model,covered,ratio,mono,runtime_ms,status\n");
            for preset_text in presets {
                let preset = Preset::parse(preset_text)?;
                let built = preset.build();
                for &model in models {
                    let row = solve_row(&preset, &built, model, *threads, *pruning, *max_n);
                    out.push_str(&row);
                    out.push('\n');
                }
            }
            Ok(out)
        }
    }
}

fn solve_row(
    preset: &Preset,
    built: &Result<Necklace>,
    model: Model,
    threads: usize,
    pruning: bool,
    max_n: u64,
) -> String {
    let lambda = preset
        .lambda()
        .map(|l| format!("{l:.6}"))
        .unwrap_or_default();
    let phi = preset.phi().map(|p| format!("{p:.6}")).unwrap_or_default();
    let head = format!("{},{},{lambda},{phi}", preset.name(), preset.s());
    let necklace = match built {
        Ok(necklace) => necklace,
        Err(_) => return format!("{head},,{model},,,,,skipped"),
    };
    let opts = SolveOptions {
        pruning,
        want_witness: false,
        rotation_limit: None,
        worker_count: threads,
        max_beads: max_n,
    };
    let started = Instant::now();
    match solve(necklace, model, &opts) {
        Ok(result) => {
            let ms = started.elapsed().as_millis();
            format!(
                "{head},{},{model},{},{:.6},{},{ms},ok",
                necklace.len(),
                result.covered,
                result.ratio(),
                necklace.mono(),
            )
        }
        Err(_) => format!(
            "{head},{},{model},,,{},,skipped",
            necklace.len(),
            necklace.mono()
        ),
    }
}
