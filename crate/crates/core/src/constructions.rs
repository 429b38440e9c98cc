//! Generators for structured necklace families.
//!
//! Three families are provided. `gen_simple` lays out geometrically growing
//! monochromatic arcs. `gen_dust` builds arcs whose tiny sub-intervals each
//! end in a sprinkle of opposite-colored beads (the dust), which is what
//! keeps every secant inefficient. `gen_unbalanced` is the asymmetric dust
//! variant driven by a four-variable parameter system.
//!
//! `paper` presets use the full-strength exponents and are far too large to
//! expand densely; they exist for structural statistics on the run list.
//! `desk` presets shrink the exponents so the solver can take them.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::matching::Model;
use crate::necklace::{Color, Necklace};

/// Generators refuse to build more runs than this (2^23); beyond it the run
/// list itself stops fitting comfortably in memory.
pub(crate) const RUN_LIMIT: u64 = 1 << 23;

fn pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow)
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}

/// The dust fraction at which the balanced dust construction's bound is
/// tightest: `1 - 1/sqrt(2)`, the root of `2x^2 - 4x + 1` below 1/2.
pub fn lambda_star() -> f64 {
    1.0 - std::f64::consts::FRAC_1_SQRT_2
}

/// Parameters for the geometric-arcs family.
#[derive(Debug, Clone, Copy)]
pub struct SimpleParams {
    pub s: u32,
}

/// Builds the geometric-arcs necklace for scale `s`: for each level
/// `i = 1..=s` there are `s^(s-i)` red/blue arc pairs of arc length `s^i`,
/// laid out clockwise, red arc first. The result has `2*s^(s+1)` beads,
/// balanced by construction, with `2 * sum(s^(s-i))` monochromatic arcs.
pub fn gen_simple(params: &SimpleParams) -> Result<Necklace> {
    let s = params.s;
    if s < 2 {
        return Err(bad("simple construction needs s >= 2"));
    }
    let mut run_count = 0u64;
    for i in 1..=s {
        run_count = run_count
            .checked_add(2 * pow(s as u64, s - i)?)
            .ok_or(Error::Overflow)?;
    }
    if run_count > RUN_LIMIT {
        return Err(bad(format!(
            "simple construction for s={s} needs {run_count} runs (limit {RUN_LIMIT})"
        )));
    }
    let mut runs = Vec::with_capacity(run_count as usize);
    for i in 1..=s {
        let arc = pow(s as u64, i)?;
        for _ in 0..pow(s as u64, s - i)? {
            runs.push((Color::Red, arc));
            runs.push((Color::Blue, arc));
        }
    }
    Necklace::from_runs(runs)
}

/// One level of a dust construction: `arc_pairs` red/blue arc pairs, each
/// arc `arc_len` beads long and divided into tiny intervals of `tiny_len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DustLevel {
    pub arc_pairs: u64,
    pub arc_len: u64,
    pub tiny_len: u64,
}

/// Parameters for the balanced dust family: the level layout plus the dust
/// fraction. Each tiny interval's final `floor(lambda * tiny_len)` beads
/// take the opposite color.
#[derive(Debug, Clone)]
pub struct DustParams {
    pub levels: Vec<DustLevel>,
    pub lambda: f64,
}

impl DustParams {
    /// The published proportions for scale `s`: level `i` has `s^(2s-i)`
    /// arc pairs of length `s^(3s+i)`, tiny intervals of `s^(2s-i)`, and
    /// dust fraction `1 - 1/sqrt(2)`. Only the run list is ever built; for
    /// `s = 2` that is 4096 beads but for `s = 3` already ~86 million.
    pub fn paper(s: u32) -> Result<DustParams> {
        if s < 2 {
            return Err(bad("dust construction needs s >= 2"));
        }
        let mut levels = Vec::with_capacity(s as usize);
        for i in 1..=s {
            levels.push(DustLevel {
                arc_pairs: pow(s as u64, 2 * s - i)?,
                arc_len: pow(s as u64, 3 * s + i)?,
                tiny_len: pow(s as u64, 2 * s - i)?,
            });
        }
        Ok(DustParams {
            levels,
            lambda: lambda_star(),
        })
    }

    /// Solver-sized analog of [`DustParams::paper`]: powers of two instead
    /// of powers of `s^s`, keeping arcs increasing and tiny intervals
    /// decreasing across levels. `scale` doubles every arc length that many
    /// times; `desk(2, 1/2, 0)` has 256 beads, `desk(2, 1/2, 3)` has 2048.
    pub fn desk(s: u32, lambda: f64, scale: u32) -> Result<DustParams> {
        if s < 2 {
            return Err(bad("dust construction needs s >= 2"));
        }
        let mut levels = Vec::with_capacity(s as usize);
        for i in 1..=s {
            levels.push(DustLevel {
                arc_pairs: pow(2, s + 1 - i)?,
                arc_len: pow(2, s + 1 + i + scale)?,
                tiny_len: pow(2, s + 1 - i)?,
            });
        }
        Ok(DustParams { levels, lambda })
    }

    fn validate(&self) -> Result<()> {
        validate_levels(&self.levels)?;
        if !(0.0..=0.5).contains(&self.lambda) {
            return Err(bad("lambda must lie in [0, 1/2]"));
        }
        for level in &self.levels {
            let dust = dust_len(self.lambda, level.tiny_len);
            if dust == 0 {
                return Err(bad(format!(
                    "dust would vanish: floor({} * {}) = 0",
                    self.lambda, level.tiny_len
                )));
            }
            if dust >= level.tiny_len {
                return Err(bad("dust would swallow a whole tiny interval"));
            }
        }
        Ok(())
    }
}

fn validate_levels(levels: &[DustLevel]) -> Result<()> {
    if levels.is_empty() {
        return Err(bad("dust construction needs at least one level"));
    }
    for (k, level) in levels.iter().enumerate() {
        if level.arc_pairs == 0 {
            return Err(bad("every level needs at least one arc pair"));
        }
        if level.tiny_len == 0 || level.arc_len % level.tiny_len != 0 {
            return Err(bad(format!(
                "tiny length {} must divide arc length {}",
                level.tiny_len, level.arc_len
            )));
        }
        if k > 0 {
            let prev = &levels[k - 1];
            if level.arc_len <= prev.arc_len {
                return Err(bad("arc lengths must strictly increase across levels"));
            }
            if level.tiny_len >= prev.tiny_len {
                return Err(bad("tiny lengths must strictly decrease across levels"));
            }
        }
    }
    Ok(())
}

fn dust_len(lambda: f64, tiny_len: u64) -> u64 {
    (lambda * tiny_len as f64).floor() as u64
}

fn check_run_budget(tiny_total: u64) -> Result<()> {
    // two runs per tiny interval
    let runs = tiny_total.checked_mul(2).ok_or(Error::Overflow)?;
    if runs > RUN_LIMIT {
        return Err(bad(format!(
            "construction needs {runs} runs (limit {RUN_LIMIT}); use a desk preset"
        )));
    }
    Ok(())
}

/// Counts tiny intervals across all arcs of all levels, checking overflow.
fn tiny_total(levels: &[DustLevel]) -> Result<u64> {
    let mut total = 0u64;
    for level in levels {
        let per_arc = level.arc_len / level.tiny_len;
        let arcs = level.arc_pairs.checked_mul(2).ok_or(Error::Overflow)?;
        total = total
            .checked_add(arcs.checked_mul(per_arc).ok_or(Error::Overflow)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// Builds a balanced dust necklace. Arcs alternate red-main and blue-main
/// within each level (red first); every tiny interval of a red-main arc ends
/// in `floor(lambda * tiny_len)` blue beads and vice versa, so the swapped
/// bead counts cancel and the result stays exactly balanced.
pub fn gen_dust(params: &DustParams) -> Result<Necklace> {
    params.validate()?;
    check_run_budget(tiny_total(&params.levels)?)?;
    let mut runs: Vec<(Color, u64)> = Vec::new();
    for level in &params.levels {
        let dust = dust_len(params.lambda, level.tiny_len);
        let main = level.tiny_len - dust;
        let per_arc = level.arc_len / level.tiny_len;
        for _ in 0..level.arc_pairs {
            for _ in 0..per_arc {
                runs.push((Color::Red, main));
                runs.push((Color::Blue, dust));
            }
            for _ in 0..per_arc {
                runs.push((Color::Blue, main));
                runs.push((Color::Red, dust));
            }
        }
    }
    let necklace = Necklace::from_runs(runs)?;
    debug_assert!(necklace.is_balanced());
    Ok(necklace)
}

/// Exact ceiling `8 * s^(4s)` on the number of monochromatic arcs a
/// published-proportions dust necklace can have, as a big integer so the
/// comparison works at sizes that only exist as run lists.
pub fn dust_mono_bound(s: u32) -> BigUint {
    BigUint::from(8u32) * BigUint::from(s).pow(4 * s)
}

/// Larger root of `x^2 - (phi+1)x - 1`.
pub fn psi1(phi: f64) -> f64 {
    let a = phi + 1.0;
    (a + (a * a + 4.0).sqrt()) / 2.0
}

/// Larger root of `x^2 - ((phi+1)/phi)x - 1`.
pub fn psi2(phi: f64) -> f64 {
    let a = (phi + 1.0) / phi;
    (a + (a * a + 4.0).sqrt()) / 2.0
}

/// Solution of the dust-proportion system for an unbalanced necklace with
/// red/blue ratio `phi`. Red-main arcs get `t` main and `u` dust beads per
/// unit of tiny interval, blue-main arcs `v` and `w`, tied together by
/// `t + w = phi`, `u + v = 1` and the model's two proportionality
/// constraints through [`psi1`] and [`psi2`].
///
/// `phi` here is always the normalized ratio `>= 1`; a requested ratio below
/// 1 is solved for its reciprocal with `colors_swapped` set, meaning every
/// generated necklace gets its colors exchanged on the way out.
#[derive(Debug, Clone, Copy)]
pub struct UnbalancedParams {
    pub phi: f64,
    pub p: f64,
    pub model: Model,
    pub t: f64,
    pub u: f64,
    pub v: f64,
    pub w: f64,
    pub psi1: f64,
    pub psi2: f64,
    pub colors_swapped: bool,
}

/// Solves the four-variable system for the given ratio and model. The
/// system is linear once the psi values are fixed: substituting `t = psi_t u`
/// and `v = psi_v w` into the two sum constraints leaves one equation in
/// `w`. All residuals come out around machine precision; callers can hold
/// the result to 1e-12.
///
/// `phi` must lie in `[1/2, 2]`; ratios below 1 are normalized per
/// [`UnbalancedParams::colors_swapped`].
pub fn solve_unbalanced_params(phi: f64, model: Model) -> Result<UnbalancedParams> {
    if !(0.5..=2.0).contains(&phi) {
        return Err(bad(format!("phi {phi} outside [0.5, 2]")));
    }
    if phi < 1.0 {
        let mut params = solve_unbalanced_params(1.0 / phi, model)?;
        params.colors_swapped = true;
        return Ok(params);
    }
    let (psi1, psi2) = (psi1(phi), psi2(phi));
    // t = psi_t * u pairs red-main size against blue dust; v = psi_v * w
    // pairs blue-main size against red dust
    let (psi_t, psi_v) = match model {
        Model::Homo => (psi2, psi1),
        Model::Hetero => (psi1, psi2),
    };
    let w = (phi - psi_t) / (1.0 - psi_t * psi_v);
    let v = psi_v * w;
    let u = 1.0 - v;
    let t = phi - w;
    debug_assert!((t + w - phi).abs() < 1e-12);
    debug_assert!((u + v - 1.0).abs() < 1e-12);
    debug_assert!((t - psi_t * u).abs() < 1e-12);
    debug_assert!((v - psi_v * w).abs() < 1e-12);
    debug_assert!(t >= u && v >= w);
    Ok(UnbalancedParams {
        phi,
        p: phi / (1.0 + phi),
        model,
        t,
        u,
        v,
        w,
        psi1,
        psi2,
        colors_swapped: false,
    })
}

/// Level layout for [`gen_unbalanced`], reusing the dust level shape; the
/// per-color bead counts inside each tiny interval come from the parameter
/// system instead of a single lambda.
#[derive(Debug, Clone)]
pub struct ScaleProfile {
    pub levels: Vec<DustLevel>,
}

impl ScaleProfile {
    /// Desk-sized layout with tiny intervals big enough that even the
    /// smallest dust proportion in the supported phi range rounds to at
    /// least one bead.
    pub fn desk(s: u32, scale: u32) -> Result<ScaleProfile> {
        if s < 2 {
            return Err(bad("unbalanced construction needs s >= 2"));
        }
        let mut levels = Vec::with_capacity(s as usize);
        for i in 1..=s {
            levels.push(DustLevel {
                arc_pairs: pow(2, s + 3 - i)?,
                arc_len: pow(2, s + 3 + i + scale)?,
                tiny_len: pow(2, s + 3 - i)?,
            });
        }
        Ok(ScaleProfile { levels })
    }
}

/// An unbalanced dust necklace plus the generator's own accounting: the
/// achieved red/blue ratio and the declared ceiling on how far rounding can
/// have pushed it from the requested one.
#[derive(Debug, Clone)]
pub struct UnbalancedOutcome {
    pub necklace: Necklace,
    pub phi_achieved: f64,
    pub phi_target: f64,
    pub slack: f64,
}

/// Builds the asymmetric dust necklace for solved parameters. Red-main arcs
/// use tiny intervals of `floor((t+u) * tiny_len)` beads ending in
/// `floor(u * tiny_len)` blue dust; blue-main arcs use `floor((v+w) *
/// tiny_len)` with `floor(w * tiny_len)` red dust; remainder beads stay the
/// main color. Rounding moves each tiny interval's color counts by less
/// than one bead, which caps the achieved ratio's drift at
/// `2 * tiny_count * (1 + phi) / blue_count`, reported as `slack`.
///
/// Fails when any tiny interval would round a dust or main part to zero.
pub fn gen_unbalanced(
    params: &UnbalancedParams,
    profile: &ScaleProfile,
) -> Result<UnbalancedOutcome> {
    validate_levels(&profile.levels)?;
    let tinies = tiny_total(&profile.levels)?;
    check_run_budget(tinies)?;

    let mut runs: Vec<(Color, u64)> = Vec::new();
    for level in &profile.levels {
        let t_len = level.tiny_len as f64;
        let odd_tiny = ((params.t + params.u) * t_len).floor() as u64;
        let odd_dust = (params.u * t_len).floor() as u64;
        let even_tiny = ((params.v + params.w) * t_len).floor() as u64;
        let even_dust = (params.w * t_len).floor() as u64;
        if odd_dust == 0 || even_dust == 0 {
            return Err(bad(format!(
                "profile too small: dust rounds to zero at tiny length {}",
                level.tiny_len
            )));
        }
        if odd_tiny <= odd_dust || even_tiny <= even_dust {
            return Err(bad(format!(
                "profile too small: main part rounds to zero at tiny length {}",
                level.tiny_len
            )));
        }
        let per_arc = level.arc_len / level.tiny_len;
        for _ in 0..level.arc_pairs {
            for _ in 0..per_arc {
                runs.push((Color::Red, odd_tiny - odd_dust));
                runs.push((Color::Blue, odd_dust));
            }
            for _ in 0..per_arc {
                runs.push((Color::Blue, even_tiny - even_dust));
                runs.push((Color::Red, even_dust));
            }
        }
    }
    let necklace = Necklace::from_runs(runs)?;

    let red = necklace.red_count() as f64;
    let blue = necklace.blue_count() as f64;
    let achieved = red / blue;
    let slack = 2.0 * tinies as f64 * (1.0 + params.phi) / blue;
    if (achieved - params.phi).abs() > slack {
        return Err(bad(format!(
            "rounding drifted the ratio to {achieved} (target {})",
            params.phi
        )));
    }
    let (necklace, phi_achieved, phi_target) = if params.colors_swapped {
        let swapped = necklace.color_swapped();
        // the slack formula is symmetric under swapping: the same bound
        // holds for the reciprocal target against the reciprocal ratio
        let target = 1.0 / params.phi;
        let achieved = swapped.red_count() as f64 / swapped.blue_count() as f64;
        (swapped, achieved, target)
    } else {
        (necklace, achieved, params.phi)
    };
    Ok(UnbalancedOutcome {
        necklace,
        phi_achieved,
        phi_target,
        slack,
    })
}

/// A named generator configuration, as written on the command line and in
/// sweep specs: `simple:s=2`, `dust:paper:s=3`,
/// `dust:desk:s=2,lambda=1/2,scale=3`, or
/// `unbalanced:desk:s=2,phi=2,model=hetero`.
#[derive(Debug, Clone, PartialEq)]
pub enum Preset {
    Simple { s: u32 },
    DustPaper { s: u32 },
    DustDesk { s: u32, lambda: f64, scale: u32 },
    UnbalancedDesk { s: u32, phi: f64, model: Model, scale: u32 },
}

fn parse_ratio(text: &str) -> Result<f64> {
    let value = if let Some((num, den)) = text.split_once('/') {
        let num: f64 = num.trim().parse().map_err(|_| bad_number(text))?;
        let den: f64 = den.trim().parse().map_err(|_| bad_number(text))?;
        if den == 0.0 {
            return Err(bad_number(text));
        }
        num / den
    } else {
        text.trim().parse().map_err(|_| bad_number(text))?
    };
    if !value.is_finite() {
        return Err(bad_number(text));
    }
    Ok(value)
}

fn bad_number(text: &str) -> Error {
    bad(format!("cannot parse number '{text}'"))
}

impl Preset {
    pub fn parse(text: &str) -> Result<Preset> {
        let (family, rest) = text
            .split_once(':')
            .ok_or_else(|| bad(format!("preset '{text}' has no parameters")))?;
        let mut s: Option<u32> = None;
        let mut lambda: Option<f64> = None;
        let mut phi: Option<f64> = None;
        let mut model: Option<Model> = None;
        let mut scale: Option<u32> = None;
        let (family, args) = match family {
            "dust" | "unbalanced" => {
                let (kind, args) = rest
                    .split_once(':')
                    .ok_or_else(|| bad(format!("preset '{text}' is missing its variant")))?;
                (format!("{family}:{kind}"), args)
            }
            _ => (family.to_string(), rest),
        };
        for part in args.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got '{part}'")))?;
            match key.trim() {
                "s" => s = Some(value.trim().parse().map_err(|_| bad_number(value))?),
                "lambda" => lambda = Some(parse_ratio(value)?),
                "phi" => phi = Some(parse_ratio(value)?),
                "model" => {
                    model = Some(value.trim().parse().map_err(|_| {
                        bad(format!("unknown model '{value}' (hetero or homo)"))
                    })?)
                }
                "scale" => scale = Some(value.trim().parse().map_err(|_| bad_number(value))?),
                other => return Err(bad(format!("unknown preset key '{other}'"))),
            }
        }
        let s = s.ok_or_else(|| bad("preset needs s=<k>"))?;
        match family.as_str() {
            "simple" => Ok(Preset::Simple { s }),
            "dust:paper" => Ok(Preset::DustPaper { s }),
            "dust:desk" => Ok(Preset::DustDesk {
                s,
                lambda: lambda.ok_or_else(|| bad("dust:desk needs lambda=<q>"))?,
                scale: scale.unwrap_or(0),
            }),
            "unbalanced:desk" => Ok(Preset::UnbalancedDesk {
                s,
                phi: phi.ok_or_else(|| bad("unbalanced:desk needs phi=<q>"))?,
                model: model.ok_or_else(|| bad("unbalanced:desk needs model=<m>"))?,
                scale: scale.unwrap_or(0),
            }),
            other => Err(bad(format!("unknown preset family '{other}'"))),
        }
    }

    /// Canonical rendering, accepted back by [`Preset::parse`].
    pub fn name(&self) -> String {
        match self {
            Preset::Simple { s } => format!("simple:s={s}"),
            Preset::DustPaper { s } => format!("dust:paper:s={s}"),
            Preset::DustDesk { s, lambda, scale } => {
                let mut name = format!("dust:desk:s={s},lambda={lambda}");
                if *scale > 0 {
                    name.push_str(&format!(",scale={scale}"));
                }
                name
            }
            Preset::UnbalancedDesk {
                s,
                phi,
                model,
                scale,
            } => {
                let mut name = format!("unbalanced:desk:s={s},phi={phi},model={model}");
                if *scale > 0 {
                    name.push_str(&format!(",scale={scale}"));
                }
                name
            }
        }
    }

    pub fn build(&self) -> Result<Necklace> {
        match *self {
            Preset::Simple { s } => gen_simple(&SimpleParams { s }),
            Preset::DustPaper { s } => gen_dust(&DustParams::paper(s)?),
            Preset::DustDesk { s, lambda, scale } => gen_dust(&DustParams::desk(s, lambda, scale)?),
            Preset::UnbalancedDesk {
                s,
                phi,
                model,
                scale,
            } => {
                let params = solve_unbalanced_params(phi, model)?;
                Ok(gen_unbalanced(&params, &ScaleProfile::desk(s, scale)?)?.necklace)
            }
        }
    }

    pub fn s(&self) -> u32 {
        match *self {
            Preset::Simple { s }
            | Preset::DustPaper { s }
            | Preset::DustDesk { s, .. }
            | Preset::UnbalancedDesk { s, .. } => s,
        }
    }

    pub fn lambda(&self) -> Option<f64> {
        match *self {
            Preset::DustPaper { .. } => Some(lambda_star()),
            Preset::DustDesk { lambda, .. } => Some(lambda),
            _ => None,
        }
    }

    pub fn phi(&self) -> Option<f64> {
        match *self {
            Preset::UnbalancedDesk { phi, .. } => Some(phi),
            _ => None,
        }
    }
}

impl std::str::FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Preset> {
        Preset::parse(s)
    }
}

impl std::fmt::Display for Preset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_s2_matches_hand_layout() {
        let necklace = gen_simple(&SimpleParams { s: 2 }).unwrap();
        assert_eq!(necklace.render(), "RRBBRRBBRRRRBBBB");
        assert_eq!(necklace.len(), 16);
        assert!(necklace.is_balanced());
        assert_eq!(necklace.mono(), 6);
    }

    #[test]
    fn simple_mono_follows_the_closed_form() {
        for s in [2u32, 3, 4] {
            let necklace = gen_simple(&SimpleParams { s }).unwrap();
            let expected: u64 = (1..=s).map(|i| 2 * (s as u64).pow(s - i)).sum();
            assert_eq!(necklace.mono(), expected, "s={s}");
            assert_eq!(necklace.len(), 2 * (s as u64).pow(s + 1));
            assert!(necklace.is_balanced());
        }
    }

    #[test]
    fn simple_s3_ends_with_the_longest_arcs() {
        let necklace = gen_simple(&SimpleParams { s: 3 }).unwrap();
        assert_eq!(necklace.len(), 162);
        let runs = necklace.runs();
        let last = runs.len() - 2;
        assert_eq!((runs[last].color, runs[last].len), (Color::Red, 27));
        assert_eq!((runs[last + 1].color, runs[last + 1].len), (Color::Blue, 27));
    }

    #[test]
    fn simple_rejects_degenerate_and_oversized_scales() {
        assert!(gen_simple(&SimpleParams { s: 1 }).is_err());
        assert!(gen_simple(&SimpleParams { s: 9 }).is_err());
    }

    #[test]
    fn dust_paper_s2_has_the_expected_shape() {
        let necklace = gen_dust(&DustParams::paper(2).unwrap()).unwrap();
        assert_eq!(necklace.len(), 4096);
        assert!(necklace.is_balanced());
        // tiny interval of 8 with floor(lambda* x 8) = 2 dust beads
        assert_eq!(necklace.runs()[0].len, 6);
        assert_eq!(necklace.runs()[1].len, 2);
        assert!(BigUint::from(necklace.mono()) <= dust_mono_bound(2));
    }

    #[test]
    fn dust_desk_s2_matches_the_worked_size() {
        let necklace = gen_dust(&DustParams::desk(2, 0.5, 0).unwrap()).unwrap();
        assert_eq!(necklace.len(), 256);
        assert!(necklace.is_balanced());
        let scaled = gen_dust(&DustParams::desk(2, 0.5, 3).unwrap()).unwrap();
        assert_eq!(scaled.len(), 2048);
    }

    #[test]
    fn dust_rejects_vanishing_and_oversized_dust() {
        // level 2 of desk(2) has tiny intervals of 2 beads: quarter dust
        // rounds to zero there
        assert!(matches!(
            gen_dust(&DustParams::desk(2, 0.25, 0).unwrap()),
            Err(Error::BadParams(_))
        ));
        assert!(gen_dust(&DustParams::desk(2, 0.0, 0).unwrap()).is_err());
        assert!(gen_dust(&DustParams::desk(2, 0.9, 0).unwrap()).is_err());
    }

    #[test]
    fn dust_validates_level_structure() {
        let base = DustLevel {
            arc_pairs: 2,
            arc_len: 16,
            tiny_len: 4,
        };
        let no_divide = DustParams {
            levels: vec![DustLevel {
                tiny_len: 5,
                ..base
            }],
            lambda: 0.5,
        };
        assert!(gen_dust(&no_divide).is_err());
        let not_increasing = DustParams {
            levels: vec![
                base,
                DustLevel {
                    arc_len: 16,
                    tiny_len: 2,
                    ..base
                },
            ],
            lambda: 0.5,
        };
        assert!(gen_dust(&not_increasing).is_err());
        let not_decreasing = DustParams {
            levels: vec![
                base,
                DustLevel {
                    arc_len: 32,
                    tiny_len: 4,
                    ..base
                },
            ],
            lambda: 0.5,
        };
        assert!(gen_dust(&not_decreasing).is_err());
    }

    #[test]
    fn paper_presets_beyond_s3_exceed_the_run_budget() {
        assert!(matches!(
            gen_dust(&DustParams::paper(4).unwrap()),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn mono_bound_values() {
        assert_eq!(dust_mono_bound(2), BigUint::from(2048u32));
        assert_eq!(dust_mono_bound(3), BigUint::from(4251528u32));
    }

    #[test]
    fn lambda_star_is_the_quadratic_root() {
        let l = lambda_star();
        assert!((2.0 * l * l - 4.0 * l + 1.0).abs() < 1e-12);
        assert!(l > 0.0 && l < 0.5);
    }

    #[test]
    fn psi_values_at_the_range_ends() {
        let gold = 1.0 + std::f64::consts::SQRT_2;
        assert!((psi1(1.0) - gold).abs() < 1e-12);
        assert!((psi2(1.0) - gold).abs() < 1e-12);
        assert!((psi2(2.0) - 2.0).abs() < 1e-12);
        assert!((psi1(2.0) - (3.0 + 13f64.sqrt()) / 2.0).abs() < 1e-12);
        for phi in [1.1, 1.5, 1.9] {
            assert!(psi1(phi) > psi2(phi), "phi={phi}");
        }
    }

    fn residuals(params: &UnbalancedParams) -> f64 {
        let (psi_t, psi_v) = match params.model {
            Model::Homo => (params.psi2, params.psi1),
            Model::Hetero => (params.psi1, params.psi2),
        };
        [
            params.t + params.w - params.phi,
            params.u + params.v - 1.0,
            params.t - psi_t * params.u,
            params.v - psi_v * params.w,
        ]
        .into_iter()
        .map(f64::abs)
        .fold(0.0, f64::max)
    }

    #[test]
    fn params_solve_the_system_exactly_enough() {
        for model in [Model::Hetero, Model::Homo] {
            for step in 0..=20 {
                let phi = 1.0 + step as f64 * 0.05;
                let params = solve_unbalanced_params(phi, model).unwrap();
                assert!(residuals(&params) < 1e-12, "phi={phi} {model}");
                assert!(params.t >= 0.0 && params.u >= 0.0);
                assert!(params.v >= 0.0 && params.w >= 0.0);
                assert!(params.t >= params.u && params.v >= params.w);
            }
        }
    }

    #[test]
    fn hand_solved_fixed_points() {
        let p = solve_unbalanced_params(2.0, Model::Hetero).unwrap();
        assert!((p.u - 0.535184).abs() < 1e-6);
        assert!((p.t - 1.767592).abs() < 1e-6);
        assert!((p.v - 0.464816).abs() < 1e-6);
        assert!((p.w - 0.232408).abs() < 1e-6);
        // balanced case: both dust fractions collapse to the balanced one
        let b = solve_unbalanced_params(1.0, Model::Hetero).unwrap();
        assert!((b.u - lambda_star()).abs() < 1e-12);
        assert!((b.w - lambda_star()).abs() < 1e-12);
    }

    #[test]
    fn reciprocal_ratios_swap_colors() {
        let params = solve_unbalanced_params(0.8, Model::Homo).unwrap();
        assert!(params.colors_swapped);
        assert!((params.phi - 1.25).abs() < 1e-12);
        assert!(solve_unbalanced_params(0.4, Model::Homo).is_err());
        assert!(solve_unbalanced_params(2.1, Model::Homo).is_err());
    }

    #[test]
    fn unbalanced_generator_hits_the_target_ratio() {
        let profile = ScaleProfile::desk(2, 0).unwrap();
        for phi in [1.0, 1.5, 2.0] {
            let params = solve_unbalanced_params(phi, Model::Hetero).unwrap();
            let out = gen_unbalanced(&params, &profile).unwrap();
            assert!(
                (out.phi_achieved - out.phi_target).abs() <= out.slack,
                "phi={phi}: {} vs {} (slack {})",
                out.phi_achieved,
                out.phi_target,
                out.slack
            );
            assert!((out.phi_achieved - phi).abs() < 0.2, "phi={phi}");
        }
    }

    #[test]
    fn unbalanced_at_one_degenerates_to_the_balanced_dust_layout() {
        let profile = ScaleProfile::desk(2, 0).unwrap();
        let params = solve_unbalanced_params(1.0, Model::Hetero).unwrap();
        let out = gen_unbalanced(&params, &profile).unwrap();
        let dust = gen_dust(&DustParams {
            levels: profile.levels.clone(),
            lambda: lambda_star(),
        })
        .unwrap();
        assert_eq!(out.necklace.render(), dust.render());
    }

    #[test]
    fn swapped_outcome_reports_the_reciprocal_target() {
        let profile = ScaleProfile::desk(2, 0).unwrap();
        let params = solve_unbalanced_params(0.5, Model::Hetero).unwrap();
        let out = gen_unbalanced(&params, &profile).unwrap();
        assert!((out.phi_target - 0.5).abs() < 1e-12);
        assert!(out.phi_achieved < 1.0);
        let necklace = out.necklace;
        assert!(necklace.blue_count() > necklace.red_count());
    }

    #[test]
    fn too_small_profiles_are_rejected() {
        let tiny = ScaleProfile {
            levels: vec![DustLevel {
                arc_pairs: 2,
                arc_len: 8,
                tiny_len: 2,
            }],
        };
        let params = solve_unbalanced_params(2.0, Model::Hetero).unwrap();
        // w*2 ~ 0.46 rounds to zero dust
        assert!(matches!(
            gen_unbalanced(&params, &tiny),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn presets_parse_build_and_render() {
        let cases = [
            ("simple:s=2", 16u64),
            ("dust:paper:s=2", 4096),
            ("dust:desk:s=2,lambda=1/2", 256),
            ("dust:desk:s=2,lambda=0.5,scale=3", 2048),
        ];
        for (text, n) in cases {
            let preset = Preset::parse(text).unwrap();
            assert_eq!(preset.build().unwrap().len(), n, "{text}");
            assert_eq!(Preset::parse(&preset.name()).unwrap(), preset, "{text}");
        }
        let unb = Preset::parse("unbalanced:desk:s=2,phi=2,model=hetero").unwrap();
        assert_eq!(unb.phi(), Some(2.0));
        assert!(unb.build().unwrap().red_count() > unb.build().unwrap().blue_count());
    }

    #[test]
    fn malformed_presets_are_rejected() {
        for text in [
            "simple",
            "simple:s=x",
            "dust:desk:s=2",
            "dust:desk:lambda=0.5",
            "unbalanced:desk:s=2,phi=2",
            "unbalanced:desk:s=2,phi=2,model=green",
            "mystery:s=2",
            "simple:s=2,extra=1",
        ] {
            assert!(Preset::parse(text).is_err(), "{text}");
        }
    }
}
