//! One test per release gate. Each prints a single PASS line with the
//! checked volume; a failed assertion marks the corresponding gate red.

use std::time::{Duration, Instant};

use neckfold::analysis::unbalanced_bound;
use neckfold::constructions::psi2;
use neckfold::{
    baseline_half, dust_mono_bound, gen_dust, gen_simple, lambda_star, longest_alternating_path,
    oracle_exhaustive, solve, solve_fixed_secant, solve_unbalanced_params, validate_matching,
    Color, DustParams, Model, Necklace, Preset, Secant, SimpleParams, SolveOptions,
};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BOTH: [Model; 2] = [Model::Hetero, Model::Homo];

fn no_witness() -> SolveOptions {
    SolveOptions {
        want_witness: false,
        ..SolveOptions::default()
    }
}

fn covered_of(word: &Necklace, model: Model) -> u64 {
    solve(word, model, &no_witness()).unwrap().covered
}

/// Every balanced word of the given even length, as dense bitmask order.
fn balanced_words(n: u32) -> Vec<Necklace> {
    assert!(n % 2 == 0 && n <= 16);
    let mut words = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() == n / 2 {
            let beads: Vec<Color> = (0..n)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Color::Red
                    } else {
                        Color::Blue
                    }
                })
                .collect();
            words.push(Necklace::from_dense(&beads).unwrap());
        }
    }
    words
}

fn random_word(rng: &mut ChaCha8Rng, n: usize) -> Necklace {
    let beads: Vec<Color> = (0..n)
        .map(|_| {
            if rng.gen::<bool>() {
                Color::Red
            } else {
                Color::Blue
            }
        })
        .collect();
    Necklace::from_dense(&beads).unwrap()
}

fn random_balanced(rng: &mut ChaCha8Rng, half: usize) -> Necklace {
    let mut beads = vec![Color::Red; half];
    beads.extend(std::iter::repeat(Color::Blue).take(half));
    beads.shuffle(rng);
    Necklace::from_dense(&beads).unwrap()
}

/// 500 random words with unequal color counts, at most 12 beads. Shared by
/// gates 1 and 9 so both see the same instances.
fn small_random_pool() -> Vec<Necklace> {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut words = Vec::with_capacity(500);
    while words.len() < 500 {
        let n = rng.gen_range(2..=12);
        let word = random_word(&mut rng, n);
        if word.red_count() != word.blue_count() {
            words.push(word);
        }
    }
    words
}

/// 200 random words with at most 48 beads. Shared by gates 2 and 9.
fn sweep_pool() -> Vec<Necklace> {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    (0..200)
        .map(|_| {
            let n = rng.gen_range(2..=48);
            random_word(&mut rng, n)
        })
        .collect()
}

#[test]
fn criterion_01_solver_matches_exhaustive_oracle() {
    let started = Instant::now();
    let mut agreements = 0u64;
    for n in [4u32, 6, 8, 10, 12] {
        for word in balanced_words(n) {
            for model in BOTH {
                assert_eq!(
                    covered_of(&word, model),
                    oracle_exhaustive(&word, model).unwrap(),
                    "word {} model {model}",
                    word.render()
                );
                agreements += 1;
            }
        }
    }
    for word in small_random_pool() {
        for model in BOTH {
            assert_eq!(
                covered_of(&word, model),
                oracle_exhaustive(&word, model).unwrap(),
                "word {} model {model}",
                word.render()
            );
            agreements += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!("criterion 01: PASS ({agreements} solver/oracle agreements in {elapsed:?})");
}

#[test]
fn criterion_02_best_fixed_secant_matches_the_sweep() {
    for word in sweep_pool() {
        let n = word.len();
        for model in BOTH {
            let mut best = 0;
            for c1 in 0..n {
                for c2 in c1 + 1..n {
                    let secant = Secant::new(c1, c2).unwrap();
                    best = best.max(solve_fixed_secant(&word, secant, model).unwrap().covered());
                }
            }
            assert_eq!(
                best,
                covered_of(&word, model),
                "word {} model {model}",
                word.render()
            );
        }
    }
    println!("criterion 02: PASS (200 random words, every secant, both models)");
}

#[test]
fn criterion_03_baseline_always_covers_half() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for _ in 0..1000 {
        let half = rng.gen_range(1usize..=100);
        let word = random_balanced(&mut rng, half);
        for model in BOTH {
            let matching = baseline_half(&word, model).unwrap();
            assert_eq!(validate_matching(&word, &matching), Ok(()));
            let need = match model {
                Model::Hetero => (half as u64).div_ceil(2),
                Model::Homo => half as u64 / 2,
            };
            assert!(
                matching.pairs.len() as u64 >= need,
                "word {} model {model}: {} pairs, need {need}",
                word.render(),
                matching.pairs.len()
            );
        }
    }
    println!("criterion 03: PASS (1000 random balanced words, both models)");
}

#[test]
fn criterion_04_replication_scales_coverage_linearly() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for _ in 0..100 {
        let half = rng.gen_range(1usize..=5);
        let word = random_balanced(&mut rng, half);
        let base = covered_of(&word, Model::Hetero);
        for factor in [2u64, 3] {
            let replicated = word.replicated(factor).unwrap();
            assert_eq!(
                covered_of(&replicated, Model::Hetero),
                factor * base,
                "word {} factor {factor}",
                word.render()
            );
        }
    }
    println!("criterion 04: PASS (100 random balanced words, factors 2 and 3)");
}

/// Exact covered counts for the geometric family, cross-checked against the
/// exhaustive oracle at N=16 and locked as regression values.
const SIMPLE_GOLDENS: [(u32, u64, u64, u64); 2] = [
    // (s, N, covered hetero, covered homo)
    (2, 16, 16, 14),
    (3, 162, 138, 136),
];

#[test]
fn criterion_05_geometric_family_ratio_decreases() {
    let mut ratios = Vec::new();
    for (s, n, want_hetero, want_homo) in SIMPLE_GOLDENS {
        let word = gen_simple(&SimpleParams { s }).unwrap();
        assert_eq!(word.len(), u64::from(n));
        let started = Instant::now();
        let hetero = covered_of(&word, Model::Hetero);
        let homo = covered_of(&word, Model::Homo);
        let elapsed = started.elapsed();
        assert!(elapsed < Duration::from_secs(10), "N={n} took {elapsed:?}");
        if word.len() <= 16 {
            assert_eq!(hetero, oracle_exhaustive(&word, Model::Hetero).unwrap());
            assert_eq!(homo, oracle_exhaustive(&word, Model::Homo).unwrap());
        }
        assert_eq!((hetero, homo), (want_hetero, want_homo), "goldens for s={s}");
        ratios.push((
            hetero as f64 / word.len() as f64,
            homo as f64 / word.len() as f64,
        ));
    }
    assert!(ratios[1].0 < ratios[0].0, "hetero ratio must drop: {ratios:?}");
    assert!(ratios[1].1 < ratios[0].1, "homo ratio must drop: {ratios:?}");
    println!(
        "criterion 05: PASS (ratios s=2 {:.4}/{:.4} > s=3 {:.4}/{:.4})",
        ratios[0].0, ratios[0].1, ratios[1].0, ratios[1].1
    );
}

#[test]
#[ignore = "prints the integers frozen in SIMPLE_GOLDENS"]
fn regenerate_simple_goldens() {
    for s in [2u32, 3] {
        let word = gen_simple(&SimpleParams { s }).unwrap();
        println!(
            "s={s} N={} hetero={} homo={}",
            word.len(),
            covered_of(&word, Model::Hetero),
            covered_of(&word, Model::Homo)
        );
    }
}

#[test]
fn criterion_06_unbalanced_closed_forms_hold() {
    let tol = 1e-12;
    for k in 100..=200u32 {
        let phi = f64::from(k) / 100.0;
        for model in BOTH {
            let params = solve_unbalanced_params(phi, model).unwrap();
            let (psi_t, psi_v) = match model {
                Model::Hetero => (params.psi1, params.psi2),
                Model::Homo => (params.psi2, params.psi1),
            };
            assert!((params.u + params.v - 1.0).abs() < tol, "phi {phi} {model}");
            assert!((params.t + params.w - phi).abs() < tol, "phi {phi} {model}");
            assert!(
                (params.t - psi_t * params.u).abs() < tol,
                "phi {phi} {model}"
            );
            assert!(
                (params.v - psi_v * params.w).abs() < tol,
                "phi {phi} {model}"
            );
            let root1 = params.psi1 * params.psi1 - (phi + 1.0) * params.psi1 - 1.0;
            let root2 = params.psi2 * params.psi2 - (phi + 1.0) / phi * params.psi2 - 1.0;
            assert!(root1.abs() < tol, "phi {phi}: psi1 residual {root1}");
            assert!(root2.abs() < tol, "phi {phi}: psi2 residual {root2}");
        }
    }
    let at_one = unbalanced_bound(1.0, Model::Hetero).unwrap();
    assert!((at_one - (2.0 - f64::sqrt(2.0))).abs() < tol);
    let at_two = unbalanced_bound(2.0, Model::Hetero).unwrap();
    assert!((at_two - 2.0 / 3.0).abs() < tol);
    assert!((psi2(2.0) - 2.0).abs() < tol);
    let hand = solve_unbalanced_params(2.0, Model::Hetero).unwrap();
    assert!((hand.u - 0.535184).abs() < 1e-6, "u = {}", hand.u);
    assert!((hand.t - 1.767592).abs() < 1e-6, "t = {}", hand.t);
    println!("criterion 06: PASS (101-point grid, both models, endpoint values)");
}

#[test]
fn criterion_07_dust_words_stay_balanced_with_bounded_mono() {
    for s in [2u32, 3] {
        let word = gen_dust(&DustParams::paper(s).unwrap()).unwrap();
        assert!(word.is_balanced(), "s={s}");
        let mono = word.mono();
        assert!(
            BigUint::from(mono) <= dust_mono_bound(s),
            "s={s}: mono {mono} above {}",
            dust_mono_bound(s)
        );
    }
    let l = lambda_star();
    assert!((2.0 * l * l - 4.0 * l + 1.0).abs() < 1e-12);
    println!("criterion 07: PASS (s=2 and s=3 words balanced, mono within bound)");
}

#[test]
fn criterion_08_alternating_path_caps_hetero_coverage() {
    let mut checked = 0u64;
    for n in [2u32, 4, 6, 8, 10] {
        for word in balanced_words(n) {
            let covered = covered_of(&word, Model::Hetero);
            let path = longest_alternating_path(&word).unwrap();
            assert!(
                covered <= path,
                "word {}: covered {covered} above path {path}",
                word.render()
            );
            checked += 1;
        }
    }
    println!("criterion 08: PASS ({checked} balanced words)");
}

#[test]
fn criterion_09_output_bytes_ignore_threads_and_pruning() {
    let mut words: Vec<Necklace> = Vec::new();
    for n in [4u32, 6, 8, 10, 12] {
        words.extend(balanced_words(n));
    }
    words.extend(small_random_pool());
    words.extend(sweep_pool());
    words.push(gen_simple(&SimpleParams { s: 2 }).unwrap());
    words.push(gen_simple(&SimpleParams { s: 3 }).unwrap());
    let count = words.len();
    for word in &words {
        for model in BOTH {
            let mut first: Option<String> = None;
            for pruning in [true, false] {
                for worker_count in [1usize, 4] {
                    let options = SolveOptions {
                        pruning,
                        worker_count,
                        ..SolveOptions::default()
                    };
                    let json = solve(word, model, &options).unwrap().to_json();
                    match &first {
                        None => first = Some(json),
                        Some(expected) => assert_eq!(
                            &json,
                            expected,
                            "word {} model {model} pruning {pruning} workers {worker_count}",
                            word.render()
                        ),
                    }
                }
            }
        }
    }
    println!("criterion 09: PASS ({count} instances x 2 models x 4 configurations)");
}

#[test]
fn criterion_10_large_dust_solve_fits_the_budget_and_prunes() {
    let preset: Preset = "dust:desk:s=2,lambda=1/2,scale=3".parse().unwrap();
    let word = preset.build().unwrap();
    assert_eq!(word.len(), 2048);
    let options = SolveOptions {
        worker_count: 4,
        ..SolveOptions::default()
    };
    let started = Instant::now();
    let result = solve(&word, Model::Hetero, &options).unwrap();
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    assert!(result.rotations_pruned > 0, "no rotation was pruned");
    let witness = result.witness.as_ref().unwrap();
    assert_eq!(validate_matching(&word, witness), Ok(()));
    println!(
        "criterion 10: PASS (N=2048 hetero solved in {elapsed:?}, {} of {} rotations pruned)",
        result.rotations_pruned,
        result.rotations_examined + result.rotations_pruned
    );
}
