use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use neckfold::analysis::{bound_table, bound_table_csv, sweep, SweepSpec};
use neckfold::{
    gen_unbalanced, oracle_exhaustive, solve, solve_unbalanced_params, validate_matching,
    Matching, Model, Necklace, Preset, ScaleProfile, SolveOptions,
};

/// Exact solver and instance toolkit for separated matchings on circular
/// two-colored words.
#[derive(Parser)]
#[command(name = "neckfold", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a preset necklace and print it, or save it with a JSON sidecar.
    Gen {
        /// Preset name, e.g. "simple:s=2" or "dust:desk:s=2,lambda=1/2".
        #[arg(long)]
        preset: String,
        /// Write the necklace text here and a summary to "<out>.json".
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Solve a necklace file exactly; prints the result as JSON.
    Solve {
        /// File holding the necklace, dense ("RRBB") or run-length ("rle:2R2B").
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum)]
        model: ModelArg,
        /// Also write the optimal matching to this file.
        #[arg(long, value_name = "FILE")]
        witness: Option<PathBuf>,
        /// Run the dynamic program on every rotation, even bounded-out ones.
        #[arg(long)]
        no_prune: bool,
        /// Worker threads for the per-rotation dynamic programs.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Refuse necklaces with more beads than this.
        #[arg(long, default_value_t = 4096)]
        max_n: u64,
    },
    /// Brute-force reference solver, limited to 16 beads.
    Oracle {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum)]
        model: ModelArg,
    },
    /// Check a witness file against a necklace; prints "ok" or the violation.
    Validate {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        witness: PathBuf,
    },
    /// Print the closed-form bound table as CSV.
    Bounds {
        #[arg(long)]
        phi_from: f64,
        #[arg(long)]
        phi_to: f64,
        #[arg(long)]
        step: f64,
        #[arg(long, value_enum)]
        model: ModelArg,
    },
    /// Run the batch described by a JSON spec file; prints CSV.
    Sweep {
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
    },
    /// Print bead counts, run structure, and period of a necklace file.
    Stats {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum ModelArg {
    Hetero,
    Homo,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::Hetero => Model::Hetero,
            ModelArg::Homo => Model::Homo,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cmd {
        Command::Gen { preset, out } => {
            let preset: Preset = preset.parse()?;
            let (necklace, phi_achieved) = match preset {
                Preset::UnbalancedDesk {
                    s,
                    phi,
                    model,
                    scale,
                } => {
                    let params = solve_unbalanced_params(phi, model)?;
                    let built = gen_unbalanced(&params, &ScaleProfile::desk(s, scale)?)?;
                    (built.necklace, Some(built.phi_achieved))
                }
                ref p => (p.build()?, None),
            };
            let phi_field = match phi_achieved {
                Some(v) => format!("{v:.6}"),
                None => "null".to_owned(),
            };
            let sidecar = format!(
                "{{\"preset\":\"{}\",\"N\":{},\"red\":{},\"blue\":{},\"mono\":{},\"phi_achieved\":{}}}\n",
                preset.name(),
                necklace.len(),
                necklace.red_count(),
                necklace.blue_count(),
                necklace.mono(),
                phi_field,
            );
            match out {
                Some(path) => {
                    fs::write(&path, format!("{}\n", necklace.render()))?;
                    let mut sidecar_path = path.into_os_string();
                    sidecar_path.push(".json");
                    fs::write(sidecar_path, sidecar)?;
                }
                None => println!("{}", necklace.render()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve {
            input,
            model,
            witness,
            no_prune,
            threads,
            max_n,
        } => {
            let necklace = read_necklace(&input)?;
            let options = SolveOptions {
                pruning: !no_prune,
                want_witness: true,
                worker_count: threads,
                max_beads: max_n,
                ..SolveOptions::default()
            };
            let result = solve(&necklace, model.into(), &options)?;
            if let Some(path) = witness {
                let m = result.witness.as_ref().expect("witness was requested");
                fs::write(path, format!("{}\n", m.to_witness_json(necklace.len())))?;
            }
            println!("{}", result.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { input, model } => {
            let necklace = read_necklace(&input)?;
            let model: Model = model.into();
            let covered = oracle_exhaustive(&necklace, model)?;
            println!(
                "{{\"N\":{},\"model\":\"{model}\",\"covered\":{covered}}}",
                necklace.len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate { input, witness } => {
            let necklace = read_necklace(&input)?;
            let text = fs::read_to_string(&witness)?;
            let (matching, n) = Matching::from_witness_json(&text)?;
            if n != necklace.len() {
                eprintln!(
                    "witness is for {n} beads, necklace has {}",
                    necklace.len()
                );
                return Ok(ExitCode::from(1));
            }
            match validate_matching(&necklace, &matching) {
                Ok(()) => {
                    println!("ok");
                    Ok(ExitCode::SUCCESS)
                }
                Err(v) => {
                    println!("{v}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Bounds {
            phi_from,
            phi_to,
            step,
            model,
        } => {
            let rows = bound_table(phi_from, phi_to, step, model.into())?;
            print!("{}", bound_table_csv(&rows));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { spec } => {
            let text = fs::read_to_string(&spec)?;
            let spec: SweepSpec = serde_json::from_str(&text)?;
            print!("{}", sweep(&spec)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { input } => {
            let necklace = read_necklace(&input)?;
            println!(
                "{{\"N\":{},\"red\":{},\"blue\":{},\"mono\":{},\"period\":{}}}",
                necklace.len(),
                necklace.red_count(),
                necklace.blue_count(),
                necklace.mono(),
                necklace.period()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_necklace(path: &Path) -> Result<Necklace, Box<dyn std::error::Error>> {
    let text = fs::read_to_string(path)?;
    Ok(Necklace::parse(&text)?)
}
