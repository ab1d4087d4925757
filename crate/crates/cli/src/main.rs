//! Exact computations around PBW degenerations of Demazure modules:
//! dimensions, graded profiles, kernel profiles, monomial lattice counts,
//! the quartic witness certificate, and parameter sweeps.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pbwdeg_cli::commands::{self, CommandError, SideSelection};
use pbwdeg_cli::report;
use pbwdeg_cli::sweep::{self, PermutationFilter, SweepConfig};

#[derive(Parser)]
#[command(name = "pbwdeg", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct CommonInputs {
    /// Rank: permutations act on 1..=n. Derived from --w or --lambda when
    /// omitted; validated against them when given.
    #[arg(long)]
    n: Option<u8>,

    /// Permutation in one-line notation, e.g. 6,4,2,5,3,1
    #[arg(long)]
    w: Option<String>,

    /// Dominant weight coordinates, e.g. 1,1,0,1,1
    #[arg(long)]
    lambda: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the inversion set of a permutation.
    Inversions {
        #[command(flatten)]
        inputs: CommonInputs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Demazure module dimension via the character recursion.
    DemazureDim {
        #[command(flatten)]
        inputs: CommonInputs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Graded, weight-refined profile of the Cartan component closure.
    Cartan {
        #[command(flatten)]
        inputs: CommonInputs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Directory for cached closure profiles.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Kernel profile of the comparison map (classical vs Cartan tables).
    Kernel {
        #[command(flatten)]
        inputs: CommonInputs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Cardinality of the Minkowski sum of minimal-monomial lattice sets.
    FflvCount {
        #[command(flatten)]
        inputs: CommonInputs,
        /// Also emit the lattice points themselves.
        #[arg(long)]
        with_set: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the quartic witness certificate checks for a permutation of 1..=6.
    VerifyQ {
        #[command(flatten)]
        inputs: CommonInputs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Verify every published value of the counterexample pair; exits 0
    /// only when all checks pass.
    VerifyCounterexample {
        /// Check only the first weight of the pair.
        #[arg(long)]
        lambda: bool,
        /// Check only the second weight of the pair.
        #[arg(long)]
        mu: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        /// Worker threads for the surrounding pool.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Sweep all (w, lambda) pairs at a rank, emitting one record each.
    Sweep {
        /// Rank to sweep.
        #[arg(long)]
        n: u8,
        /// Upper bound for the weight coordinates.
        #[arg(long, default_value_t = 1)]
        max_coord: u32,
        /// Restrict the permutations visited.
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Append finished records here and skip them on resume.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    All,
    Triangular,
}

fn require_w(inputs: &CommonInputs) -> Result<pbwdeg::weyl::Permutation, CommandError> {
    let (_, w, _) =
        commands::parse_inputs(inputs.n, inputs.w.as_deref(), inputs.lambda.as_deref())?;
    w.ok_or_else(|| CommandError::Usage("--w is required".into()))
}

fn require_w_lambda(
    inputs: &CommonInputs,
) -> Result<(pbwdeg::weyl::Permutation, pbwdeg::weyl::DominantWeight), CommandError> {
    let (_, w, lam) =
        commands::parse_inputs(inputs.n, inputs.w.as_deref(), inputs.lambda.as_deref())?;
    let w = w.ok_or_else(|| CommandError::Usage("--w is required".into()))?;
    let lam = lam.ok_or_else(|| CommandError::Usage("--lambda is required".into()))?;
    Ok((w, lam))
}

fn emit(value: serde_json::Value) {
    print!("{}", report::to_stdout_string(&value));
}

fn run() -> Result<ExitCode, CommandError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Inversions { inputs, format } => {
            let w = require_w(&inputs)?;
            match format {
                Format::Text => {
                    for r in w.inversions() {
                        println!("{r}");
                    }
                }
                _ => emit(commands::cmd_inversions(&w)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::DemazureDim { inputs, format } => {
            let (w, lam) = require_w_lambda(&inputs)?;
            let value = commands::cmd_demazure_dim(&w, &lam);
            match format {
                Format::Text => println!("{}", value["dim"]),
                _ => emit(value),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cartan {
            inputs,
            format,
            cache_dir,
        } => {
            let (w, lam) = require_w_lambda(&inputs)?;
            let value = commands::cmd_cartan(&w, &lam, cache_dir.as_deref());
            match format {
                Format::Text => {
                    println!("total {}", value["total"]);
                    for (grade, dim) in value["by_grade"].as_object().expect("object").iter() {
                        println!("grade {grade}: {dim}");
                    }
                }
                _ => emit(value),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Kernel {
            inputs,
            format,
            cache_dir,
        } => {
            let (w, lam) = require_w_lambda(&inputs)?;
            let value = commands::cmd_kernel(&w, &lam, cache_dir.as_deref())?;
            match format {
                Format::Text => {
                    println!(
                        "d_dim {} e_dim {} kernel {}",
                        value["d_dim"], value["e_dim"], value["kernel_total"]
                    );
                    for cell in value["kernel_cells"].as_array().expect("array") {
                        println!("cell {cell}");
                    }
                }
                _ => emit(value),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::FflvCount {
            inputs,
            with_set,
            format,
        } => {
            let (w, lam) = require_w_lambda(&inputs)?;
            let value = commands::cmd_fflv_count(&w, &lam, with_set);
            match format {
                Format::Text => println!("{}", value["count"]),
                _ => emit(value),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyQ { inputs, format } => {
            let w = require_w(&inputs)?;
            let (value, q) = commands::cmd_verify_q(&w)?;
            match format {
                Format::Text => {
                    for (name, check) in value["checks"].as_object().expect("object") {
                        let pass = check["pass"].as_bool().unwrap_or(false);
                        println!("{} {}", if pass { "PASS" } else { "FAIL" }, name);
                    }
                }
                _ => emit(value),
            }
            if q.all_pass() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::VerifyCounterexample {
            lambda,
            mu,
            format,
            cache_dir,
            jobs,
        } => {
            // no side flag means both sides
            let sides = SideSelection {
                lambda: lambda || !mu,
                mu: mu || !lambda,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| CommandError::Io(e.to_string()))?;
            let report =
                pool.install(|| commands::cmd_verify_counterexample(sides, cache_dir.as_deref()))?;
            match format {
                Format::Text => print!("{}", report.to_text()),
                _ => emit(report.to_json()),
            }
            if report.all_pass() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Sweep {
            n,
            max_coord,
            filter,
            format,
            jobs,
            checkpoint,
        } => {
            if n == 0 || n > 7 {
                return Err(CommandError::Usage(
                    "sweeps are supported for 1 <= n <= 7".into(),
                ));
            }
            let config = SweepConfig {
                n,
                max_coord,
                filter: match filter {
                    FilterArg::All => PermutationFilter::All,
                    FilterArg::Triangular => PermutationFilter::Triangular,
                },
                jobs,
                checkpoint,
            };
            let outcome = sweep::run_sweep(&config)?;
            for (w, lam, msg) in &outcome.failures {
                eprintln!("record failed: w={w} lambda={lam}: {msg}");
            }
            match format {
                Format::Json => emit(sweep::records_json(&outcome.records)),
                Format::Csv => print!("{}", sweep::records_csv(&outcome.records)?),
                Format::Text => print!("{}", sweep::records_text(&outcome.records)),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code())
        }
    }
}
