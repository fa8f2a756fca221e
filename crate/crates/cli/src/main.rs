use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mpmat::colouring::{count_flowing_with, max_rank_spanning_forest_with};
use mpmat::euler::chi_mu_with;
use mpmat::generate::{gen_random, gen_random_mp_tree};
use mpmat::io::{parse_digraph, serialize_digraph};
use mpmat::mp_structure::{dynamical_modules_with, recognize_mp_with, uniform_decomposition_with};
use mpmat::tutte::{tutte, tutte_all, TutteMethod};
use mpmat::verify::{run_verification, Family, Suite};
use mpmat::{Digraph, Error, LaurentPoly, Limits, Matroid};

#[derive(Parser)]
#[command(name = "mpmat", version, about = "Multipath matroids of digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Input {
    /// Digraph file, or `-` for standard input.
    file: PathBuf,
    /// Print a JSON object instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the multipaths form a matroid (exit 0 if so, 1 if not).
    Check(Input),
    /// Tutte polynomial of the multipath matroid.
    Tutte {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "rec")]
        method: MethodArg,
    },
    /// Number of flowing k-colourings.
    Tau {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: u64,
    },
    /// A spanning forest of maximal rank.
    Forest(Input),
    /// Dynamical modules of an MP-digraph.
    Modules(Input),
    /// Uniform matroids whose direct sum is the multipath matroid.
    Decompose(Input),
    /// Graded Euler characteristic for a graded dimension such as `q^-1 + 1 + q`.
    Euler {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Run property suites over a family of digraphs (exit 1 on any violation).
    ///
    /// Positional words are `exhaustive [N] [SUITE]` or `random [COUNT] [SEED] [SUITE]`,
    /// where SUITE is axioms, delcontr, tutte3, colouring, euler or all.
    Verify {
        #[arg(value_enum)]
        mode: ModeArg,
        #[arg(value_name = "ARGS")]
        words: Vec<String>,
        /// Vertices per digraph (random mode: the size of the looped random instances).
        #[arg(long)]
        n: Option<usize>,
        /// Instances in random mode.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Print a generated digraph file.
    Gen {
        #[arg(value_enum)]
        kind: GenArg,
        #[arg(long)]
        n: usize,
        /// Edge probability for `random`.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Def,
    Rec,
    Uniform,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenArg {
    Random,
    MpTree,
}

/// Failures mapped to exit codes: 2 for unreadable or malformed input, 1 for inputs
/// that violate a command's precondition.
enum Failure {
    Input(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::OutOfRangeVertex { .. } | Error::DuplicateNonLoopEdge { .. } => {
                Failure::Input(e.to_string())
            }
            other => Failure::Precondition(other.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits::from_env();
    match run(cli.command, &limits) {
        Ok(code) => code,
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn read_digraph(input: &Input) -> Result<Digraph, Failure> {
    let text = if input.file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&input.file).map_err(|e| Failure::Input(format!("{}: {e}", input.file.display())))?
    };
    Ok(parse_digraph(&text)?)
}

/// Prints `value` with the digraph fields in front when `--json` is set, `text`
/// otherwise.
fn emit(input: &Input, g: &Digraph, text: &str, mut value: Value) {
    if input.json {
        let object = value.as_object_mut().expect("JSON output is an object");
        object.insert("vertices".into(), json!(g.vertex_count()));
        object.insert("edges".into(), json!(g.edges()));
        println!("{value}");
    } else {
        println!("{text}");
    }
}

fn run(command: Command, limits: &Limits) -> Outcome {
    match command {
        Command::Check(input) => {
            let g = read_digraph(&input).map_err(|f| match f {
                Failure::Precondition(m) => Failure::Input(m),
                other => other,
            })?;
            let verdict = recognize_mp_with(&g, limits).map_err(|e| Failure::Input(e.to_string()))?;
            let label = if verdict.is_mp() { "MP" } else { "NOT-MP" };
            emit(&input, &g, &verdict.to_string(), json!({ "verdict": label, "witness": verdict.witness }));
            Ok(ExitCode::from(if verdict.is_mp() { 0 } else { 1 }))
        }
        Command::Tutte { input, method } => {
            let g = read_digraph(&input)?;
            let single = match method {
                MethodArg::Def => Some(TutteMethod::Definition),
                MethodArg::Rec => Some(TutteMethod::Recursive),
                MethodArg::Uniform => Some(TutteMethod::UniformProduct),
                MethodArg::All => None,
            };
            match single {
                Some(m) => {
                    let t = tutte(&g, m, limits)?;
                    emit(&input, &g, &t.to_string(), json!({ "method": m.name(), "polynomial": t.to_string() }));
                }
                None => {
                    let all = tutte_all(&g, limits)?;
                    let text = TutteMethod::ALL
                        .iter()
                        .zip(&all)
                        .map(|(m, t)| format!("{m}: {t}"))
                        .collect::<Vec<_>>()
                        .join("\n");
                    emit(&input, &g, &text, json!({ "method": "all", "polynomial": all[0].to_string() }));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tau { input, k } => {
            let g = read_digraph(&input)?;
            let tau = count_flowing_with(&g, k, limits)?;
            emit(&input, &g, &tau.to_string(), json!({ "k": k, "tau": tau.to_string() }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Forest(input) => {
            let g = read_digraph(&input)?;
            let forest = max_rank_spanning_forest_with(&g, limits)?;
            let rank = Matroid::multipath(&g).rank(&forest);
            let text = format!("forest: {forest}\nrank: {rank}");
            emit(&input, &g, &text, json!({ "forest": forest, "rank": rank }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Modules(input) => {
            let g = read_digraph(&input)?;
            let decomposition = dynamical_modules_with(&g, limits)?;
            let text = decomposition.modules.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            emit(&input, &g, &text, json!({ "modules": decomposition.modules }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose(input) => {
            let g = read_digraph(&input)?;
            let f = uniform_decomposition_with(&g, limits)?;
            emit(&input, &g, &f.to_string(), json!({ "factors": f.factors(), "rank": f.rank() }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Euler { input, alpha } => {
            let g = read_digraph(&input)?;
            let alpha: LaurentPoly = alpha.parse().map_err(|e: Error| Failure::Input(format!("alpha: {e}")))?;
            let chi = chi_mu_with(&g, &alpha, limits)?;
            emit(&input, &g, &chi.to_string(), json!({ "alpha": alpha.to_string(), "polynomial": chi.to_string() }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { mode, words, n, count, seed, json } => {
            let (numbers, names): (Vec<_>, Vec<_>) = words.iter().partition(|w| w.parse::<u64>().is_ok());
            let numbers: Vec<u64> = numbers.iter().map(|w| w.parse().expect("partitioned as numeric")).collect();
            let suite = match names.as_slice() {
                [] => "all",
                [one] => one.as_str(),
                _ => return Err(Failure::Input(format!("expected one suite name, got {}", names.len()))),
            };
            let suites = Suite::parse_list(suite).map_err(|e| Failure::Input(e.to_string()))?;
            let family = match mode {
                ModeArg::Exhaustive => {
                    if numbers.len() > 1 {
                        return Err(Failure::Input("exhaustive mode takes one number".into()));
                    }
                    let n = n.or(numbers.first().map(|&v| v as usize)).unwrap_or(4);
                    if n > 5 {
                        return Err(Failure::Precondition(format!("exhaustive mode supports at most 5 vertices, got {n}")));
                    }
                    Family::Exhaustive { n }
                }
                ModeArg::Random => {
                    if numbers.len() > 2 {
                        return Err(Failure::Input("random mode takes at most a count and a seed".into()));
                    }
                    let count = count.or(numbers.first().map(|&v| v as usize)).unwrap_or(100);
                    let seed = seed.or(numbers.get(1).copied()).unwrap_or(0);
                    Family::Random { count, seed, n: n.unwrap_or(6) }
                }
            };
            let report = run_verification(family, &suites, limits);
            if json {
                println!("{}", json!({ "report": report }));
            } else {
                println!("{report}");
            }
            Ok(ExitCode::from(if report.passed { 0 } else { 1 }))
        }
        Command::Gen { kind, n, p, seed } => {
            let g = match kind {
                GenArg::Random => gen_random(n, p, seed)?,
                GenArg::MpTree => gen_random_mp_tree(n, seed)?,
            };
            print!("{}", serialize_digraph(&g));
            Ok(ExitCode::SUCCESS)
        }
    }
}
