//! `statlearn`: build grid models, check formulas, fuzz the axioms and run
//! settling experiments.
//!
//! Exit codes: 0 success (or the verdict is true), 1 the verdict is false or
//! a counterexample was found, 2 usage or I/O error.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use statlearn::convergence::{run_experiment, ExperimentSummary, TrialConfig};
use statlearn::logic::axioms::{axiom_suite, AxiomSuiteConfig, ValidityReport};
use statlearn::logic::{parse, Checker, GRAMMAR};
use statlearn::model_file::{ModelFile, PlausibilitySpec};
use statlearn::{MassFunction, Model, OutcomeAlphabet, PlausibilityFn};

#[derive(Parser)]
#[command(name = "statlearn", version, about = "Plausibility-based learning of an unknown distribution")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a model file whose worlds are a simplex grid.
    Grid {
        /// Comma-separated outcome names.
        #[arg(long)]
        alphabet: String,
        /// Grid resolution N (weights are multiples of 1/N).
        #[arg(long)]
        resolution: u32,
        #[arg(long, value_enum, default_value_t = Plausibility::Entropy)]
        plausibility: Plausibility,
        /// Output path; stdout if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate a formula at every world of a model.
    #[command(after_long_help = grammar_help())]
    Check {
        #[arg(long)]
        model: PathBuf,
        /// Formula text; see `check --help` for the grammar.
        #[arg(long)]
        formula: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check the validity schemas on random models and instances.
    Axioms {
        /// Random (model, instance) pairs per schema.
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum depth of the random subformulas.
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Use the broken announcement clause (should find counterexamples).
        #[arg(long)]
        mutate: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Monte Carlo settling experiment.
    Simulate {
        #[arg(long)]
        model: PathBuf,
        /// True distribution, e.g. `5/10,3/10,2/10`.
        #[arg(long)]
        truth: String,
        /// Radius of the ball around the truth; by default half the
        /// distance from the truth to its nearest other world.
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long, default_value_t = 1000)]
        horizon: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also run a Bayesian learner with a uniform prior.
        #[arg(long)]
        baseline: bool,
        /// Write per-trial results as CSV.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Plausibility {
    Entropy,
    #[value(name = "centre_of_mass", alias = "centre-of-mass")]
    CentreOfMass,
    Uniform,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Table,
}

fn grammar_help() -> String {
    format!("Formula grammar (EBNF):\n{}\n\nInside B(..|..) and [..], a bare list of outcome names is read as observations; anything else is a formula.\nAlso accepted: decimals such as 0.55, w-terms and constants on both sides of a comparison.", GRAMMAR)
}

/// A failure that maps to exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Grid {
            alphabet,
            resolution,
            plausibility,
            output,
        } => {
            let names: Vec<&str> = alphabet.split(',').map(str::trim).collect();
            let alphabet = OutcomeAlphabet::new(&names)?;
            let mut file = ModelFile::grid(&alphabet, resolution, &PlausibilityFn::Entropy)?;
            file.plausibility = PlausibilitySpec::Named(
                match plausibility {
                    Plausibility::Entropy => "entropy",
                    Plausibility::CentreOfMass => "centre_of_mass",
                    Plausibility::Uniform => "uniform",
                }
                .into(),
            );
            let text = file.to_json() + "\n";
            match output {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure(format!("{}: {}", path.display(), e)))?,
                None => emit(&text)?,
            }
            Ok(0)
        }
        Command::Check { model, formula, format } => {
            let m = load_model(&model)?;
            let f = parse(&formula, m.alphabet()).map_err(|e| Failure(format!("formula: {}", e)))?;
            let ext = Checker::new().extension(&m, &f)?;
            let valid = ext.is_full();
            let text = match format {
                Format::Json => {
                    let worlds: Vec<_> = m
                        .worlds()
                        .iter()
                        .enumerate()
                        .map(|(i, w)| serde_json::json!({"world": w.to_string(), "verdict": ext.contains(i)}))
                        .collect();
                    let out = serde_json::json!({"formula": f.to_string(), "worlds": worlds, "valid": valid});
                    serde_json::to_string_pretty(&out)? + "\n"
                }
                Format::Table => {
                    let mut s = format!("formula: {}\n", f);
                    for (i, w) in m.worlds().iter().enumerate() {
                        writeln!(s, "{}\t{}", w, ext.contains(i)).unwrap();
                    }
                    writeln!(s, "valid: {}", valid).unwrap();
                    s
                }
            };
            emit(&text)?;
            Ok(if valid { 0 } else { 1 })
        }
        Command::Axioms {
            trials,
            seed,
            depth,
            mutate,
            format,
        } => {
            if trials == 0 {
                return Err(Failure("--trials must be at least 1".into()));
            }
            let cfg = AxiomSuiteConfig {
                trials,
                seed,
                formula_depth: depth,
                checker: if mutate { Checker::mutated() } else { Checker::new() },
                ..AxiomSuiteConfig::default()
            };
            let report = axiom_suite(&cfg)?;
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&report)? + "\n",
                Format::Table => axiom_table(&report),
            };
            emit(&text)?;
            Ok(if report.total_counterexamples() == 0 { 0 } else { 1 })
        }
        Command::Simulate {
            model,
            truth,
            eps,
            horizon,
            trials,
            seed,
            baseline,
            trace,
        } => {
            let m = load_model(&model)?;
            let truth = MassFunction::parse(m.alphabet(), &truth).map_err(|e| Failure(format!("--truth: {}", e)))?;
            let epsilon = match eps {
                Some(e) => e,
                None => TrialConfig::isolating_epsilon(m.worlds(), &truth)?
                    .ok_or_else(|| Failure("--eps is required for a single-world model".into()))?,
            };
            if trials == 0 {
                return Err(Failure("--trials must be at least 1".into()));
            }
            let cfg = TrialConfig::new(m.frame().state().clone(), truth, epsilon, horizon, seed);
            let summary = run_experiment(&cfg, trials, seed, baseline)?;
            if let Some(path) = trace {
                fs::write(&path, trace_csv(&summary))
                    .map_err(|e| Failure(format!("{}: {}", path.display(), e)))?;
            }
            emit(&(serde_json::to_string_pretty(&summary)? + "\n"))?;
            Ok(0)
        }
    }
}

fn load_model(path: &Path) -> Result<Model, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {}", path.display(), e)))?;
    ModelFile::from_json(&text)
        .and_then(|f| f.to_model())
        .map_err(|e| Failure(format!("{}: {}", path.display(), e)))
}

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn axiom_table(report: &ValidityReport) -> String {
    let mut s = format!(
        "trials {}  seed {}  depth {}\n{:<40} {:>9} {:>8} {:>8}\n",
        report.trials, report.seed, report.formula_depth, "schema", "instances", "vacuous", "failures"
    );
    for r in &report.schemas {
        writeln!(s, "{:<40} {:>9} {:>8} {:>8}", r.name, r.instances, r.vacuous, r.counterexample_count).unwrap();
        for c in &r.counterexamples {
            writeln!(s, "  trial {}: {} at {} in {}", c.trial, c.instance, c.world, c.model).unwrap();
        }
    }
    writeln!(s, "total counterexamples: {}", report.total_counterexamples()).unwrap();
    s
}

fn trace_csv(summary: &ExperimentSummary) -> String {
    let opt = |v: Option<usize>| v.map(|t| t.to_string()).unwrap_or_default();
    let mut s = String::from("trial,settled,settle_time,baseline_settle_time\n");
    for r in &summary.per_trial {
        writeln!(s, "{},{},{},{}", r.trial, r.settled, opt(r.settle_time), opt(r.baseline_settle_time)).unwrap();
    }
    s
}
